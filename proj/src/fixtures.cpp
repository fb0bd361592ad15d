// Copyright 2026 The xychain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xychain/fixtures.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "xychain/passes.hpp"
#include "xychain/route.hpp"
#include "xychain/synthesis.hpp"

namespace xychain {

namespace {

Unitary gate_u(OpType t) { return Gate::fixed(t).unitary(); }

Fixture swap_3cnot() {
  Circuit c(2);
  c.add_op(OpType::CNOT, {0, 1});
  c.add_op(OpType::CNOT, {1, 0});
  c.add_op(OpType::CNOT, {0, 1});
  return {"swap_3cnot", "SWAP from three CNOTs with alternating control", c,
          gate_u(OpType::SWAP), std::nullopt};
}

/** Square-root-of-SWAP construction of CZ, conjugated by H on the target. */
Fixture cnot_2sqrtswap() {
  Circuit c(2);
  c.add_op(OpType::H, {1});
  c.add_op(OpType::SqrtSWAP, {0, 1});
  c.add(Gate::rz(kPi), {0});
  c.add_op(OpType::SqrtSWAP, {0, 1});
  c.add(Gate::rz(kPi / 2), {0});
  c.add(Gate::rz(-kPi / 2), {1});
  c.add_op(OpType::H, {1});
  return {"cnot_2sqrtswap", "CNOT from two square-root-of-SWAP pulses", c,
          gate_u(OpType::CNOT), std::nullopt};
}

Fixture from_dressing(const std::string& name, const std::string& desc, OpType t) {
  return {name, desc, cached_dressing(t).circuit(), gate_u(t), std::nullopt};
}

Fixture toffoli_6cnot() {
  Circuit c(3);
  c.add_op(OpType::Toffoli, {0, 1, 2});
  Circuit net = decompose_toffoli(c);
  return {"toffoli_6cnot",
          "Toffoli as six CNOTs with H on the target and Rz(+-pi/4) phases", net,
          gate_u(OpType::Toffoli), std::nullopt};
}

/**
 * Toffoli on a chain with five CNS and one CNOT, all nearest-neighbour.
 * The two controls come out exchanged: wire 0 holds b, wire 1 holds a.
 */
Fixture toffoli_cns_chain() {
  const double q = kPi / 4;
  Circuit c(3);
  c.add_op(OpType::H, {2});
  c.add_op(OpType::CNS, {1, 2});  // b -> 2, c -> 1
  c.add(Gate::rz(-q), {1});
  c.add_op(OpType::CNS, {0, 1});  // a -> 1, c -> 0
  c.add(Gate::rz(q), {0});
  c.add_op(OpType::CNS, {1, 2});  // a -> 2, b -> 1
  c.add(Gate::rz(q), {2});
  c.add(Gate::rz(-q), {1});
  c.add_op(OpType::CNOT, {2, 1});
  c.add_op(OpType::CNS, {1, 0});  // b -> 0, c -> 1
  c.add(Gate::rz(-q), {1});
  c.add(Gate::rz(q), {0});
  c.add_op(OpType::CNS, {2, 1});  // c -> 2, a -> 1
  c.add(Gate::rz(q), {2});
  c.add_op(OpType::H, {2});
  c.set_qubit_map({1, 0, 2});
  return {"toffoli_cns_chain",
          "Toffoli from five CNS and one CNOT on chain(3); controls exchanged", c,
          gate_u(OpType::Toffoli), std::vector<unsigned>{1, 0, 2}};
}

/**
 * Syndrome extraction for the five-qubit code on a ring of nine sites.
 * Data qubit j sits on wire 2j and ancilla k on wire 2k+1. Ancilla k
 * measures the cyclic stabilizer X Z Z X I shifted to start at data qubit
 * (k+2) mod 5, visiting its support in the order listed in kSupport. An X
 * factor is a CNOT from the data qubit into the ancilla between Hadamards
 * on the data qubit; a Z factor is a bare CNOT.
 */
Fixture dvshor5() {
  static const unsigned kSupport[4][4] = {
      {0, 4, 3, 2}, {1, 0, 4, 3}, {2, 1, 0, 4}, {3, 2, 1, 0}};
  Circuit c(9);
  for (unsigned k = 0; k < 4; ++k) c.add_ancilla(2 * k + 1);
  for (unsigned k = 0; k < 4; ++k) {
    const unsigned anc = 2 * k + 1;
    const unsigned start = (k + 2) % 5;
    c.add_op(OpType::Init0, {anc});
    for (unsigned d : kSupport[k]) {
      unsigned offset = (d + 5 - start) % 5;
      bool x_type = offset == 0 || offset == 3;
      if (x_type) c.add_op(OpType::H, {2 * d});
      c.add_op(OpType::CNOT, {2 * d, anc});
      if (x_type) c.add_op(OpType::H, {2 * d});
    }
    c.add_op(OpType::MeasureZ, {anc});
  }
  return {"dvshor5", "five-qubit code syndrome network, four ancillas, ring(9)", c,
          std::nullopt, std::nullopt};
}

/** The syndrome network rearranged into CNS gates by the ring router. */
Fixture dvshor5_cns() {
  Fixture base = dvshor5();
  RouteOptions opt;
  opt.model = CostModel::Iswap;
  opt.goal = LayoutGoal::Periodic;
  RouteResult r = route_circuit(base.circuit, Topology::ring(9), opt);
  Circuit fused = fuse_cns(r.circuit);
  return {"dvshor5_cns",
          "syndrome network with CNS gates on ring(9); data rotated around the ring",
          fused, circuit_unitary(coherent_core(base.circuit)), r.final_layout};
}

using Builder = Fixture (*)();

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"swap_3cnot", swap_3cnot},
      {"cnot_2sqrtswap", cnot_2sqrtswap},
      {"cnot_2iswap",
       [] { return from_dressing("cnot_2iswap", "CNOT from two iSWAPs", OpType::CNOT); }},
      {"swap_3iswap",
       [] { return from_dressing("swap_3iswap", "SWAP from three iSWAPs", OpType::SWAP); }},
      {"cns_def",
       [] { return from_dressing("cns_def", "CNS (CNOT then SWAP) from one iSWAP", OpType::CNS); }},
      {"toffoli_6cnot", toffoli_6cnot},
      {"toffoli_cns_chain", toffoli_cns_chain},
      {"dvshor5", dvshor5},
      {"dvshor5_cns", dvshor5_cns},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : builders()) out.push_back(name);
    return out;
  }();
  return names;
}

double fixture_residual(const Fixture& f) {
  if (!f.reference) return 0.0;
  Unitary u = circuit_unitary(coherent_core(f.circuit));
  const unsigned n = f.circuit.n_qubits();
  CMatrix expected = f.reference->matrix();
  if (f.permutation) expected = perm_matrix(*f.permutation, n).matrix() * expected;
  return dist_phase(expected, u.matrix());
}

Fixture fixture(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, Fixture> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  const auto& table = builders();
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const auto& e) { return e.first == name; });
  if (it == table.end()) throw std::out_of_range("unknown fixture '" + name + "'");
  Fixture f = it->second();
  double residual = fixture_residual(f);
  if (!(residual <= kAccumulatedTolerance)) {
    throw FixtureError(
        "fixture '" + name + "' fails its oracle check (residual " +
        std::to_string(residual) + ")");
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(name, f);
  return f;
}

}  // namespace xychain
