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

#include "xychain/pipeline.hpp"

#include <chrono>
#include <tuple>

#include "xychain/passes.hpp"
#include "xychain/route.hpp"
#include "xychain/schedule.hpp"
#include "xychain/synthesis.hpp"

namespace xychain {

namespace {

constexpr unsigned kMeasurementTrials = 20;
constexpr int kSimplifyRounds = 32;

unsigned total_iswap_cost(const Circuit& c) {
  unsigned total = 0;
  for (const Instruction& instr : c.instructions()) total += iswap_cost(instr.gate.type());
  return total;
}

unsigned count_of(const Census& census, OpType t) {
  auto it = census.find(t);
  return it == census.end() ? 0 : it->second;
}

/** (one-qubit critical path, makespan, size) of a lowered circuit. */
std::tuple<double, double, std::size_t> timing_key(const Circuit& c, const Topology& topo) {
  Schedule s = asap(c, topo, DeviceModel());
  auto q = [](double t) { return std::round(t * 1e9) / 1e9; };
  return {q(s.makespan_1bit), q(s.makespan), c.size()};
}

Circuit simplify_fixpoint(const Circuit& c, const Topology& topo) {
  Circuit best = simplify_1q(c, true);
  auto best_key = timing_key(best, topo);
  for (int round = 0; round < kSimplifyRounds; ++round) {
    bool improved = false;
    for (FlipDirection dir : {FlipDirection::Forward, FlipDirection::Backward}) {
      Circuit cand = simplify_1q(float_rz(best, dir), true);
      auto key = timing_key(cand, topo);
      if (key < best_key) {
        best = std::move(cand);
        best_key = key;
        improved = true;
      }
    }
    if (!improved) return best;
  }
  throw std::logic_error("one-qubit simplification did not settle");
}

class Recorder {
 public:
  Recorder(const Circuit& reference, const PipelineOptions& opt, std::vector<PassRecord>& out)
      : reference_(reference), opt_(opt), out_(out) {
    if (reference.n_qubits() <= kMaxVerifyQubits) {
      ref_unitary_ = circuit_unitary(coherent_core(reference)).matrix();
    }
  }

  /** Times `fn`, records its output; `coherent` enables the unitary residual. */
  template <typename Fn>
  Circuit run(const std::string& name, Equivalence preserves, bool coherent, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Circuit out = fn();
    auto t1 = std::chrono::steady_clock::now();
    PassRecord rec;
    rec.name = name;
    rec.preserves = std::string(equivalence_name(preserves));
    rec.census = gate_census(out);
    rec.iswap_cost = total_iswap_cost(out);
    if (coherent) rec.residual = residual(out);
    if (opt_.timing) rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out_.push_back(std::move(rec));
    return out;
  }

  std::optional<double> residual(const Circuit& c) const {
    if (!ref_unitary_) return std::nullopt;
    std::vector<unsigned> pi = declared_permutation(reference_, c);
    CMatrix expected = perm_matrix(pi, c.n_qubits()).matrix() * *ref_unitary_;
    return dist_phase(expected, circuit_unitary(coherent_core(c)).matrix());
  }

 private:
  const Circuit& reference_;
  const PipelineOptions& opt_;
  std::vector<PassRecord>& out_;
  std::optional<CMatrix> ref_unitary_;
};

Circuit append_restore_swaps(const Circuit& c, const Topology& topo, unsigned* added) {
  Circuit out = c;
  std::vector<unsigned> map = c.qubit_map();
  auto swaps = restore_swaps(map, topo);
  for (auto [x, y] : swaps) {
    out.add_op(OpType::SWAP, {x, y});
    for (unsigned& p : map) {
      if (p == x) p = y;
      else if (p == y) p = x;
    }
  }
  out.set_qubit_map(map);
  if (added) *added = static_cast<unsigned>(swaps.size());
  return out;
}

}  // namespace

std::string_view mode_name(PipelineMode m) {
  switch (m) {
    case PipelineMode::Default: return "default";
    case PipelineMode::Naive: return "naive";
    case PipelineMode::CnotCount: return "cnot-count";
  }
  return "?";
}

Circuit pad_to(const Circuit& c, unsigned n) {
  if (c.n_qubits() > n) {
    throw InvalidQubits("circuit has more qubits than the topology has sites");
  }
  if (c.n_qubits() == n) return c;
  Circuit out(n);
  out.set_ancillas(c.ancillas());
  out.set_instructions(c.instructions());
  std::vector<unsigned> map = c.qubit_map();
  for (unsigned l = c.n_qubits(); l < n; ++l) map.push_back(l);
  out.set_qubit_map(map);
  return out;
}

PipelineReport run_pipeline(
    const Circuit& c, const Topology& topo, const PipelineOptions& options) {
  const Circuit input = pad_to(c, topo.n());

  auto attempt = [&](bool relax) {
    PipelineReport rep;
    rep.options = options;
    rep.topology = topo;
    rep.input = input;
    Recorder rec(input, options, rep.passes);

    Circuit cur = rec.run("decompose_toffoli", Equivalence::GlobalPhase, true,
                          [&] { return decompose_toffoli(input); });
    unsigned pending_restore = 0;
    if (options.mode == PipelineMode::Default) {
      RouteOptions ro;
      ro.model = CostModel::Iswap;
      ro.goal = LayoutGoal::Auto;
      ro.relax_blocks = relax;
      cur = rec.run("route", Equivalence::PhasePermutation, true,
                    [&] { return route_circuit(cur, topo, ro).circuit; });
      cur = rec.run("fuse_cns", Equivalence::PhasePermutation, true,
                    [&] { return fuse_cns(cur); });
    } else {
      const bool as_cnots = options.mode == PipelineMode::CnotCount;
      cur = rec.run(as_cnots ? "route_naive_cnot" : "route_naive",
                    Equivalence::PhasePermutation, true,
                    [&] { return route_naive(cur, topo, as_cnots); });
      if (as_cnots) {
        rep.cnot_search = count_of(gate_census(swaps_to_cnots(route_naive(
                                       decompose_toffoli(input), topo))),
                                   OpType::CNOT);
      }
    }
    pending_restore = static_cast<unsigned>(restore_swaps(cur.qubit_map(), topo).size());
    if (options.restore_order) {
      cur = rec.run("restore_order", Equivalence::GlobalPhase, true,
                    [&] { return append_restore_swaps(cur, topo, nullptr); });
      pending_restore = 0;
    }
    Census routed = gate_census(cur);
    rep.standalone_cnot = count_of(routed, OpType::CNOT);
    rep.standalone_swap = count_of(routed, OpType::SWAP);
    rep.cnot = rep.standalone_cnot;
    rep.iswap_if_restored = total_iswap_cost(cur) + 3 * pending_restore;

    cur = rec.run("lower_to_iswap", Equivalence::GlobalPhase, true,
                  [&] { return lower_to_iswap(cur); });
    cur = rec.run("simplify_1q", Equivalence::GlobalPhase, true,
                  [&] { return simplify_fixpoint(cur, topo); });
    cur = rec.run("optimize_gauge", Equivalence::GlobalPhase, true,
                  [&] { return optimize_gauge(cur, false, options.seed); });
    rep.oracle_residual = rec.residual(cur);

    const bool has_ancillas = !input.ancillas().empty();
    if (has_ancillas) {
      cur = rec.run("ancilla_elide", Equivalence::Measurement, false, [&] {
        return optimize_gauge(ancilla_elide(cur), true, options.seed);
      });
    }
    rep.output = cur;
    rep.census = gate_census(cur);
    rep.iswap = count_of(rep.census, OpType::ISWAP);
    rep.permutation = cur.qubit_map();
    if (has_ancillas && input.n_qubits() <= kMaxVerifyQubits) {
      rep.measurement_trials = kMeasurementTrials;
      rep.measurement = measurement_equivalent(input, cur, kMeasurementTrials, options.seed);
    }
    return rep;
  };

  auto breached = [](const PipelineReport& r) {
    return (r.oracle_residual && *r.oracle_residual > kAccumulatedTolerance) ||
           (r.measurement && !r.measurement->equivalent);
  };

  PipelineReport rep = attempt(true);
  if (breached(rep) && options.mode == PipelineMode::Default) rep = attempt(false);
  if (rep.oracle_residual && *rep.oracle_residual > kAccumulatedTolerance) {
    throw OracleBreach("compiled circuit differs from its input (residual " +
                           std::to_string(*rep.oracle_residual) + ")",
                       *rep.oracle_residual);
  }
  if (rep.measurement && !rep.measurement->equivalent) {
    throw OracleBreach("measurement statistics differ: " +
                           rep.measurement->witness.value_or("?"),
                       rep.measurement->residual);
  }
  return rep;
}

nlohmann::json census_json(const Census& census) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [t, k] : census) j[std::string(op_name(t))] = k;
  return j;
}

nlohmann::json PipelineReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["seed"] = options.seed;
  j["topology"] = topology.to_string();
  j["mode"] = std::string(mode_name(options.mode));
  j["restore_order"] = options.restore_order;
  j["qubits"] = output.n_qubits();
  j["census"] = census_json(census);
  j["iswap"] = iswap;
  j["cnot"] = cnot;
  j["cnot_search"] = cnot_search ? nlohmann::json(*cnot_search) : nlohmann::json();
  j["standalone_cnot"] = standalone_cnot;
  j["standalone_swap"] = standalone_swap;
  j["iswap_if_restored"] = iswap_if_restored;
  j["permutation"] = permutation;
  j["oracle_residual"] = oracle_residual ? nlohmann::json(*oracle_residual) : nlohmann::json();
  if (measurement) {
    j["measurement"] = {{"trials", measurement_trials},
                        {"equivalent", measurement->equivalent},
                        {"residual", measurement->residual}};
  } else {
    j["measurement"] = nullptr;
  }
  nlohmann::json ps = nlohmann::json::array();
  for (const PassRecord& p : passes) {
    nlohmann::json item;
    item["name"] = p.name;
    item["preserves"] = p.preserves;
    item["census"] = census_json(p.census);
    item["iswap_cost"] = p.iswap_cost;
    item["residual"] = p.residual ? nlohmann::json(*p.residual) : nlohmann::json();
    if (p.wall_ms) item["wall_ms"] = *p.wall_ms;
    ps.push_back(std::move(item));
  }
  j["passes"] = std::move(ps);
  return j;
}

}  // namespace xychain
