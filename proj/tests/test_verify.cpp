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

#include "catch_amalgamated.hpp"

#include "test_util.hpp"
#include "xychain/fixtures.hpp"
#include "xychain/passes.hpp"
#include "xychain/verify.hpp"

namespace xychain {
namespace {

using test::matrix_of;

TEST_CASE("statevector action of the coupling gates", "[verify]") {
  Circuit is(2);
  is.add_op(OpType::ISWAP, {0, 1});
  Statevector out = apply(is, Statevector::basis(2, 0b01));
  CHECK(std::abs(out[0b10] - kI) < 1e-15);
  CHECK(std::abs(out[0b01]) < 1e-15);

  Circuit cns(2);
  cns.add_op(OpType::CNS, {0, 1});
  out = apply(cns, Statevector::basis(2, 0b10));
  // Control 1 flips the target, then the wires exchange.
  CHECK(std::abs(out[0b11] - 1.0) < 1e-15);
  out = apply(cns, Statevector::basis(2, 0b11));
  CHECK(std::abs(out[0b01] - 1.0) < 1e-15);

  // Three qubits, coupling between the outer wires.
  Circuit outer(3);
  outer.add_op(OpType::ISWAP, {0, 2});
  out = apply(outer, Statevector::basis(3, 0b001));
  CHECK(std::abs(out[0b100] - kI) < 1e-15);
}

TEST_CASE("statevector and dense unitary agree", "[verify]") {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 30; ++trial) {
    Circuit c = test::random_circuit(4, 12, rng);
    Statevector psi = Statevector::random(4, rng);
    CHECK(std::abs(psi.norm() - 1) < 1e-12);
    const CVector dense = circuit_unitary(c).matrix() * psi.amplitudes();
    REQUIRE((apply(c, psi).amplitudes() - dense).norm() < 1e-10);
  }
  CHECK_THROWS_AS(Statevector(1, CVector::Ones(2)), NotUnitary);
}

TEST_CASE("equivalence classes", "[verify]") {
  const Circuit cns = fixture("cns_def").circuit;
  Circuit split(2);
  split.add_op(OpType::CNOT, {0, 1});
  split.add_op(OpType::SWAP, {0, 1});
  CHECK(equivalent(cns, split, EquivClass::Phase).equivalent);

  Circuit cnot(2), iswap(2);
  cnot.add_op(OpType::CNOT, {0, 1});
  iswap.add_op(OpType::ISWAP, {0, 1});
  EquivalenceReport local = equivalent(cnot, iswap, EquivClass::Local);
  CHECK_FALSE(local.equivalent);
  CHECK(local.witness);
  CHECK(equivalent(fixture("cnot_2iswap").circuit, cnot, EquivClass::Local).equivalent);

  Circuit cz(2);
  cz.add_op(OpType::H, {1});
  cz.add_op(OpType::CNOT, {0, 1});
  cz.add_op(OpType::H, {1});
  EquivalenceReport exact = equivalent(cz, cnot, EquivClass::Exact);
  CHECK_FALSE(exact.equivalent);
  CHECK(exact.residual > 0.5);

  Circuit shifted(2);
  shifted.add(Gate::rz(0.4), {0});
  shifted.add(Gate::rz(0.4), {1});
  Circuit global(2);
  global.add(Gate::rz(0.8), {0});
  CHECK_FALSE(equivalent(shifted, global, EquivClass::Phase).equivalent);
}

TEST_CASE("permutations need to be declared or given", "[verify]") {
  const Circuit cns = fixture("cns_def").circuit;
  Circuit cnot(2);
  cnot.add_op(OpType::CNOT, {0, 1});
  CHECK_THROWS_AS(equivalent(cnot, cns, EquivClass::PhasePermutation), MissingPermutation);
  EquivalenceReport r =
      equivalent(cnot, cns, EquivClass::PhasePermutation, std::vector<unsigned>{1, 0});
  CHECK(r.equivalent);
  CHECK(r.permutation == std::vector<unsigned>{1, 0});

  Circuit routed = cns;
  routed.set_qubit_map({1, 0});
  CHECK(declared_permutation(cnot, routed) == std::vector<unsigned>{1, 0});
  CHECK_FALSE(equivalent(cnot, routed, EquivClass::Phase).equivalent);
  CHECK(equivalent(cnot, routed, EquivClass::Phase, declared_permutation(cnot, routed))
            .equivalent);

  Fixture t = fixture("toffoli_cns_chain");
  Circuit tof(3);
  tof.add_op(OpType::Toffoli, {0, 1, 2});
  CHECK(equivalent(tof, t.circuit, EquivClass::PhasePermutation, t.permutation).equivalent);
}

TEST_CASE("the rearranged syndrome network", "[verify]") {
  const Fixture base = fixture("dvshor5");
  const Fixture cns = fixture("dvshor5_cns");
  REQUIRE(cns.permutation);
  EquivalenceReport coherent =
      equivalent(coherent_core(base.circuit), coherent_core(cns.circuit),
                 EquivClass::PhasePermutation, cns.permutation);
  CHECK(coherent.equivalent);
  CHECK(coherent.residual <= 1e-8);
  CHECK(measurement_equivalent(base.circuit, cns.circuit, 5, 1).equivalent);
}

TEST_CASE("measurement equivalence", "[verify][property]") {
  const Circuit ecc = fixture("dvshor5").circuit;
  const Circuit elided = ancilla_elide(ecc);
  CHECK(equivalent(ecc, elided, EquivClass::Measurement).equivalent);

  // A basis change on one ancilla just before readout changes the statistics.
  std::vector<Instruction> instrs = ecc.instructions();
  Circuit broken(ecc.n_qubits());
  for (unsigned q : ecc.ancillas()) broken.add_ancilla(q);
  bool inserted = false;
  for (const Instruction& i : instrs) {
    if (!inserted && i.gate.type() == OpType::MeasureZ) {
      broken.add(Gate::rx(kPi / 2), i.qubits);
      inserted = true;
    }
    broken.add(i.gate, i.qubits);
  }
  EquivalenceReport r = equivalent(ecc, broken, EquivClass::Measurement);
  CHECK_FALSE(r.equivalent);
  CHECK(r.witness);

  Circuit other(9);
  other.add_ancilla(1);
  other.add_op(OpType::Init0, {1});
  other.add_op(OpType::MeasureZ, {1});
  CHECK_THROWS_AS(measurement_equivalent(ecc, other, 2, 0), AncillaMismatch);
}

TEST_CASE("equivalence class names", "[verify]") {
  for (EquivClass k : {EquivClass::Exact, EquivClass::Phase, EquivClass::PhasePermutation,
                       EquivClass::Local, EquivClass::Measurement}) {
    CHECK(parse_equiv_class(std::string(equiv_class_name(k))) == k);
  }
  CHECK(equiv_class_name(EquivClass::PhasePermutation) == "phase+permutation");
  CHECK_THROWS(parse_equiv_class("default"));
}

}  // namespace
}  // namespace xychain
