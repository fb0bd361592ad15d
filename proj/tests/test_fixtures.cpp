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
#include "xychain/verify.hpp"

namespace xychain {
namespace {

using test::matrix_of;

TEST_CASE("every fixture matches its reference", "[fixtures]") {
  REQUIRE(fixture_names().size() == 9);
  for (const std::string& name : fixture_names()) {
    const Fixture f = fixture(name);
    INFO(name);
    CHECK(f.name == name);
    CHECK_FALSE(f.description.empty());
    CHECK(fixture_residual(f) <= 1e-8);
  }
  CHECK_THROWS_AS(fixture("nope"), std::out_of_range);
}

TEST_CASE("fixture contents", "[fixtures]") {
  CHECK(dist_phase(circuit_unitary(fixture("swap_3cnot").circuit).matrix(),
                   matrix_of(OpType::SWAP)) <= 1e-12);
  CHECK(gate_census(fixture("swap_3cnot").circuit).at(OpType::CNOT) == 3);
  CHECK(gate_census(fixture("cnot_2sqrtswap").circuit).at(OpType::SqrtSWAP) == 2);
  CHECK(gate_census(fixture("cnot_2iswap").circuit).at(OpType::ISWAP) == 2);
  CHECK(gate_census(fixture("swap_3iswap").circuit).at(OpType::ISWAP) == 3);

  const Circuit tof = fixture("toffoli_6cnot").circuit;
  CHECK(gate_census(tof).at(OpType::CNOT) == 6);
  CHECK(count_two_qubit(tof) == 6);

  const Fixture chain = fixture("toffoli_cns_chain");
  CHECK(is_topology_legal(chain.circuit, Topology::chain(3)));
  CHECK(gate_census(chain.circuit).at(OpType::CNS) == 5);
  CHECK(gate_census(chain.circuit).at(OpType::CNOT) == 1);
  CHECK(chain.permutation == std::vector<unsigned>{1, 0, 2});

  const Circuit ecc = fixture("dvshor5").circuit;
  CHECK(ecc.n_qubits() == 9);
  CHECK(ecc.ancillas() == std::set<unsigned>{1, 3, 5, 7});
  CHECK(gate_census(ecc).at(OpType::CNOT) == 16);
  for (const Instruction& i : ecc.instructions()) {
    const OpType t = i.gate.type();
    CHECK((t == OpType::CNOT || t == OpType::H || t == OpType::Init0 || t == OpType::MeasureZ));
  }

  const Fixture ecc_cns = fixture("dvshor5_cns");
  CHECK(is_topology_legal(ecc_cns.circuit, Topology::ring(9)));
  CHECK(gate_census(ecc_cns.circuit).at(OpType::Init0) == 4);
  CHECK(gate_census(ecc_cns.circuit).at(OpType::MeasureZ) == 4);
}

TEST_CASE("one-qubit gates of the six-CNOT Toffoli", "[fixtures]") {
  const double t = std::sqrt(2.0) - 1;
  CMatrix a(2, 2), b(2, 2), c(2, 2), d(2, 2);
  a << 1, 0, 0, kI;
  b << 1, -t, t, 1;
  c << 1, t, kI * t, -kI;
  d << 1, 0, 0, std::exp(-kI * kPi / 4.0);

  for (CMatrix* m : {&a, &b, &c, &d}) {
    const CMatrix u = *m / m->col(0).norm();
    CHECK(max_abs(u.adjoint() * u - CMatrix::Identity(2, 2)) < 1e-12);
  }
  const double n = std::sqrt(1 + t * t);
  CHECK(dist_phase(a, rz_matrix(kPi / 2)) < 1e-12);
  CHECK(dist_phase(d, rz_matrix(-kPi / 4)) < 1e-12);
  // B is a real rotation by pi/8; C is A after a reflection about that axis.
  CMatrix ry(2, 2);
  ry << std::cos(kPi / 8), -std::sin(kPi / 8), std::sin(kPi / 8), std::cos(kPi / 8);
  CHECK(dist_phase(b / n, ry) < 1e-12);
  CMatrix refl(2, 2);
  refl << std::cos(kPi / 8), std::sin(kPi / 8), std::sin(kPi / 8), -std::cos(kPi / 8);
  CHECK(dist_phase(c / n, a * refl) < 1e-12);
  // The six-CNOT fixture uses the same phase family: Rz(+-pi/4) and Rz(pi/2).
  CHECK(dist_phase(d * d, a.adjoint()) < 1e-12);
}

}  // namespace
}  // namespace xychain
