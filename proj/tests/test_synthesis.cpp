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
#include "xychain/passes.hpp"
#include "xychain/synthesis.hpp"

namespace xychain {
namespace {

using test::matrix_of;

TEST_CASE("Euler decompositions reproduce random unitaries", "[synthesis]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const CMatrix u = test::random_unitary(2, rng);
    for (const RotationSeq& seq : {euler_zxz(u), euler_xzx(u), euler_best(u)}) {
      REQUIRE(dist_phase(seq_matrix(seq), u) < 1e-10);
      REQUIRE(seq.size() <= 3);
    }
    REQUIRE(rotation_time(euler_best(u)) <=
            std::min(rotation_time(euler_zxz(u)), rotation_time(euler_xzx(u))) + 1e-12);
  }
  CHECK(euler_best(CMatrix::Identity(2, 2)).empty());
  CHECK(rotation_time(euler_best(matrix_of(OpType::H))) == Catch::Approx(1.5 * kPi));
}

TEST_CASE("Clifford table", "[synthesis]") {
  const auto& table = clifford_table();
  REQUIRE(table.size() == 24);
  CHECK(table[0].seq.empty());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(dist_phase(seq_matrix(table[i].seq), table[i].matrix) < 1e-12);
    for (std::size_t j = 0; j < i; ++j) CHECK(dist_phase(table[i].matrix, table[j].matrix) > 0.1);
    for (const Gate& g : table[i].seq) {
      const double k = g.angle() / (kPi / 2);
      CHECK(std::abs(k - std::round(k)) < 1e-12);
    }
    // Y, a half turn about the axis orthogonal to both, is the costliest.
    CHECK(rotation_time(table[i].seq) <= 2 * kPi + 1e-12);
  }
}

TEST_CASE("dressing feasibility follows the invariants", "[synthesis]") {
  const Unitary cnot(matrix_of(OpType::CNOT));
  const Unitary swap(matrix_of(OpType::SWAP));
  CHECK_THROWS_AS(synthesize_dressing(cnot, 1), SynthesisError);
  CHECK_THROWS_AS(synthesize_dressing(swap, 2), SynthesisError);

  SynthesizedDressing c2 = synthesize_dressing(cnot, 2);
  CHECK(c2.residual <= 1e-8);
  CHECK(c2.layers.size() == 3);
  CHECK(dist_phase(circuit_unitary(c2.circuit()).matrix(), cnot.matrix()) <= 1e-8);

  SynthesizedDressing s3 = synthesize_dressing(swap, 3);
  CHECK(s3.residual <= 1e-8);
  CHECK(dist_phase(circuit_unitary(s3.circuit()).matrix(), swap.matrix()) <= 1e-8);

  SynthesizedDressing cns = synthesize_dressing(Unitary(matrix_of(OpType::CNS)), 1);
  CHECK(dist_phase(circuit_unitary(cns.circuit()).matrix(), matrix_of(OpType::CNS)) <= 1e-8);
}

TEST_CASE("non-Clifford targets go through the numeric search", "[synthesis]") {
  std::mt19937_64 rng(2);
  const CMatrix target = test::random_unitary(4, rng);
  SynthesizedDressing d = synthesize_dressing(Unitary(target), 3, 7);
  CHECK(d.residual <= 1e-8);
  CHECK(dist_phase(circuit_unitary(d.circuit()).matrix(), target) <= 1e-8);
}

TEST_CASE("iSWAP costs and lowering", "[synthesis]") {
  CHECK(iswap_cost(OpType::CNOT) == 2);
  CHECK(iswap_cost(OpType::CNS) == 1);
  CHECK(iswap_cost(OpType::SWAP) == 3);
  CHECK(iswap_cost(OpType::ISWAP) == 1);
  CHECK(iswap_cost(OpType::Rx) == 0);

  for (OpType t : {OpType::CNOT, OpType::CNS, OpType::SWAP}) {
    Circuit c(2);
    c.add_op(t, {0, 1});
    Circuit low = lower_to_iswap(c);
    Census census = gate_census(low);
    INFO(op_name(t));
    CHECK(census[OpType::ISWAP] == iswap_cost(t));
    for (const auto& [k, n] : census) {
      CHECK((k == OpType::ISWAP || k == OpType::Rx || k == OpType::Rz));
    }
    CHECK(dist_phase(circuit_unitary(low).matrix(), matrix_of(t)) <= 1e-8);
  }
  CHECK(&cached_dressing(OpType::CNOT) == &cached_dressing(OpType::CNOT));
}

}  // namespace
}  // namespace xychain
