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
#include "xychain/gates.hpp"

namespace xychain {
namespace {

using test::matrix_of;

/** Independent Makhlin computation: m = (Q^dag U Q)^T (Q^dag U Q). */
LocalInvariants makhlin_oracle(const CMatrix& u) {
  const double s = 1 / std::sqrt(2.0);
  CMatrix q(4, 4);
  q << 1, 0, 0, kI,
       0, kI, 1, 0,
       0, kI, -1, 0,
       1, 0, 0, -kI;
  q *= s;
  const CMatrix ub = q.adjoint() * u * q;
  const CMatrix m = ub.transpose() * ub;
  const Complex det = u.determinant();
  const Complex tr = m.trace();
  const Complex tr2 = (m * m).trace();
  return {tr * tr / (16.0 * det), ((tr * tr - tr2) / (4.0 * det)).real()};
}

TEST_CASE("catalog matrices act as documented", "[gates]") {
  CVector in = CVector::Zero(4);
  in(1) = 1;  // |01>
  CVector out = matrix_of(OpType::ISWAP) * in;
  CHECK(std::abs(out(2) - kI) < 1e-15);

  in.setZero();
  in(3) = 1;  // |11>
  out = matrix_of(OpType::CNS) * in;
  CHECK(std::abs(out(1) - 1.0) < 1e-15);  // |01>

  const CMatrix r = matrix_of(OpType::SqrtSWAP);
  CHECK(dist_phase(r * r, matrix_of(OpType::SWAP)) < 1e-10);

  CHECK_THROWS(Gate::fixed(OpType::MeasureZ).unitary());
  CHECK_THROWS(Gate::fixed(OpType::Rx));
}

TEST_CASE("Hamiltonian evolutions give the native gates", "[gates]") {
  const double e = 1.7;
  const double t = kPi / e;
  CHECK(max_abs(evolve({HamiltonianKind::XY, e}, t).matrix() - matrix_of(OpType::ISWAP)) < 1e-10);

  const Complex w = std::exp(kI * kPi / 4.0);
  CHECK(max_abs(evolve({HamiltonianKind::JJ, e}, t).matrix() - w * matrix_of(OpType::SWAP)) <
        1e-10);

  CMatrix d = CMatrix::Zero(4, 4);
  d.diagonal() << 1, -kI, -kI, 1;
  CHECK(max_abs(evolve({HamiltonianKind::ZZ, e}, t).matrix() - w * d) < 1e-10);

  // Half a period gives the other square root of SWAP.
  CHECK(dist_phase(evolve({HamiltonianKind::JJ, e}, 0.5 * t).matrix(),
                   matrix_of(OpType::SqrtSWAP).adjoint()) < 1e-10);
}

TEST_CASE("iSWAP and CNS factorizations", "[gates]") {
  CHECK(max_abs(matrix_of(OpType::PhaseDiag) * matrix_of(OpType::SWAP) -
                matrix_of(OpType::ISWAP)) < 1e-15);
  CHECK(max_abs(matrix_of(OpType::SWAP) * matrix_of(OpType::CNOT) - matrix_of(OpType::CNS)) <
        1e-15);
}

TEST_CASE("Makhlin invariants of the named gates", "[gates]") {
  struct Row {
    OpType type;
    Complex g1;
    double g2;
  };
  // Values computed with makhlin_oracle above, then frozen.
  const Row rows[] = {
      {OpType::CNOT, 0.0, 1.0},
      {OpType::SWAP, -1.0, -3.0},
      {OpType::ISWAP, 0.0, -1.0},
  };
  for (const Row& r : rows) {
    LocalInvariants oracle = makhlin_oracle(matrix_of(r.type));
    LocalInvariants lib = local_invariants(Unitary(matrix_of(r.type)));
    CHECK(std::abs(oracle.g1 - r.g1) < 1e-12);
    CHECK(std::abs(oracle.g2 - r.g2) < 1e-12);
    CHECK(std::abs(lib.g1 - r.g1) < 1e-12);
    CHECK(std::abs(lib.g2 - r.g2) < 1e-12);
  }
  CHECK_THROWS(local_invariants(Unitary(pauli_x())));
}

TEST_CASE("local equivalence", "[gates]") {
  auto u = [](OpType t) { return Unitary(matrix_of(t)); };
  CHECK(locally_equivalent(u(OpType::PhaseDiag), u(OpType::CNOT)));
  CHECK(locally_equivalent(u(OpType::CNS), u(OpType::ISWAP)));
  CHECK_FALSE(locally_equivalent(evolve({HamiltonianKind::XY, 1.0}, kPi), u(OpType::CNOT)));
  CHECK_FALSE(locally_equivalent(u(OpType::CNOT), u(OpType::SWAP)));
  CHECK_FALSE(locally_equivalent(u(OpType::SWAP), u(OpType::ISWAP)));
}

TEST_CASE("invariants ignore one-qubit dressing", "[gates]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix g = test::random_unitary(4, rng);
    const CMatrix a = test::random_unitary(2, rng), b = test::random_unitary(2, rng);
    const CMatrix c = test::random_unitary(2, rng), d = test::random_unitary(2, rng);
    const CMatrix dressed = tensor(a, b) * g * tensor(c, d);
    REQUIRE(locally_equivalent(Unitary(g), Unitary(dressed)));
    LocalInvariants x = local_invariants(Unitary(g));
    LocalInvariants y = makhlin_oracle(dressed);
    REQUIRE(std::abs(x.g1 - y.g1) < 1e-9);
    REQUIRE(std::abs(x.g2 - y.g2) < 1e-9);
  }
}

TEST_CASE("angle normalization", "[gates]") {
  CHECK(canonical_angle(3 * kPi / 2) == Catch::Approx(-kPi / 2));
  CHECK(canonical_angle(-kPi) == Catch::Approx(kPi));
  CHECK(normalize_angle(5 * kPi) == Catch::Approx(kPi));
  CHECK(Gate::rz(4 * kPi + 0.5).angle() == Catch::Approx(0.5));
  CHECK(dist_phase(rx_matrix(2 * kPi), CMatrix::Identity(2, 2)) < 1e-15);
  CHECK(max_abs(rx_matrix(2 * kPi) + CMatrix::Identity(2, 2)) < 1e-15);
}

}  // namespace
}  // namespace xychain
