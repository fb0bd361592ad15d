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

#include "xychain/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace xychain {

std::string_view op_name(OpType type) {
  switch (type) {
    case OpType::Rx: return "rx";
    case OpType::Rz: return "rz";
    case OpType::H: return "h";
    case OpType::Generic1Q: return "u1";
    case OpType::CNOT: return "cnot";
    case OpType::SWAP: return "swap";
    case OpType::ISWAP: return "iswap";
    case OpType::SqrtSWAP: return "sqrtswap";
    case OpType::PhaseDiag: return "phasediag";
    case OpType::CNS: return "cns";
    case OpType::Toffoli: return "toffoli";
    case OpType::Init0: return "init0";
    case OpType::MeasureZ: return "measz";
  }
  return "?";
}

unsigned op_arity(OpType type) {
  switch (type) {
    case OpType::CNOT:
    case OpType::SWAP:
    case OpType::ISWAP:
    case OpType::SqrtSWAP:
    case OpType::PhaseDiag:
    case OpType::CNS:
      return 2;
    case OpType::Toffoli:
      return 3;
    default:
      return 1;
  }
}

bool is_rotation(OpType type) {
  return type == OpType::Rx || type == OpType::Rz;
}

bool is_unitary_op(OpType type) {
  return type != OpType::Init0 && type != OpType::MeasureZ;
}

bool is_two_qubit(OpType type) { return op_arity(type) == 2; }

double normalize_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("non-finite angle");
  double r = std::fmod(theta, 4 * kPi);
  if (r <= -2 * kPi) r += 4 * kPi;
  if (r > 2 * kPi) r -= 4 * kPi;
  return r;
}

double canonical_angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("non-finite angle");
  double r = std::fmod(theta, 2 * kPi);
  if (r <= -kPi) r += 2 * kPi;
  if (r > kPi) r -= 2 * kPi;
  return r;
}

CMatrix rx_matrix(double theta) {
  CMatrix m(2, 2);
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -kI * s, -kI * s, c;
  return m;
}

CMatrix rz_matrix(double theta) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = std::exp(-kI * (theta / 2));
  m(1, 1) = std::exp(kI * (theta / 2));
  return m;
}

const CMatrix& pauli_x() {
  static const CMatrix m = [] {
    CMatrix x(2, 2);
    x << 0, 1, 1, 0;
    return x;
  }();
  return m;
}

const CMatrix& pauli_y() {
  static const CMatrix m = [] {
    CMatrix y(2, 2);
    y << 0, -kI, kI, 0;
    return y;
  }();
  return m;
}

const CMatrix& pauli_z() {
  static const CMatrix m = [] {
    CMatrix z(2, 2);
    z << 1, 0, 0, -1;
    return z;
  }();
  return m;
}

Gate Gate::rx(double theta) { return Gate(OpType::Rx, normalize_angle(theta)); }

Gate Gate::rz(double theta) { return Gate(OpType::Rz, normalize_angle(theta)); }

Gate Gate::rotation(OpType axis, double theta) {
  if (!is_rotation(axis)) throw std::invalid_argument("not a rotation axis");
  return Gate(axis, normalize_angle(theta));
}

Gate Gate::generic1q(const CMatrix& u, std::string name) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw DimensionMismatch("Generic1Q needs a 2x2 matrix");
  }
  Unitary checked(u, 1e-9);
  Gate g(OpType::Generic1Q, 0.0);
  g.generic_ = checked.matrix();
  g.name_ = std::move(name);
  return g;
}

Gate Gate::fixed(OpType type) {
  if (is_rotation(type) || type == OpType::Generic1Q) {
    throw std::invalid_argument("gate kind needs a parameter");
  }
  return Gate(type, 0.0);
}

bool Gate::operator==(const Gate& other) const {
  if (type_ != other.type_ || angle_ != other.angle_) return false;
  if (type_ != OpType::Generic1Q) return true;
  return name_ == other.name_ && generic_ == other.generic_;
}

Unitary Gate::unitary() const {
  CMatrix m;
  switch (type_) {
    case OpType::Rx: return Unitary(rx_matrix(angle_));
    case OpType::Rz: return Unitary(rz_matrix(angle_));
    case OpType::H:
      m = CMatrix(2, 2);
      m << 1, 1, 1, -1;
      return Unitary(m / std::sqrt(2.0));
    case OpType::Generic1Q: return Unitary(generic_, 1e-9);
    case OpType::CNOT:
      m = CMatrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      return Unitary(m);
    case OpType::SWAP:
      m = CMatrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      return Unitary(m);
    case OpType::ISWAP:
      m = CMatrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1;
      m(1, 2) = m(2, 1) = kI;
      return Unitary(m);
    case OpType::SqrtSWAP:
      m = CMatrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1;
      m(1, 1) = m(2, 2) = Complex(0.5, 0.5);
      m(1, 2) = m(2, 1) = Complex(0.5, -0.5);
      return Unitary(m);
    case OpType::PhaseDiag:
      m = CMatrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1;
      m(1, 1) = m(2, 2) = kI;
      return Unitary(m);
    case OpType::CNS:
      // |x,y> -> |x xor y, x>
      m = CMatrix::Zero(4, 4);
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) m(((x ^ y) << 1) | x, (x << 1) | y) = 1;
      }
      return Unitary(m);
    case OpType::Toffoli:
      m = CMatrix::Identity(8, 8);
      m(6, 6) = m(7, 7) = 0;
      m(6, 7) = m(7, 6) = 1;
      return Unitary(m);
    case OpType::Init0:
    case OpType::MeasureZ:
      break;
  }
  throw std::invalid_argument(
      std::string(op_name(type_)) + " has no unitary matrix");
}

Unitary unitary_of(const Gate& g) { return g.unitary(); }

CMatrix Hamiltonian::matrix() const {
  if (!(energy > 0)) throw std::invalid_argument("energy must be positive");
  CMatrix xx = tensor(pauli_x(), pauli_x());
  CMatrix yy = tensor(pauli_y(), pauli_y());
  CMatrix zz = tensor(pauli_z(), pauli_z());
  CMatrix sum;
  switch (kind) {
    case HamiltonianKind::ZZ: sum = zz; break;
    case HamiltonianKind::JJ: sum = xx + yy + zz; break;
    case HamiltonianKind::XY: sum = xx + yy; break;
  }
  return -energy / 4.0 * sum;
}

Unitary evolve(const Hamiltonian& h, double t) {
  if (t < 0) throw std::invalid_argument("evolution time must be >= 0");
  return exp_hermitian(h.matrix(), t);
}

LocalInvariants local_invariants(const Unitary& u) {
  if (u.dim() != 4) throw DimensionMismatch("local invariants need dim 4");
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix q(4, 4);
  q << 1, 0, 0, kI,
       0, kI, 1, 0,
       0, kI, -1, 0,
       1, 0, 0, -kI;
  q *= r;
  CMatrix ub = q.adjoint() * u.matrix() * q;
  CMatrix m = ub.transpose() * ub;
  Complex det = u.matrix().determinant();
  Complex tr = m.trace();
  Complex tr2 = (m * m).trace();
  Complex g1 = tr * tr / (16.0 * det);
  Complex g2 = (tr * tr - tr2) / (4.0 * det);
  return {g1, g2.real()};
}

bool locally_equivalent(const Unitary& u, const Unitary& v, double tolerance) {
  LocalInvariants a = local_invariants(u);
  LocalInvariants b = local_invariants(v);
  return std::abs(a.g1 - b.g1) <= tolerance &&
         std::abs(a.g2 - b.g2) <= tolerance;
}

}  // namespace xychain
