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

#include "xychain/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace xychain {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(what) + ": matrix must be square");
  }
}

void check_qubits(std::span<const unsigned> qubits, unsigned n) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= n) {
      throw InvalidQubits(
          "qubit index " + std::to_string(qubits[i]) +
          " out of range for register of " + std::to_string(n));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) {
        throw InvalidQubits(
            "repeated qubit index " + std::to_string(qubits[i]));
      }
    }
  }
}

}  // namespace

Unitary::Unitary(CMatrix matrix, double tolerance)
    : matrix_(std::move(matrix)), tolerance_(tolerance) {
  require_square(matrix_, "Unitary");
  if (tolerance_ < 0) throw std::invalid_argument("negative tolerance");
  double defect = unitarity_defect(matrix_);
  if (!(defect <= tolerance_)) {
    throw NotUnitary(
        "matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
}

Unitary Unitary::identity(unsigned dim) {
  return Unitary(CMatrix::Identity(dim, dim));
}

unsigned Unitary::n_qubits() const {
  unsigned d = dim();
  if (!std::has_single_bit(d)) {
    throw DimensionMismatch("dimension is not a power of two");
  }
  return static_cast<unsigned>(std::countr_zero(d));
}

Unitary Unitary::operator*(const Unitary& other) const {
  return Unitary(
      mul(matrix_, other.matrix_), std::max(tolerance_, other.tolerance_));
}

Unitary Unitary::dagger() const {
  return Unitary(matrix_.adjoint(), tolerance_);
}

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double unitarity_defect(const CMatrix& m) {
  require_square(m, "unitarity_defect");
  return max_abs(m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols()));
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix mul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch(
        "mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
        " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return a * b;
}

CMatrix dagger(const CMatrix& a) { return a.adjoint(); }

Unitary exp_hermitian(const CMatrix& h, double t) {
  require_square(h, "exp_hermitian");
  double scale = std::max(1.0, max_abs(h));
  if (max_abs(h - h.adjoint()) > kEquivalenceTolerance * scale) {
    throw NotHermitian("exp_hermitian: generator is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const auto& vals = solver.eigenvalues();
  const CMatrix& vecs = solver.eigenvectors();
  CVector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    phases(i) = std::exp(-kI * vals(i) * t);
  }
  return Unitary(vecs * phases.asDiagonal() * vecs.adjoint());
}

double dist_phase(const CMatrix& u, const CMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw DimensionMismatch("dist_phase: dimension mismatch");
  }
  Complex tr = (u.adjoint() * v).trace();
  double d = 1.0 - std::abs(tr) / static_cast<double>(u.rows());
  return std::clamp(d, 0.0, 1.0);
}

double dist_phase(const Unitary& u, const Unitary& v) {
  return dist_phase(u.matrix(), v.matrix());
}

void apply_gate_inplace(
    CMatrix& block, const CMatrix& gate, std::span<const unsigned> qubits,
    unsigned n) {
  check_qubits(qubits, n);
  const std::size_t k = qubits.size();
  const std::size_t gdim = std::size_t{1} << k;
  if (static_cast<std::size_t>(gate.rows()) != gdim ||
      static_cast<std::size_t>(gate.cols()) != gdim) {
    throw DimensionMismatch("gate dimension does not match qubit count");
  }
  const std::size_t dim = std::size_t{1} << n;
  if (static_cast<std::size_t>(block.rows()) != dim) {
    throw DimensionMismatch("state block dimension does not match register");
  }
  std::vector<std::size_t> masks(k);
  std::size_t support = 0;
  for (std::size_t i = 0; i < k; ++i) {
    masks[i] = std::size_t{1} << (n - 1 - qubits[i]);
    support |= masks[i];
  }
  std::vector<std::size_t> offsets(gdim, 0);
  for (std::size_t s = 0; s < gdim; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      if (s & (std::size_t{1} << (k - 1 - i))) offsets[s] |= masks[i];
    }
  }
  CMatrix gathered(gdim, block.cols());
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & support) continue;
    for (std::size_t s = 0; s < gdim; ++s) {
      gathered.row(s) = block.row(base | offsets[s]);
    }
    CMatrix updated = gate * gathered;
    for (std::size_t s = 0; s < gdim; ++s) {
      block.row(base | offsets[s]) = updated.row(s);
    }
  }
}

Unitary embed(const CMatrix& g, std::span<const unsigned> qubits, unsigned n) {
  check_qubits(qubits, n);
  CMatrix out = CMatrix::Identity(1 << n, 1 << n);
  apply_gate_inplace(out, g, qubits, n);
  return Unitary(std::move(out), 1e-9);
}

Unitary embed(const Unitary& g, std::span<const unsigned> qubits, unsigned n) {
  return embed(g.matrix(), qubits, n);
}

void check_permutation(std::span<const unsigned> perm, unsigned n) {
  if (perm.size() != n) {
    throw InvalidQubits("permutation has wrong length");
  }
  std::vector<bool> seen(n, false);
  for (unsigned p : perm) {
    if (p >= n || seen[p]) throw InvalidQubits("permutation is not a bijection");
    seen[p] = true;
  }
}

Unitary perm_matrix(std::span<const unsigned> perm, unsigned n) {
  check_permutation(perm, n);
  const std::size_t dim = std::size_t{1} << n;
  CMatrix out = CMatrix::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (x & (std::size_t{1} << (n - 1 - i))) {
        y |= std::size_t{1} << (n - 1 - perm[i]);
      }
    }
    out(y, x) = 1.0;
  }
  return Unitary(std::move(out));
}

std::vector<unsigned> invert_permutation(std::span<const unsigned> perm) {
  check_permutation(perm, static_cast<unsigned>(perm.size()));
  std::vector<unsigned> inv(perm.size());
  for (unsigned i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

std::vector<unsigned> compose_permutations(
    std::span<const unsigned> outer, std::span<const unsigned> inner) {
  if (outer.size() != inner.size()) {
    throw InvalidQubits("composing permutations of different sizes");
  }
  std::vector<unsigned> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

std::vector<unsigned> identity_permutation(unsigned n) {
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace xychain
