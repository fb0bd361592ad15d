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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace xychain {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/** Tolerance for a single exact identity (one gate, one product). */
inline constexpr double kEquivalenceTolerance = 1e-10;
/** Tolerance for products accumulated over many gates. */
inline constexpr double kAccumulatedTolerance = 1e-8;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotUnitary : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitian : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidQubits : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A square complex matrix certified unitary at construction.
 *
 * Basis convention throughout the library: computational basis ordered
 * lexicographically with qubit 0 as the most significant bit, so for n
 * qubits basis index k has qubit q in bit (n - 1 - q).
 */
class Unitary {
 public:
  explicit Unitary(CMatrix matrix, double tolerance = kEquivalenceTolerance);

  static Unitary identity(unsigned dim);

  const CMatrix& matrix() const { return matrix_; }
  unsigned dim() const { return static_cast<unsigned>(matrix_.rows()); }
  /** log2(dim); throws if dim is not a power of two. */
  unsigned n_qubits() const;
  double tolerance() const { return tolerance_; }

  Unitary operator*(const Unitary& other) const;
  Unitary dagger() const;

 private:
  CMatrix matrix_;
  double tolerance_;
};

/** max |entry| of a matrix (0 for empty). */
double max_abs(const CMatrix& m);

/** max |U^dagger U - I|; the unitarity defect. */
double unitarity_defect(const CMatrix& m);

CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix mul(const CMatrix& a, const CMatrix& b);
CMatrix dagger(const CMatrix& a);

/** exp(-i h t) for Hermitian h (hbar = 1), by eigendecomposition. */
Unitary exp_hermitian(const CMatrix& h, double t);

/** 1 - |tr(U^dagger V)| / dim, in [0, 1]; zero iff U = e^{ia} V. */
double dist_phase(const CMatrix& u, const CMatrix& v);
double dist_phase(const Unitary& u, const Unitary& v);

/**
 * Applies a k-qubit gate to the rows of a (2^n x m) block, in place.
 * Each column is treated as an n-qubit state; qubits[i] is the register
 * qubit carried by gate qubit i (gate qubit 0 most significant).
 */
void apply_gate_inplace(
    CMatrix& block, const CMatrix& gate, std::span<const unsigned> qubits,
    unsigned n);

/** A 2^n unitary acting as g on the listed qubits, identity elsewhere. */
Unitary embed(const Unitary& g, std::span<const unsigned> qubits, unsigned n);
Unitary embed(const CMatrix& g, std::span<const unsigned> qubits, unsigned n);

/**
 * Permutation operator for a qubit permutation perm (perm[i] is the
 * destination of qubit i): maps |x_0 ... x_{n-1}> to the basis state whose
 * bit at position perm[i] equals x_i. Throws unless perm is a bijection.
 */
Unitary perm_matrix(std::span<const unsigned> perm, unsigned n);

/** Validates perm as a bijection on {0..n-1}. */
void check_permutation(std::span<const unsigned> perm, unsigned n);

std::vector<unsigned> invert_permutation(std::span<const unsigned> perm);

/** (outer o inner)[i] = outer[inner[i]]. */
std::vector<unsigned> compose_permutations(
    std::span<const unsigned> outer, std::span<const unsigned> inner);

std::vector<unsigned> identity_permutation(unsigned n);

}  // namespace xychain
