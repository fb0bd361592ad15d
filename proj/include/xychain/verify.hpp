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

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "xychain/circuit.hpp"

namespace xychain {

/** Largest register the equivalence checks accept. */
inline constexpr unsigned kMaxVerifyQubits = 10;

class Statevector {
 public:
  /** |0...0> on n qubits. */
  explicit Statevector(unsigned n);
  /** Throws NotUnitary unless the amplitudes are normalized within 1e-10. */
  Statevector(unsigned n, CVector amplitudes);

  static Statevector basis(unsigned n, std::uint64_t index);
  /** Haar-random state from complex Gaussian amplitudes. */
  static Statevector random(unsigned n, std::mt19937_64& rng);

  unsigned n_qubits() const { return n_; }
  CVector amplitudes() const { return data_.col(0); }
  Complex operator[](std::uint64_t index) const { return data_(static_cast<Eigen::Index>(index), 0); }
  double norm() const { return data_.col(0).norm(); }

  void apply_gate(const CMatrix& gate, std::span<const unsigned> qubits);

 private:
  unsigned n_;
  CMatrix data_;
};

/**
 * Runs the circuit on psi one gate at a time. A leading Init0 is accepted
 * when the wire is already |0> in psi; MeasureZ is an error.
 */
Statevector apply(const Circuit& c, const Statevector& psi);

enum class EquivClass { Exact, Phase, PhasePermutation, Local, Measurement };

std::string_view equiv_class_name(EquivClass k);
/** "exact", "phase", "phase+permutation", "local", "measurement". */
EquivClass parse_equiv_class(const std::string& name);

struct EquivalenceReport {
  EquivClass cls = EquivClass::Exact;
  bool equivalent = false;
  double residual = 0;
  std::optional<std::vector<unsigned>> permutation;
  /** Where the circuits differ; present iff not equivalent. */
  std::optional<std::string> witness;
};

class MissingPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AncillaMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Compares the coherent cores of two circuits on the same register.
 *   exact: max|P U_a - U_b|
 *   phase, phase+permutation: dist_phase(P U_a, U_b), P from `perm`
 *     (required for phase+permutation, optional otherwise)
 *   local: distance between Makhlin invariants (two qubits only)
 *   measurement: measurement_equivalent with 20 trials and seed 0
 * `perm[w]` is the wire of b that carries what wire w of a carries.
 */
EquivalenceReport equivalent(
    const Circuit& a, const Circuit& b, EquivClass cls,
    const std::optional<std::vector<unsigned>>& perm = std::nullopt,
    double tolerance = kAccumulatedTolerance);

/** b.qubit_map() composed with the inverse of a.qubit_map(). */
std::vector<unsigned> declared_permutation(const Circuit& a, const Circuit& b);

/**
 * Exact comparison of measurement statistics. Wires whose first operation
 * is Init0 start in |0> and must coincide in a and b; every other wire
 * receives a random state, fresh for each trial. Wires whose last operation
 * is MeasureZ are measured; wire w of a must correspond to measured wire
 * perm[w] of b. For each outcome the probabilities must agree within
 * `tolerance` and the unnormalized post-measurement states must agree up
 * to a phase. `perm` defaults to declared_permutation(a, b).
 */
EquivalenceReport measurement_equivalent(
    const Circuit& a, const Circuit& b, unsigned trials, std::uint64_t seed,
    const std::optional<std::vector<unsigned>>& perm = std::nullopt,
    double tolerance = kAccumulatedTolerance);

}  // namespace xychain
