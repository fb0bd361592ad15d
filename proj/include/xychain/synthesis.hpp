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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "xychain/circuit.hpp"

namespace xychain {

class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** A sequence of Rx/Rz gates on one qubit, in time order. */
using RotationSeq = std::vector<Gate>;

double rotation_time(const RotationSeq& seq);

/** The 2x2 matrix of a rotation sequence. */
CMatrix seq_matrix(const RotationSeq& seq);

/**
 * Shortest-rotation-time Euler decompositions of a one-qubit unitary, up to
 * global phase. Angles within 1e-11 of a multiple of pi/4 are snapped.
 * Zero rotations are omitted.
 */
RotationSeq euler_zxz(const CMatrix& u);
RotationSeq euler_xzx(const CMatrix& u);
/** Whichever of zxz/xzx has the smaller rotation time (zxz on ties). */
RotationSeq euler_best(const CMatrix& u);

/**
 * The 24 one-qubit Cliffords, each with a minimum-rotation-time sequence of
 * Rx/Rz rotations by multiples of pi/2. Entry 0 is the identity.
 */
struct CliffordEntry {
  CMatrix matrix;
  RotationSeq seq;
};
const std::vector<CliffordEntry>& clifford_table();

/**
 * One-qubit corrections around a chain of iSWAPs:
 *   layers[0], iSWAP, layers[1], ..., iSWAP, layers[n_iswaps]
 * where layers[k][0] acts on the first qubit and layers[k][1] on the second.
 */
struct SynthesizedDressing {
  CMatrix target;
  unsigned n_iswaps = 0;
  std::vector<std::array<RotationSeq, 2>> layers;
  double residual = 1.0;

  /** The two-qubit circuit on wires 0 and 1. */
  Circuit circuit() const;
  /** Appends the dressing to `out` with (a, b) as the first/second qubit. */
  void emit(Circuit& out, unsigned a, unsigned b) const;
  double total_rotation_time() const;
};

/**
 * Finds one-qubit gates so the iSWAP chain equals `target` up to phase.
 * Feasibility of a single-iSWAP template is decided by local invariants.
 * Otherwise a seeded multi-start Levenberg-Marquardt search over Euler
 * angles runs; for Clifford targets a discrete search over Clifford layers
 * then looks for a dressing with less total rotation time. Throws
 * SynthesisError when no dressing reaches a residual of 1e-8.
 */
SynthesizedDressing synthesize_dressing(
    const Unitary& target, unsigned n_iswaps, std::uint64_t seed = 0);

/** iSWAP count used when lowering each two-qubit kind. */
unsigned iswap_cost(OpType type);

/** Write-once shared cache of the dressing used by lower_to_iswap. */
const SynthesizedDressing& cached_dressing(OpType type);

}  // namespace xychain
