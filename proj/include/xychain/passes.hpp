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
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xychain/circuit.hpp"

namespace xychain {

enum class Equivalence { Exact, GlobalPhase, PhasePermutation, Measurement };

std::string_view equivalence_name(Equivalence e);

struct Pass {
  std::string name;
  Equivalence preserves;
  std::function<Circuit(const Circuit&, const Topology&)> apply;
};

/** Half-open instruction range [begin, end). */
struct InstrRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
};

class NonCommutingBlocks : public std::runtime_error {
 public:
  NonCommutingBlocks(const std::string& what, double norm)
      : std::runtime_error(what), norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

/** Replaces each Toffoli by the standard 6-CNOT network (H, T, T-dagger). */
Circuit decompose_toffoli(const Circuit& c);

/**
 * Rewrites every gate into Rx, Rz and iSWAP (plus Init0/MeasureZ) using the
 * cached dressings; H becomes Rz(pi/2) Rx(pi/2) Rz(pi/2).
 */
Circuit lower_to_iswap(const Circuit& c);

/**
 * Merges each SWAP into the nearest same-pair two-qubit gate on either
 * side when the product is a cheaper catalog gate: CNOT+SWAP becomes CNS,
 * CNS+SWAP becomes CNOT, iSWAP+SWAP becomes PhaseDiag, SWAP+SWAP cancels.
 * One-qubit gates between the two are relabeled onto the other wire.
 */
Circuit fuse_cns(const Circuit& c);

/**
 * Merges neighboring same-axis rotations on a wire, canonicalizes angles
 * to (-pi, pi] and drops zero rotations. With `resynthesize`, every run of
 * one-qubit gates on a wire is also replaced by its shortest Euler form
 * when that lowers the rotation time.
 */
Circuit simplify_1q(const Circuit& c, bool resynthesize = false);

struct HadamardForm {
  OpType axes[3];
  double angles[3];
};

/** Time-ordered Rz/Rx triples equal to H up to phase, with |angles| = pi/2. */
const std::vector<HadamardForm>& hadamard_catalog();

Circuit hadamard_rewrite(const Circuit& c, std::size_t form);
/** Collapses exact occurrences of the chosen triple back into H. */
Circuit hadamard_collapse(const Circuit& c, std::size_t form);

enum class FlipDirection { Forward, Backward };

/**
 * Moves the Rz at `rz_index` across the iSWAP next to it on its wire (the
 * following one for Forward, the preceding one for Backward); it lands on
 * the iSWAP's other qubit. Throws if no iSWAP is adjacent on that side.
 * `new_index`, when given, receives the Rz's new position.
 */
Circuit commute_rz_iswap(
    const Circuit& c, std::size_t rz_index, FlipDirection dir,
    std::size_t* new_index = nullptr);

/**
 * Pushes every Rz as far as it goes in one direction, flipping through
 * iSWAPs and passing other Rz gates, stopping at Rx, Init0 and MeasureZ.
 */
Circuit float_rz(const Circuit& c, FlipDirection dir);

/**
 * Moves each wire's leading Init0 to the front of the circuit and its
 * trailing MeasureZ to the back, keeping the order of operations on every
 * wire. Routers may then move qubits freely without passing a reset or
 * measured wire.
 */
Circuit defer_ancilla_ops(const Circuit& c);

/** Drops Rz gates directly after Init0 or directly before MeasureZ. */
Circuit ancilla_elide(const Circuit& c);

/**
 * Exchanges two adjacent instruction ranges when the dense commutator of
 * their unitaries on the joint support vanishes (<= 1e-10). Non-unitary
 * operations may only sit on wires private to their block.
 */
Circuit reorder_commuting_blocks(
    const Circuit& c, InstrRange block_a, InstrRange block_b);

/** Max-abs entry of [U_A, U_B] on the joint support of two ranges. */
double block_commutator_norm(
    const Circuit& c, InstrRange block_a, InstrRange block_b);

/**
 * Max-abs entry of the commutator of two instruction lists (each a
 * sequence of unitary gates) on their joint support, at most 8 qubits.
 */
double commutator_norm(
    const std::vector<Instruction>& a, const std::vector<Instruction>& b);

/**
 * Ancilla blocks: ranges running from Init0 on an ancilla to the next
 * MeasureZ on the same wire, in which every multi-qubit gate touches that
 * ancilla. Returned in program order.
 */
std::vector<InstrRange> ancilla_blocks(const Circuit& c);

/**
 * Replaces each SWAP by three CNOTs and cancels CNOT pairs separated only
 * by gates that commute with them, choosing the SWAP orientations that
 * leave the fewest CNOTs.
 */
Circuit swaps_to_cnots(const Circuit& c);

/**
 * Re-dresses a lowered circuit (Rx, Rz, iSWAP, Init0, MeasureZ) to shorten
 * its one-qubit critical path. Each iSWAP commutes with X(x)X and turns
 * Rz on one qubit before it into Rz on the other after it, so around every
 * iSWAP a choice of X(x)X and two Rz(k pi/2) may be inserted and cancelled;
 * the one-qubit runs absorb them and are rewritten in their shortest form.
 * Back-to-back iSWAPs on one pair may also swap their middle runs for
 * another Clifford pair, with local corrections outside. A seeded coordinate search picks the choices. With `ancilla_freedom`, the
 * runs right after Init0 and right before MeasureZ may also absorb a free
 * Rz, which keeps only measurement equivalence.
 */
Circuit optimize_gauge(
    const Circuit& c, bool ancilla_freedom, std::uint64_t seed = 0,
    unsigned restarts = 16);

/** Cancels CNOT pairs on the same qubits whose intervening gates commute. */
Circuit cancel_cnots(const Circuit& c);

}  // namespace xychain
