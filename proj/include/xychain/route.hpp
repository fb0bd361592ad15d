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

#include <cstddef>
#include <vector>

#include "xychain/circuit.hpp"

namespace xychain {

enum class CostModel {
  /** Cost counts inserted SWAPs only; fused SWAPs are cheaper than free ones. */
  MinSwap,
  /** Cost counts iSWAPs after CNS fusion and lowering. */
  Iswap,
};

enum class LayoutGoal {
  /** Any final placement. */
  Free,
  /** Data qubits end on a rotation of their starting sites (rings only). */
  Periodic,
  /** Periodic on rings when the circuit has ancillas, Free otherwise. */
  Auto,
};

struct RouteOptions {
  CostModel model = CostModel::MinSwap;
  LayoutGoal goal = LayoutGoal::Free;
  /**
   * Let units of certified-commuting ancilla blocks reorder freely. The
   * result is checked against the dense unitary (up to 10 qubits) and
   * recomputed without relaxation when it differs or cannot be checked.
   */
  bool relax_blocks = true;
  std::size_t expansion_budget = 400000;
};

struct RouteResult {
  Circuit circuit;
  /** Logical qubit l ends on physical wire final_layout[l]. */
  std::vector<unsigned> final_layout;
  double cost = 0;
  /** False when the search budget ran out and the greedy router was used. */
  bool searched = true;
  /** Whether commuting-block relaxation was in effect. */
  bool relaxed = false;
};

/**
 * Maps a circuit of one- and two-qubit gates onto a topology. Two-qubit
 * gates are grouped into units (with their attached one-qubit gates) whose
 * dependencies come from dense commutators; an A* search then orders the
 * units and decides, per unit, whether to leave its two qubits exchanged
 * (an explicit SWAP after the gate, later fused into a CNS). Stand-alone
 * SWAPs are inserted when needed. The output's qubit map is the input
 * map followed by the routing permutation.
 */
RouteResult route_circuit(
    const Circuit& c, const Topology& topo, const RouteOptions& options);

/** route_circuit with the minimum-SWAP model and a free final layout. */
Circuit route(const Circuit& c, const Topology& topo);

/**
 * SWAPs each distant pair together along the shorter arc (ties: the arc
 * through lower indices), applies the gate and SWAPs back; no fusion.
 * With `expand_cnots` every SWAP is written as three CNOTs, and around a
 * CNOT the innermost pair of SWAPs shares one cancelling CNOT, so a CNOT
 * across one intermediate site costs five.
 */
Circuit route_naive(const Circuit& c, const Topology& topo, bool expand_cnots = false);

/** Adjacent transpositions that move the given layout back to identity. */
std::vector<std::pair<unsigned, unsigned>> restore_swaps(
    const std::vector<unsigned>& layout, const Topology& topo);

}  // namespace xychain
