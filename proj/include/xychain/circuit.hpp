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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xychain/gates.hpp"

namespace xychain {

struct Instruction {
  Gate gate;
  std::vector<unsigned> qubits;
  std::optional<std::string> label;

  bool operator==(const Instruction& other) const {
    return gate == other.gate && qubits == other.qubits;
  }
};

/** Largest register the dense oracle will build a unitary for. */
inline constexpr unsigned kMaxOracleQubits = 12;

class Circuit {
 public:
  explicit Circuit(unsigned n = 0);

  unsigned n_qubits() const { return n_; }
  const std::vector<Instruction>& instructions() const { return instrs_; }
  std::size_t size() const { return instrs_.size(); }
  bool empty() const { return instrs_.empty(); }
  const Instruction& operator[](std::size_t i) const { return instrs_[i]; }

  /**
   * qubit_map()[l] is the physical wire holding logical qubit l at the end
   * of the circuit.
   */
  const std::vector<unsigned>& qubit_map() const { return qubit_map_; }
  void set_qubit_map(std::vector<unsigned> map);

  /** Wires on which Init0 and MeasureZ are allowed. */
  const std::set<unsigned>& ancillas() const { return ancillas_; }
  void add_ancilla(unsigned q);
  void set_ancillas(std::set<unsigned> ancillas);

  /** Appends after validating indices, arity and ancilla membership. */
  void add(const Gate& g, std::vector<unsigned> qubits,
           std::optional<std::string> label = std::nullopt);
  void add(const Instruction& instr);
  void add_op(OpType type, std::vector<unsigned> qubits);
  void append(const Circuit& other);

  /** Replaces the instruction list wholesale (validated). */
  void set_instructions(std::vector<Instruction> instrs);

  /** A circuit with the same register, map and ancillas but no gates. */
  Circuit empty_copy() const;

  bool has_measurement() const;

 private:
  void validate(const Instruction& instr) const;

  unsigned n_;
  std::vector<Instruction> instrs_;
  std::vector<unsigned> qubit_map_;
  std::set<unsigned> ancillas_;
};

enum class TopologyKind { Chain, Ring, Complete };

class Topology {
 public:
  Topology(TopologyKind kind, unsigned n);

  static Topology chain(unsigned n) { return {TopologyKind::Chain, n}; }
  static Topology ring(unsigned n) { return {TopologyKind::Ring, n}; }
  static Topology complete(unsigned n) { return {TopologyKind::Complete, n}; }
  /** "chain:3", "ring:9", "complete:4". */
  static Topology parse(const std::string& spec);

  TopologyKind kind() const { return kind_; }
  unsigned n() const { return n_; }
  bool adjacent(unsigned i, unsigned j) const;
  unsigned distance(unsigned i, unsigned j) const;
  std::string to_string() const;

 private:
  TopologyKind kind_;
  unsigned n_;
};

/** True when every multi-qubit instruction touches pairwise-adjacent sites. */
bool is_topology_legal(const Circuit& c, const Topology& topo);

using Census = std::map<OpType, unsigned>;

Census gate_census(const Circuit& c);
unsigned count_two_qubit(const Circuit& c);
unsigned count_one_qubit(const Circuit& c);

/**
 * Dense unitary of the circuit in time order. An Init0 that is the first
 * operation on its wire is treated as identity (the wire is taken to start
 * in |0>); any other Init0, or any MeasureZ, is an error.
 */
Unitary circuit_unitary(const Circuit& c);

/** Drops leading Init0 and trailing MeasureZ on every wire. */
Circuit coherent_core(const Circuit& c);

/**
 * A circuit implementing the inverse unitary up to global phase. Gates
 * without a catalog inverse are followed by Rz(pi) corrections (iSWAP,
 * PhaseDiag) or repeated (SqrtSWAP).
 */
Circuit inverse(const Circuit& c);

}  // namespace xychain
