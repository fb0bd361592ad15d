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

#include "xychain/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace xychain {

Circuit::Circuit(unsigned n) : n_(n), qubit_map_(identity_permutation(n)) {}

void Circuit::set_qubit_map(std::vector<unsigned> map) {
  check_permutation(map, n_);
  qubit_map_ = std::move(map);
}

void Circuit::add_ancilla(unsigned q) {
  if (q >= n_) throw InvalidQubits("ancilla index out of range");
  ancillas_.insert(q);
}

void Circuit::set_ancillas(std::set<unsigned> ancillas) {
  for (unsigned q : ancillas) {
    if (q >= n_) throw InvalidQubits("ancilla index out of range");
  }
  for (const Instruction& instr : instrs_) {
    if (!is_unitary_op(instr.gate.type()) && !ancillas.count(instr.qubits[0])) {
      throw InvalidQubits("existing Init0/MeasureZ on a non-ancilla wire");
    }
  }
  ancillas_ = std::move(ancillas);
}

void Circuit::validate(const Instruction& instr) const {
  if (instr.qubits.size() != instr.gate.arity()) {
    throw InvalidQubits(
        std::string(op_name(instr.gate.type())) + " expects " +
        std::to_string(instr.gate.arity()) + " qubit(s)");
  }
  for (std::size_t i = 0; i < instr.qubits.size(); ++i) {
    if (instr.qubits[i] >= n_) {
      throw InvalidQubits(
          "qubit " + std::to_string(instr.qubits[i]) + " out of range (" +
          std::to_string(n_) + " qubits)");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (instr.qubits[i] == instr.qubits[j]) {
        throw InvalidQubits("repeated qubit in instruction");
      }
    }
  }
  if (!is_unitary_op(instr.gate.type()) && !ancillas_.count(instr.qubits[0])) {
    throw InvalidQubits(
        std::string(op_name(instr.gate.type())) + " on non-ancilla qubit " +
        std::to_string(instr.qubits[0]));
  }
}

void Circuit::add(
    const Gate& g, std::vector<unsigned> qubits,
    std::optional<std::string> label) {
  add(Instruction{g, std::move(qubits), std::move(label)});
}

void Circuit::add(const Instruction& instr) {
  validate(instr);
  instrs_.push_back(instr);
}

void Circuit::add_op(OpType type, std::vector<unsigned> qubits) {
  add(Gate::fixed(type), std::move(qubits));
}

void Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw DimensionMismatch("appending circuit of other size");
  for (const Instruction& instr : other.instrs_) add(instr);
}

void Circuit::set_instructions(std::vector<Instruction> instrs) {
  for (const Instruction& instr : instrs) validate(instr);
  instrs_ = std::move(instrs);
}

Circuit Circuit::empty_copy() const {
  Circuit c(n_);
  c.qubit_map_ = qubit_map_;
  c.ancillas_ = ancillas_;
  return c;
}

bool Circuit::has_measurement() const {
  return std::any_of(instrs_.begin(), instrs_.end(), [](const Instruction& i) {
    return i.gate.type() == OpType::MeasureZ;
  });
}

Topology::Topology(TopologyKind kind, unsigned n) : kind_(kind), n_(n) {
  if (n == 0) throw std::invalid_argument("topology needs at least one site");
}

Topology Topology::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("topology spec must be kind:n, got '" + spec + "'");
  }
  std::string kind = spec.substr(0, colon);
  std::string count = spec.substr(colon + 1);
  if (count.empty() ||
      !std::all_of(count.begin(), count.end(), [](char ch) {
        return ch >= '0' && ch <= '9';
      }) ||
      count.size() > 4) {
    throw std::invalid_argument("bad site count in topology spec '" + spec + "'");
  }
  unsigned n = static_cast<unsigned>(std::stoul(count));
  if (kind == "chain") return chain(n);
  if (kind == "ring") return ring(n);
  if (kind == "complete") return complete(n);
  throw std::invalid_argument("unknown topology kind '" + kind + "'");
}

bool Topology::adjacent(unsigned i, unsigned j) const {
  if (i >= n_ || j >= n_ || i == j) return false;
  unsigned d = i > j ? i - j : j - i;
  switch (kind_) {
    case TopologyKind::Chain: return d == 1;
    case TopologyKind::Ring: return d == 1 || d == n_ - 1;
    case TopologyKind::Complete: return true;
  }
  return false;
}

unsigned Topology::distance(unsigned i, unsigned j) const {
  if (i >= n_ || j >= n_) throw InvalidQubits("site out of range");
  unsigned d = i > j ? i - j : j - i;
  switch (kind_) {
    case TopologyKind::Chain: return d;
    case TopologyKind::Ring: return std::min(d, n_ - d);
    case TopologyKind::Complete: return d == 0 ? 0 : 1;
  }
  return d;
}

std::string Topology::to_string() const {
  const char* k = kind_ == TopologyKind::Chain  ? "chain"
                  : kind_ == TopologyKind::Ring ? "ring"
                                                : "complete";
  return std::string(k) + ":" + std::to_string(n_);
}

bool is_topology_legal(const Circuit& c, const Topology& topo) {
  if (c.n_qubits() > topo.n()) return false;
  for (const Instruction& instr : c.instructions()) {
    const auto& q = instr.qubits;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        if (!topo.adjacent(q[i], q[j])) return false;
      }
    }
  }
  return true;
}

Census gate_census(const Circuit& c) {
  Census census;
  for (const Instruction& instr : c.instructions()) ++census[instr.gate.type()];
  return census;
}

unsigned count_two_qubit(const Circuit& c) {
  return static_cast<unsigned>(std::count_if(
      c.instructions().begin(), c.instructions().end(),
      [](const Instruction& i) { return i.gate.arity() >= 2; }));
}

unsigned count_one_qubit(const Circuit& c) {
  return static_cast<unsigned>(std::count_if(
      c.instructions().begin(), c.instructions().end(),
      [](const Instruction& i) {
        return i.gate.arity() == 1 && is_unitary_op(i.gate.type());
      }));
}

Unitary circuit_unitary(const Circuit& c) {
  const unsigned n = c.n_qubits();
  if (n > kMaxOracleQubits) {
    throw DimensionMismatch(
        "register of " + std::to_string(n) + " qubits too large for the oracle");
  }
  std::vector<bool> touched(n, false);
  CMatrix u = CMatrix::Identity(std::size_t{1} << n, std::size_t{1} << n);
  for (const Instruction& instr : c.instructions()) {
    OpType t = instr.gate.type();
    if (t == OpType::MeasureZ) {
      throw std::invalid_argument("circuit_unitary: measurement present");
    }
    if (t == OpType::Init0) {
      if (touched[instr.qubits[0]]) {
        throw std::invalid_argument(
            "circuit_unitary: Init0 after other operations on its wire");
      }
      touched[instr.qubits[0]] = true;
      continue;
    }
    for (unsigned q : instr.qubits) touched[q] = true;
    apply_gate_inplace(u, instr.gate.unitary().matrix(), instr.qubits, n);
  }
  return Unitary(std::move(u), kAccumulatedTolerance);
}

Circuit coherent_core(const Circuit& c) {
  const unsigned n = c.n_qubits();
  const auto& in = c.instructions();
  std::vector<bool> keep(in.size(), true);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i].gate.type() == OpType::Init0 && !seen[in[i].qubits[0]]) {
      keep[i] = false;
    }
    for (unsigned q : in[i].qubits) seen[q] = true;
  }
  std::fill(seen.begin(), seen.end(), false);
  for (std::size_t i = in.size(); i-- > 0;) {
    if (in[i].gate.type() == OpType::MeasureZ && !seen[in[i].qubits[0]]) {
      keep[i] = false;
    }
    for (unsigned q : in[i].qubits) seen[q] = true;
  }
  Circuit out = c.empty_copy();
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (keep[i]) out.add(in[i]);
  }
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out = c.empty_copy();
  out.set_qubit_map(invert_permutation(c.qubit_map()));
  const auto& in = c.instructions();
  for (auto it = in.rbegin(); it != in.rend(); ++it) {
    const Instruction& instr = *it;
    const auto& q = instr.qubits;
    switch (instr.gate.type()) {
      case OpType::Rx:
      case OpType::Rz:
        out.add(Gate::rotation(instr.gate.type(), -instr.gate.angle()), q);
        break;
      case OpType::Generic1Q:
        out.add(Gate::generic1q(
                    instr.gate.unitary().matrix().adjoint(),
                    instr.gate.name() + "^-1"),
                q);
        break;
      case OpType::CNS:
        out.add_op(OpType::CNS, {q[1], q[0]});
        break;
      case OpType::ISWAP:
      case OpType::PhaseDiag:
        // Both commute with Z x Z, and squaring either gives Z x Z.
        out.add(Gate::rz(kPi), {q[0]});
        out.add(Gate::rz(kPi), {q[1]});
        out.add(instr.gate, q);
        break;
      case OpType::SqrtSWAP:
        out.add(instr.gate, q);
        out.add(instr.gate, q);
        out.add(instr.gate, q);
        break;
      case OpType::Init0:
      case OpType::MeasureZ:
        throw std::invalid_argument("inverse: non-unitary operation");
      default:
        out.add(instr);
        break;
    }
  }
  return out;
}

}  // namespace xychain
