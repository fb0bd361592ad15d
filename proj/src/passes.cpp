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

#include "xychain/passes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "xychain/synthesis.hpp"

namespace xychain {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool touches(const Instruction& instr, unsigned q) {
  return std::find(instr.qubits.begin(), instr.qubits.end(), q) !=
         instr.qubits.end();
}

std::size_t next_on_wire(
    const std::vector<Instruction>& v, std::size_t i, unsigned q) {
  for (std::size_t j = i + 1; j < v.size(); ++j) {
    if (touches(v[j], q)) return j;
  }
  return kNone;
}

std::size_t prev_on_wire(
    const std::vector<Instruction>& v, std::size_t i, unsigned q) {
  for (std::size_t j = i; j-- > 0;) {
    if (touches(v[j], q)) return j;
  }
  return kNone;
}

Circuit rebuild(const Circuit& like, std::vector<Instruction> instrs) {
  Circuit out = like.empty_copy();
  out.set_instructions(std::move(instrs));
  return out;
}

bool is_one_qubit_unitary(const Instruction& instr) {
  return instr.gate.arity() == 1 && is_unitary_op(instr.gate.type());
}

Instruction rot(OpType axis, double angle, unsigned q) {
  return Instruction{Gate::rotation(axis, angle), {q}, std::nullopt};
}

/** Matrix of a two-qubit gate in the (a, b) frame. */
CMatrix pair_matrix(const Instruction& g, unsigned a, unsigned b) {
  CMatrix m = CMatrix::Identity(4, 4);
  std::vector<unsigned> local;
  for (unsigned q : g.qubits) local.push_back(q == a ? 0u : 1u);
  (void)b;
  apply_gate_inplace(m, g.gate.unitary().matrix(), local, 2);
  return m;
}

/** A catalog gate on {a, b} exactly equal to m, or nullopt for a mismatch. */
std::optional<std::optional<Instruction>> match_catalog(
    const CMatrix& m, unsigned a, unsigned b) {
  if (max_abs(m - CMatrix::Identity(4, 4)) < 1e-12) {
    return std::optional<Instruction>{};
  }
  for (OpType t : {OpType::CNS, OpType::CNOT, OpType::ISWAP, OpType::PhaseDiag,
                   OpType::SWAP, OpType::SqrtSWAP}) {
    for (int flip = 0; flip < 2; ++flip) {
      Instruction cand{Gate::fixed(t),
                       flip ? std::vector<unsigned>{b, a}
                            : std::vector<unsigned>{a, b},
                       std::nullopt};
      if (max_abs(pair_matrix(cand, a, b) - m) < 1e-12) {
        return std::optional<Instruction>{cand};
      }
    }
  }
  return std::nullopt;
}

unsigned merged_cost(const std::optional<Instruction>& g) {
  return g ? iswap_cost(g->gate.type()) : 0;
}

/** Tries to absorb the SWAP at index s into a neighbor; returns success. */
bool try_fuse_swap(std::vector<Instruction>& v, std::size_t s) {
  const unsigned a = v[s].qubits[0], b = v[s].qubits[1];
  const CMatrix swap = Gate::fixed(OpType::SWAP).unitary().matrix();
  auto step = [&](std::size_t from, int dir) {
    if (dir == 1) return std::min(next_on_wire(v, from, a), next_on_wire(v, from, b));
    std::size_t pa = prev_on_wire(v, from, a), pb = prev_on_wire(v, from, b);
    if (pa == kNone) return pb;
    if (pb == kNone) return pa;
    return std::max(pa, pb);
  };
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<std::size_t> between;
    std::size_t k = s;
    while (true) {
      k = step(k, dir);
      if (k == kNone || k >= v.size()) break;
      const Instruction& g = v[k];
      if (is_one_qubit_unitary(g)) {
        between.push_back(k);
        continue;
      }
      if (g.qubits.size() == 2 &&
          ((g.qubits[0] == a && g.qubits[1] == b) ||
           (g.qubits[0] == b && g.qubits[1] == a)) &&
          is_unitary_op(g.gate.type())) {
        CMatrix gm = pair_matrix(g, a, b);
        CMatrix prod = dir == 0 ? CMatrix(swap * gm) : CMatrix(gm * swap);
        auto merged = match_catalog(prod, a, b);
        if (!merged ||
            merged_cost(*merged) >= iswap_cost(g.gate.type()) + 3) {
          break;
        }
        for (std::size_t idx : between) {
          unsigned q = v[idx].qubits[0];
          v[idx].qubits[0] = q == a ? b : a;
        }
        if (*merged) {
          v[k] = **merged;
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(s));
        } else {
          std::size_t hi = std::max(k, s), lo = std::min(k, s);
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(hi));
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(lo));
        }
        return true;
      }
      break;
    }
  }
  return false;
}

std::vector<unsigned> joint_support(
    const std::vector<Instruction>& a, const std::vector<Instruction>& b) {
  std::vector<unsigned> s;
  for (const auto* list : {&a, &b}) {
    for (const Instruction& i : *list) {
      for (unsigned q : i.qubits) s.push_back(q);
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

CMatrix local_unitary(
    const std::vector<Instruction>& list, const std::vector<unsigned>& support) {
  const unsigned k = static_cast<unsigned>(support.size());
  CMatrix u = CMatrix::Identity(std::size_t{1} << k, std::size_t{1} << k);
  for (const Instruction& i : list) {
    std::vector<unsigned> local;
    for (unsigned q : i.qubits) {
      local.push_back(static_cast<unsigned>(
          std::lower_bound(support.begin(), support.end(), q) - support.begin()));
    }
    apply_gate_inplace(u, i.gate.unitary().matrix(), local, k);
  }
  return u;
}

bool commutes(const Instruction& x, const Instruction& y) {
  if (!is_unitary_op(x.gate.type()) || !is_unitary_op(y.gate.type())) {
    return false;
  }
  return commutator_norm({x}, {y}) <= 1e-12;
}

}  // namespace

std::string_view equivalence_name(Equivalence e) {
  switch (e) {
    case Equivalence::Exact: return "exact";
    case Equivalence::GlobalPhase: return "phase";
    case Equivalence::PhasePermutation: return "phase+permutation";
    case Equivalence::Measurement: return "measurement";
  }
  return "?";
}

Circuit decompose_toffoli(const Circuit& c) {
  std::vector<Instruction> out;
  for (const Instruction& instr : c.instructions()) {
    if (instr.gate.type() != OpType::Toffoli) {
      out.push_back(instr);
      continue;
    }
    const unsigned a = instr.qubits[0], b = instr.qubits[1], t = instr.qubits[2];
    auto h = [](unsigned q) { return Instruction{Gate::fixed(OpType::H), {q}, {}}; };
    auto cx = [](unsigned x, unsigned y) {
      return Instruction{Gate::fixed(OpType::CNOT), {x, y}, {}};
    };
    const double q = kPi / 4;
    std::vector<Instruction> net = {
        h(t),
        cx(b, t), rot(OpType::Rz, -q, t),
        cx(a, t), rot(OpType::Rz, q, t),
        cx(b, t), rot(OpType::Rz, -q, t),
        cx(a, t), rot(OpType::Rz, q, b), rot(OpType::Rz, q, t),
        h(t),
        cx(a, b), rot(OpType::Rz, q, a), rot(OpType::Rz, -q, b),
        cx(a, b)};
    out.insert(out.end(), net.begin(), net.end());
  }
  return rebuild(c, std::move(out));
}

Circuit lower_to_iswap(const Circuit& c) {
  Circuit src = decompose_toffoli(c);
  Circuit out = src.empty_copy();
  for (const Instruction& instr : src.instructions()) {
    const auto& q = instr.qubits;
    switch (instr.gate.type()) {
      case OpType::H:
        out.add(Gate::rz(kPi / 2), q);
        out.add(Gate::rx(kPi / 2), q);
        out.add(Gate::rz(kPi / 2), q);
        break;
      case OpType::Generic1Q:
        for (const Gate& g : euler_best(instr.gate.unitary().matrix())) {
          out.add(g, q);
        }
        break;
      case OpType::CNOT:
      case OpType::SWAP:
      case OpType::CNS:
      case OpType::PhaseDiag:
      case OpType::SqrtSWAP:
        cached_dressing(instr.gate.type()).emit(out, q[0], q[1]);
        break;
      default:
        out.add(instr);
        break;
    }
  }
  return out;
}

Circuit fuse_cns(const Circuit& c) {
  std::vector<Instruction> v = c.instructions();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < v.size(); ++s) {
      if (v[s].gate.type() == OpType::SWAP && try_fuse_swap(v, s)) {
        changed = true;
        break;
      }
    }
  }
  return rebuild(c, std::move(v));
}

Circuit simplify_1q(const Circuit& c, bool resynthesize) {
  std::vector<Instruction> v = c.instructions();
  bool changed = true;
  while (changed) {
    changed = false;
    // Merge each rotation into the previous same-axis rotation on its wire.
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!is_rotation(v[i].gate.type())) continue;
      std::size_t p = prev_on_wire(v, i, v[i].qubits[0]);
      if (p != kNone && v[p].gate.type() == v[i].gate.type()) {
        v[p].gate = Gate::rotation(
            v[p].gate.type(), v[p].gate.angle() + v[i].gate.angle());
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        --i;
        changed = true;
      }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!is_rotation(v[i].gate.type())) continue;
      double t = canonical_angle(v[i].gate.angle());
      if (std::abs(t) < 1e-12) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        --i;
        changed = true;
      } else if (t != v[i].gate.angle()) {
        v[i].gate = Gate::rotation(v[i].gate.type(), t);
      }
    }
    if (!resynthesize || changed) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!is_rotation(v[i].gate.type())) continue;
      const unsigned q = v[i].qubits[0];
      std::size_t p = prev_on_wire(v, i, q);
      if (p != kNone && is_rotation(v[p].gate.type())) continue;
      std::vector<std::size_t> run{i};
      for (std::size_t j = next_on_wire(v, i, q);
           j != kNone && is_rotation(v[j].gate.type());
           j = next_on_wire(v, j, q)) {
        run.push_back(j);
      }
      if (run.size() < 2) continue;
      RotationSeq old;
      for (std::size_t j : run) old.push_back(v[j].gate);
      RotationSeq best = euler_best(seq_matrix(old));
      double t_old = rotation_time(old), t_new = rotation_time(best);
      if (t_new < t_old - 1e-9 ||
          (t_new < t_old + 1e-9 && best.size() < old.size())) {
        for (std::size_t k = run.size(); k-- > 1;) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(run[k]));
        }
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<Instruction> repl;
        for (const Gate& g : best) repl.push_back(Instruction{g, {q}, {}});
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(),
                 repl.end());
        changed = true;
        break;
      }
    }
  }
  return rebuild(c, std::move(v));
}

const std::vector<HadamardForm>& hadamard_catalog() {
  static const std::vector<HadamardForm> catalog = [] {
    std::vector<HadamardForm> out;
    CMatrix h = Gate::fixed(OpType::H).unitary().matrix();
    const OpType patterns[2][3] = {{OpType::Rz, OpType::Rx, OpType::Rz},
                                   {OpType::Rx, OpType::Rz, OpType::Rx}};
    for (const auto& pat : patterns) {
      for (int signs = 0; signs < 8; ++signs) {
        HadamardForm f{};
        RotationSeq seq;
        for (int k = 0; k < 3; ++k) {
          f.axes[k] = pat[k];
          f.angles[k] = (signs >> (2 - k) & 1) ? -kPi / 2 : kPi / 2;
          seq.push_back(Gate::rotation(f.axes[k], f.angles[k]));
        }
        if (dist_phase(seq_matrix(seq), h) < 1e-12) out.push_back(f);
      }
    }
    return out;
  }();
  return catalog;
}

Circuit hadamard_rewrite(const Circuit& c, std::size_t form) {
  const auto& cat = hadamard_catalog();
  if (form >= cat.size()) throw std::out_of_range("unknown Hadamard form");
  const HadamardForm& f = cat[form];
  std::vector<Instruction> out;
  for (const Instruction& instr : c.instructions()) {
    if (instr.gate.type() != OpType::H) {
      out.push_back(instr);
      continue;
    }
    for (int k = 0; k < 3; ++k) {
      out.push_back(rot(f.axes[k], f.angles[k], instr.qubits[0]));
    }
  }
  return rebuild(c, std::move(out));
}

Circuit hadamard_collapse(const Circuit& c, std::size_t form) {
  const auto& cat = hadamard_catalog();
  if (form >= cat.size()) throw std::out_of_range("unknown Hadamard form");
  const HadamardForm& f = cat[form];
  std::vector<Instruction> v = c.instructions();
  auto matches = [&](std::size_t idx, int k) {
    return idx != kNone && v[idx].gate.type() == f.axes[k] &&
           std::abs(v[idx].gate.angle() - f.angles[k]) < 1e-12;
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!matches(i, 0)) continue;
    const unsigned q = v[i].qubits[0];
    std::size_t j = next_on_wire(v, i, q);
    if (!matches(j, 1)) continue;
    std::size_t k = next_on_wire(v, j, q);
    if (!matches(k, 2)) continue;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
    v[i] = Instruction{Gate::fixed(OpType::H), {q}, {}};
  }
  return rebuild(c, std::move(v));
}

Circuit commute_rz_iswap(
    const Circuit& c, std::size_t rz_index, FlipDirection dir,
    std::size_t* new_index) {
  std::vector<Instruction> v = c.instructions();
  if (rz_index >= v.size() || v[rz_index].gate.type() != OpType::Rz) {
    throw std::invalid_argument("commute_rz_iswap: index is not an Rz");
  }
  const unsigned a = v[rz_index].qubits[0];
  std::size_t j = dir == FlipDirection::Forward ? next_on_wire(v, rz_index, a)
                                                : prev_on_wire(v, rz_index, a);
  if (j == kNone || v[j].gate.type() != OpType::ISWAP) {
    throw std::invalid_argument("commute_rz_iswap: no adjacent iSWAP");
  }
  const unsigned b = v[j].qubits[0] == a ? v[j].qubits[1] : v[j].qubits[0];
  Instruction moved = v[rz_index];
  moved.qubits[0] = b;
  // Erasing first puts a forward iSWAP at j - 1, so inserting at j lands
  // just after it; a backward iSWAP stays at j and the Rz lands just before.
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(rz_index));
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(j), moved);
  if (new_index) *new_index = j;
  return rebuild(c, std::move(v));
}

Circuit float_rz(const Circuit& c, FlipDirection dir) {
  std::vector<Instruction> v = c.instructions();
  const bool fwd = dir == FlipDirection::Forward;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t step = 0; step < v.size(); ++step) {
      std::size_t i = fwd ? v.size() - 1 - step : step;
      if (v[i].gate.type() != OpType::Rz) continue;
      const unsigned a = v[i].qubits[0];
      std::size_t j = fwd ? next_on_wire(v, i, a) : prev_on_wire(v, i, a);
      if (j == kNone) continue;
      if (v[j].gate.type() == OpType::Rz) {
        v[j].gate = Gate::rz(v[j].gate.angle() + v[i].gate.angle());
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (v[j].gate.type() != OpType::ISWAP) continue;
      const unsigned b = v[j].qubits[0] == a ? v[j].qubits[1] : v[j].qubits[0];
      Instruction moved = v[i];
      moved.qubits[0] = b;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(j), moved);
      changed = true;
      break;
    }
  }
  return rebuild(c, std::move(v));
}

Circuit defer_ancilla_ops(const Circuit& c) {
  const auto& in = c.instructions();
  std::vector<Instruction> head, body, tail;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const OpType t = in[i].gate.type();
    const unsigned q = in[i].qubits[0];
    if (t == OpType::Init0 && prev_on_wire(in, i, q) == kNone) {
      head.push_back(in[i]);
    } else if (t == OpType::MeasureZ && next_on_wire(in, i, q) == kNone) {
      tail.push_back(in[i]);
    } else {
      body.push_back(in[i]);
    }
  }
  head.insert(head.end(), body.begin(), body.end());
  head.insert(head.end(), tail.begin(), tail.end());
  return rebuild(c, std::move(head));
}

Circuit ancilla_elide(const Circuit& c) {
  std::vector<Instruction> v = c.instructions();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && !changed; ++i) {
      OpType t = v[i].gate.type();
      if (t != OpType::Init0 && t != OpType::MeasureZ) continue;
      const unsigned q = v[i].qubits[0];
      std::size_t j = t == OpType::Init0 ? next_on_wire(v, i, q)
                                         : prev_on_wire(v, i, q);
      if (j != kNone && v[j].gate.type() == OpType::Rz) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
  return rebuild(c, std::move(v));
}

double commutator_norm(
    const std::vector<Instruction>& a, const std::vector<Instruction>& b) {
  std::vector<unsigned> support = joint_support(a, b);
  if (support.size() > 8) {
    throw DimensionMismatch("commutator support exceeds 8 qubits");
  }
  CMatrix ua = local_unitary(a, support);
  CMatrix ub = local_unitary(b, support);
  return max_abs(ua * ub - ub * ua);
}

double block_commutator_norm(
    const Circuit& c, InstrRange block_a, InstrRange block_b) {
  const auto& v = c.instructions();
  if (block_a.end > v.size() || block_b.end > v.size() ||
      block_a.begin > block_a.end || block_b.begin > block_b.end) {
    throw std::out_of_range("block range outside the circuit");
  }
  std::vector<Instruction> ua, ub, na, nb;
  for (std::size_t i = block_a.begin; i < block_a.end; ++i) {
    (is_unitary_op(v[i].gate.type()) ? ua : na).push_back(v[i]);
  }
  for (std::size_t i = block_b.begin; i < block_b.end; ++i) {
    (is_unitary_op(v[i].gate.type()) ? ub : nb).push_back(v[i]);
  }
  auto wires = [](const std::vector<Instruction>& x, const std::vector<Instruction>& y) {
    std::vector<unsigned> w = joint_support(x, y);
    return w;
  };
  std::vector<unsigned> all_a = wires(ua, na), all_b = wires(ub, nb);
  for (const Instruction& m : na) {
    if (std::binary_search(all_b.begin(), all_b.end(), m.qubits[0])) {
      throw std::invalid_argument(
          "block has a non-unitary operation on a wire shared with the other block");
    }
  }
  for (const Instruction& m : nb) {
    if (std::binary_search(all_a.begin(), all_a.end(), m.qubits[0])) {
      throw std::invalid_argument(
          "block has a non-unitary operation on a wire shared with the other block");
    }
  }
  return commutator_norm(ua, ub);
}

Circuit reorder_commuting_blocks(
    const Circuit& c, InstrRange block_a, InstrRange block_b) {
  InstrRange first = block_a, second = block_b;
  if (second.end == first.begin) std::swap(first, second);
  if (first.end != second.begin) {
    throw std::invalid_argument("reorder_commuting_blocks: blocks not adjacent");
  }
  double norm = block_commutator_norm(c, first, second);
  if (norm > 1e-10) {
    throw NonCommutingBlocks(
        "blocks do not commute (commutator norm " + std::to_string(norm) + ")",
        norm);
  }
  const auto& v = c.instructions();
  std::vector<Instruction> out(v.begin(), v.begin() + first.begin);
  out.insert(out.end(), v.begin() + second.begin, v.begin() + second.end);
  out.insert(out.end(), v.begin() + first.begin, v.begin() + first.end);
  out.insert(out.end(), v.begin() + second.end, v.end());
  return rebuild(c, std::move(out));
}

std::vector<InstrRange> ancilla_blocks(const Circuit& c) {
  const auto& v = c.instructions();
  std::vector<InstrRange> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].gate.type() != OpType::Init0) continue;
    const unsigned a = v[i].qubits[0];
    std::size_t j = i + 1;
    bool ok = true;
    for (; j < v.size(); ++j) {
      const Instruction& g = v[j];
      if (g.gate.type() == OpType::MeasureZ && g.qubits[0] == a) break;
      if (!is_unitary_op(g.gate.type())) {
        ok = false;
        break;
      }
      if (g.qubits.size() > 1 && !touches(g, a)) {
        ok = false;
        break;
      }
    }
    if (ok && j < v.size()) {
      out.push_back({i, j + 1});
      i = j;
    }
  }
  return out;
}

Circuit cancel_cnots(const Circuit& c) {
  std::vector<Instruction> v = c.instructions();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && !changed; ++i) {
      if (v[i].gate.type() != OpType::CNOT) continue;
      const unsigned ctl = v[i].qubits[0], tgt = v[i].qubits[1];
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (!touches(v[j], ctl) && !touches(v[j], tgt)) continue;
        if (v[j].gate.type() == OpType::CNOT && v[j].qubits[0] == ctl &&
            v[j].qubits[1] == tgt) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!commutes(v[i], v[j])) break;
      }
    }
  }
  return rebuild(c, std::move(v));
}

Circuit swaps_to_cnots(const Circuit& c) {
  std::vector<std::size_t> swaps;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].gate.type() == OpType::SWAP) swaps.push_back(i);
  }
  const std::size_t k = std::min<std::size_t>(swaps.size(), 12);
  std::optional<Circuit> best;
  std::size_t best_count = kNone;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<Instruction> v;
    std::size_t s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Instruction& instr = c[i];
      if (instr.gate.type() != OpType::SWAP) {
        v.push_back(instr);
        continue;
      }
      unsigned x = instr.qubits[0], y = instr.qubits[1];
      if (s < k && (mask >> s & 1)) std::swap(x, y);
      ++s;
      Gate cx = Gate::fixed(OpType::CNOT);
      v.push_back({cx, {x, y}, {}});
      v.push_back({cx, {y, x}, {}});
      v.push_back({cx, {x, y}, {}});
    }
    Circuit cand = cancel_cnots(rebuild(c, std::move(v)));
    std::size_t count = gate_census(cand)[OpType::CNOT];
    if (count < best_count) {
      best_count = count;
      best = std::move(cand);
    }
  }
  return *best;
}

}  // namespace xychain
