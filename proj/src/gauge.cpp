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

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <tuple>

#include "xychain/passes.hpp"
#include "xychain/synthesis.hpp"

namespace xychain {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/** A maximal run of one-qubit gates on a wire, between two anchors. */
struct Slot {
  unsigned wire = 0;
  std::size_t left = kNone;   // anchor before the run
  std::size_t right = kNone;  // anchor after the run
  CMatrix u = CMatrix::Identity(2, 2);
};

/** An iSWAP, Init0 or MeasureZ. */
struct Anchor {
  Instruction instr{Gate::fixed(OpType::ISWAP), {}, std::nullopt};
  std::vector<std::size_t> slot_before;  // per operand
  std::vector<std::size_t> slot_after;
};

/**
 * Gauge at one iSWAP: the pair inserted before it, X^xa Rz(a pi/2) on the
 * first operand and X^xb Rz(b pi/2) on the second (time order), and the
 * local pair after it that cancels the first through the iSWAP.
 */
struct Gauge {
  unsigned index = 0;
  bool operator==(const Gauge&) const = default;
};

constexpr unsigned kGaugeCount = 64;

struct GaugePair {
  CMatrix before[2];
  CMatrix after[2];
};

const std::vector<GaugePair>& gauge_table() {
  static const std::vector<GaugePair> table = [] {
    const CMatrix isw = Gate::fixed(OpType::ISWAP).unitary().matrix();
    std::vector<CMatrix> factors;
    for (int x = 0; x < 2; ++x) {
      for (unsigned k = 0; k < 4; ++k) {
        CMatrix m = rz_matrix(kPi / 2 * k);
        if (x) m = m * pauli_x();
        factors.push_back(m);
      }
    }
    std::vector<GaugePair> out;
    for (unsigned g = 0; g < kGaugeCount; ++g) {
      GaugePair p;
      p.before[0] = factors[g & 7];
      p.before[1] = factors[(g >> 3) & 7];
      // after * iswap * before = iswap  =>  after = iswap * before^-1 * iswap^-1
      CMatrix want = isw * tensor(p.before[0], p.before[1]).adjoint() * isw.adjoint();
      bool found = false;
      for (const CMatrix& fa : factors) {
        for (const CMatrix& fb : factors) {
          if (!found && dist_phase(tensor(fa, fb), want) <= 1e-12) {
            p.after[0] = fa;
            p.after[1] = fb;
            found = true;
          }
        }
      }
      if (!found) throw std::logic_error("iSWAP gauge table is incomplete");
      out.push_back(std::move(p));
    }
    return out;
  }();
  return table;
}

/** What one patch variant does to a slot: last * (replace or u) * first. */
struct SlotEdit {
  std::optional<CMatrix> replace;
  std::optional<CMatrix> first;
  std::optional<CMatrix> last;
};

/**
 * Alternative dressings of a few neighboring slots that leave the circuit's
 * action unchanged. Variant 0 is the circuit as given.
 */
struct Patch {
  std::vector<std::size_t> slots;
  std::vector<std::vector<SlotEdit>> variants;  // per variant, per slot
};

/** Splits a 4x4 matrix into A (x) B, or returns false if it is entangling. */
bool split_local(const CMatrix& l, CMatrix& a, CMatrix& b) {
  // Realigned matrix r[(i1 j1), (i2 j2)] = a(i1, j1) b(i2, j2) has rank one.
  CMatrix r(4, 4);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) r(2 * i1 + j1, 2 * i2 + j2) = l(2 * i1 + i2, 2 * j1 + j2);
  Eigen::Index p = 0, q = 0;
  r.cwiseAbs().maxCoeff(&p, &q);
  const Complex pivot = r(p, q);
  if (std::abs(pivot) < 1e-6) return false;
  CMatrix outer = r.col(q) * r.row(p) / pivot;
  if ((outer - r).cwiseAbs().maxCoeff() > 1e-9) return false;
  a.resize(2, 2);
  b.resize(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a(i, j) = r(2 * i + j, q);
      b(i, j) = r(p, 2 * i + j) / pivot;
    }
  }
  a /= std::sqrt((a.adjoint() * a).trace().real() / 2);
  b /= std::sqrt((b.adjoint() * b).trace().real() / 2);
  return dist_phase(tensor(a, b), l) <= 1e-9;
}

/**
 * Two iSWAPs on one pair with only one-qubit runs m0, m1 between them (operand
 * order of the first). Each variant puts another Clifford pair in the middle
 * and compensates with local factors before the first iSWAP and after the
 * second. Per variant: mid0, mid1, before0, before1, after0, after1.
 */
std::vector<std::array<CMatrix, 6>> block_variants(const CMatrix& m0, const CMatrix& m1) {
  const CMatrix isw = Gate::fixed(OpType::ISWAP).unitary().matrix();
  const CMatrix w = isw * tensor(m0, m1) * isw;
  std::vector<std::array<CMatrix, 6>> out;
  const std::vector<CMatrix> mids = {CMatrix::Identity(2, 2), rx_matrix(kPi / 2),
                                     rx_matrix(-kPi / 2), rx_matrix(kPi)};
  for (const CMatrix& a : mids) {
    for (const CMatrix& b : mids) {
      if (dist_phase(tensor(a, b), tensor(m0, m1)) <= 1e-9) continue;
      const CMatrix w_alt = isw * tensor(a, b) * isw;
      bool found = false;
      for (const CliffordEntry& r0 : clifford_table()) {
        for (const CliffordEntry& r1 : clifford_table()) {
          if (found) break;
          CMatrix l = w * tensor(r0.matrix, r1.matrix).adjoint() * w_alt.adjoint();
          CMatrix p0, p1;
          if (!split_local(l, p0, p1)) continue;
          out.push_back({a, b, r0.matrix, r1.matrix, p0, p1});
          found = true;
        }
        if (found) break;
      }
    }
  }
  return out;
}

using Key = std::tuple<double, double, double>;

double quantize(double t) { return std::round(t * 1e9) / 1e9; }

RotationSeq best_sequence(const CMatrix& m) {
  for (const CliffordEntry& e : clifford_table()) {
    if (dist_phase(e.matrix, m) <= 1e-9) return e.seq;
  }
  return euler_best(m);
}

class GaugeSearch {
 public:
  GaugeSearch(const Circuit& c, bool ancilla_freedom)
      : c_(c), ancilla_freedom_(ancilla_freedom) {
    const unsigned n = c.n_qubits();
    std::vector<std::size_t> open(n, kNone);
    auto slot_on = [&](unsigned w) {
      if (open[w] == kNone) {
        Slot s;
        s.wire = w;
        s.left = last_anchor_[w];
        open[w] = slots_.size();
        slots_.push_back(s);
      }
      return open[w];
    };
    last_anchor_.assign(n, kNone);
    for (const Instruction& instr : c.instructions()) {
      const OpType t = instr.gate.type();
      if (t == OpType::Rx || t == OpType::Rz) {
        Slot& s = slots_[slot_on(instr.qubits[0])];
        s.u = instr.gate.unitary().matrix() * s.u;
        continue;
      }
      if (t != OpType::ISWAP && t != OpType::Init0 && t != OpType::MeasureZ) {
        throw std::invalid_argument("optimize_gauge: circuit must be lowered to Rx, Rz, iSWAP");
      }
      Anchor a;
      a.instr = instr;
      const std::size_t id = anchors_.size();
      for (unsigned w : instr.qubits) {
        std::size_t s = slot_on(w);
        slots_[s].right = id;
        a.slot_before.push_back(s);
        open[w] = kNone;
        last_anchor_[w] = id;
      }
      anchors_.push_back(std::move(a));
      for (unsigned w : instr.qubits) anchors_.back().slot_after.push_back(slot_on(w));
    }
    for (unsigned w = 0; w < n; ++w) slot_on(w);
    gauge_.assign(anchors_.size(), Gauge{});
    find_patches();
    variant_.assign(patches_.size(), 0);
    slot_cache_.resize(slots_.size());
    slot_cost_.assign(slots_.size(), 0.0);
    for (std::size_t s = 0; s < slots_.size(); ++s) refresh_slot(s);
  }

  Circuit run(std::uint64_t seed, unsigned restarts) {
    Key best = descend();
    std::vector<Gauge> best_gauge = gauge_;
    std::vector<std::size_t> best_variant = variant_;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick(0, kGaugeCount - 1);
    for (unsigned r = 0; r < restarts; ++r) {
      for (std::size_t k = 0; k < anchors_.size(); ++k) {
        if (!is_iswap(k)) continue;
        gauge_[k] = {pick(rng)};
      }
      for (std::size_t b = 0; b < patches_.size(); ++b) {
        variant_[b] = std::uniform_int_distribution<std::size_t>(
            0, patches_[b].variants.size() - 1)(rng);
      }
      for (std::size_t s = 0; s < slots_.size(); ++s) refresh_slot(s);
      Key key = descend();
      if (key < best) {
        best = key;
        best_gauge = gauge_;
        best_variant = variant_;
      }
    }
    gauge_ = best_gauge;
    variant_ = best_variant;
    for (std::size_t s = 0; s < slots_.size(); ++s) refresh_slot(s);
    return emit();
  }

 private:
  bool is_iswap(std::size_t k) const {
    return anchors_[k].instr.gate.type() == OpType::ISWAP;
  }

  /** Operand index of wire w in anchor k. */
  unsigned operand(std::size_t k, unsigned w) const {
    return anchors_[k].instr.qubits[0] == w ? 0 : 1;
  }

  bool patch_free(const std::vector<std::size_t>& slots) const {
    return std::all_of(slots.begin(), slots.end(),
                       [&](std::size_t s) { return slot_patch_[s] == kNone; });
  }

  void add_patch(Patch p) {
    if (p.variants.size() < 2 || !patch_free(p.slots)) return;
    for (std::size_t i = 0; i < p.slots.size(); ++i) {
      slot_patch_[p.slots[i]] = patches_.size();
      slot_index_[p.slots[i]] = i;
    }
    patches_.push_back(std::move(p));
  }

  /** Slot of anchor k on wire w after (or before) it. */
  std::size_t slot_at(std::size_t k, unsigned w, bool after) const {
    const auto& v = after ? anchors_[k].slot_after : anchors_[k].slot_before;
    return v[operand(k, w)];
  }

  void find_patches() {
    slot_patch_.assign(slots_.size(), kNone);
    slot_index_.assign(slots_.size(), 0);
    for (std::size_t k = 0; k < anchors_.size(); ++k) {
      if (!is_iswap(k)) continue;
      const Anchor& a = anchors_[k];
      const std::size_t next = slots_[a.slot_after[0]].right;
      if (next == kNone || !is_iswap(next) || slots_[a.slot_after[1]].right != next) continue;
      const unsigned w0 = a.instr.qubits[0], w1 = a.instr.qubits[1];
      Patch p;
      p.slots = {a.slot_before[0], a.slot_before[1], a.slot_after[0], a.slot_after[1],
                 slot_at(next, w0, true), slot_at(next, w1, true)};
      p.variants.emplace_back(6);
      for (const auto& v : block_variants(slots_[p.slots[2]].u, slots_[p.slots[3]].u)) {
        std::vector<SlotEdit> e(6);
        e[0].last = v[2];
        e[1].last = v[3];
        e[2].replace = v[0];
        e[3].replace = v[1];
        e[4].first = v[4];
        e[5].first = v[5];
        p.variants.push_back(std::move(e));
      }
      add_patch(std::move(p));
    }
  }

  /** Slot matrix with its patch variant and the gauges of its anchors, time order. */
  CMatrix gauged(std::size_t s) const {
    const Slot& slot = slots_[s];
    CMatrix m = slot.u;
    if (slot_patch_[s] != kNone) {
      const std::size_t p = slot_patch_[s];
      const SlotEdit& e = patches_[p].variants[variant_[p]][slot_index_[s]];
      if (e.replace) m = *e.replace;
      if (e.first) m = m * *e.first;
      if (e.last) m = *e.last * m;
    }
    if (slot.left != kNone && is_iswap(slot.left)) {
      const GaugePair& g = gauge_table()[gauge_[slot.left].index];
      m = m * g.after[operand(slot.left, slot.wire)];
    }
    if (slot.right != kNone && is_iswap(slot.right)) {
      const GaugePair& g = gauge_table()[gauge_[slot.right].index];
      m = g.before[operand(slot.right, slot.wire)] * m;
    }
    return m;
  }

  bool free_first(const Slot& s) const {
    return ancilla_freedom_ && s.left != kNone &&
           anchors_[s.left].instr.gate.type() == OpType::Init0;
  }
  bool free_last(const Slot& s) const {
    return ancilla_freedom_ && s.right != kNone &&
           anchors_[s.right].instr.gate.type() == OpType::MeasureZ;
  }

  void refresh_slot(std::size_t s) {
    const Slot& slot = slots_[s];
    CMatrix m = gauged(s);
    RotationSeq best = best_sequence(m);
    double best_t = rotation_time(best);
    const unsigned n_first = free_first(slot) ? 4 : 1;
    const unsigned n_last = free_last(slot) ? 4 : 1;
    for (unsigned f = 0; f < n_first; ++f) {
      for (unsigned l = 0; l < n_last; ++l) {
        if (f == 0 && l == 0) continue;
        CMatrix v = rz_matrix(kPi / 2 * l) * m * rz_matrix(kPi / 2 * f);
        RotationSeq seq = best_sequence(v);
        double t = rotation_time(seq);
        if (t < best_t - 1e-12) {
          best_t = t;
          best = std::move(seq);
        }
      }
    }
    slot_cache_[s] = std::move(best);
    slot_cost_[s] = best_t;
  }

  /** (one-qubit time on the critical path, makespan, total rotation time). */
  Key evaluate() const {
    std::vector<std::pair<double, double>> path(anchors_.size());
    std::vector<double> finish(anchors_.size(), 0.0);
    auto better = [](const std::pair<double, double>& a, const std::pair<double, double>& b) {
      if (std::abs(a.first - b.first) > 1e-12) return a.first > b.first;
      return a.second > b.second + 1e-12;
    };
    std::pair<double, double> best{0, 0};
    double makespan = 0, total = 0;
    auto arrive = [&](std::size_t s) {
      const Slot& slot = slots_[s];
      std::pair<double, double> p{0, 0};
      double t = 0;
      if (slot.left != kNone) {
        p = path[slot.left];
        t = finish[slot.left];
      }
      p.second += slot_cost_[s];
      return std::make_pair(p, t + slot_cost_[s]);
    };
    for (std::size_t k = 0; k < anchors_.size(); ++k) {
      std::pair<double, double> p{0, 0};
      double start = 0;
      for (std::size_t s : anchors_[k].slot_before) {
        auto [q, t] = arrive(s);
        if (better(q, p)) p = q;
        start = std::max(start, t);
      }
      double d = is_iswap(k) ? kPi : 0.0;
      p.first += d;
      path[k] = p;
      finish[k] = start + d;
    }
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      total += slot_cost_[s];
      if (slots_[s].right != kNone) continue;
      auto [q, t] = arrive(s);
      if (better(q, best)) best = q;
      makespan = std::max(makespan, t);
    }
    return {quantize(best.second), quantize(makespan), quantize(total)};
  }

  std::vector<std::size_t> touched(std::size_t k) const {
    std::vector<std::size_t> out = anchors_[k].slot_before;
    out.insert(out.end(), anchors_[k].slot_after.begin(), anchors_[k].slot_after.end());
    return out;
  }

  Key descend() {
    Key current = evaluate();
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t b = 0; b < patches_.size(); ++b) {
        const std::size_t keep = variant_[b];
        std::size_t best_v = keep;
        for (std::size_t v = 0; v < patches_[b].variants.size(); ++v) {
          if (v == keep) continue;
          variant_[b] = v;
          for (std::size_t s : patches_[b].slots) refresh_slot(s);
          Key key = evaluate();
          if (key < current) {
            current = key;
            best_v = v;
          }
        }
        variant_[b] = best_v;
        for (std::size_t s : patches_[b].slots) refresh_slot(s);
        if (best_v != keep) improved = true;
      }
      for (std::size_t k = 0; k < anchors_.size(); ++k) {
        if (!is_iswap(k)) continue;
        const Gauge keep = gauge_[k];
        Gauge best_g = keep;
        for (unsigned i = 0; i < kGaugeCount; ++i) {
          Gauge g{i};
          if (g == keep) continue;
          gauge_[k] = g;
          for (std::size_t s : touched(k)) refresh_slot(s);
          Key key = evaluate();
          if (key < current) {
            current = key;
            best_g = g;
          }
        }
        gauge_[k] = best_g;
        for (std::size_t s : touched(k)) refresh_slot(s);
        if (!(best_g == keep)) improved = true;
      }
    }
    return current;
  }

  Circuit emit() const {
    Circuit out = c_.empty_copy();
    auto put = [&](std::size_t s) {
      for (const Gate& g : slot_cache_[s]) out.add(g, {slots_[s].wire});
    };
    for (const Anchor& a : anchors_) {
      for (std::size_t s : a.slot_before) put(s);
      out.add(a.instr);
    }
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      if (slots_[s].right == kNone) put(s);
    }
    return out;
  }

  const Circuit& c_;
  bool ancilla_freedom_;
  std::vector<std::size_t> last_anchor_;
  std::vector<Slot> slots_;
  std::vector<Anchor> anchors_;
  std::vector<Gauge> gauge_;
  std::vector<Patch> patches_;
  std::vector<std::size_t> slot_patch_;  // slot -> patch touching it
  std::vector<std::size_t> slot_index_;  // slot -> its position in that patch
  std::vector<std::size_t> variant_;
  std::vector<RotationSeq> slot_cache_;
  std::vector<double> slot_cost_;
};

}  // namespace

Circuit optimize_gauge(
    const Circuit& c, bool ancilla_freedom, std::uint64_t seed, unsigned restarts) {
  GaugeSearch search(c, ancilla_freedom);
  return search.run(seed, restarts);
}

}  // namespace xychain
