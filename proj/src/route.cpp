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

#include "xychain/route.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "xychain/passes.hpp"
#include "xychain/synthesis.hpp"

namespace xychain {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/**
 * Units are emitted with their resets and measurements, so a SWAP may later
 * pass a wire that is already measured or not yet reset. Such an operation
 * follows its qubit through the SWAP instead.
 */
void settle_ancilla_ops(std::vector<Instruction>& v) {
  auto touches = [&](std::size_t j, unsigned q) {
    return std::find(v[j].qubits.begin(), v[j].qubits.end(), q) != v[j].qubits.end();
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && !changed; ++i) {
      const OpType t = v[i].gate.type();
      if (t != OpType::Init0 && t != OpType::MeasureZ) continue;
      const unsigned q = v[i].qubits[0];
      std::size_t j = kNone;
      if (t == OpType::MeasureZ) {
        for (std::size_t k = i + 1; k < v.size() && j == kNone; ++k)
          if (touches(k, q)) j = k;
      } else {
        for (std::size_t k = i; k-- > 0 && j == kNone;)
          if (touches(k, q)) j = k;
      }
      if (j == kNone) continue;
      if (v[j].gate.type() != OpType::SWAP) {
        throw std::logic_error("router placed a gate on a measured or unreset wire");
      }
      Instruction moved = v[i];
      moved.qubits[0] = v[j].qubits[0] == q ? v[j].qubits[1] : v[j].qubits[0];
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      // After the erase, index j is just past the SWAP for a measurement and
      // just before it for a reset.
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(j), std::move(moved));
      changed = true;
    }
  }
}

constexpr unsigned kMaxSearchUnits = 64;
/** Largest register on which a relaxed result is checked densely. */
constexpr unsigned kMaxRelaxCheckQubits = 10;

struct Unit {
  std::vector<std::size_t> members;  // instruction indices, program order
  std::vector<std::size_t> two_qubit;  // subset of members
  unsigned p = 0, q = 0;  // logical pair for two-qubit units
  bool is_two_qubit() const { return !two_qubit.empty(); }
};

double unswapped_cost(OpType t, CostModel model) {
  if (model == CostModel::MinSwap) return 0;
  return iswap_cost(t);
}

/** Cost of gate t when the unit's routing SWAP is folded into it. */
double swapped_cost(OpType t, CostModel model) {
  if (model == CostModel::MinSwap) return t == OpType::SWAP ? 0 : 2;
  switch (t) {
    case OpType::CNOT: return 1;
    case OpType::CNS: return 2;
    case OpType::SWAP: return 0;
    case OpType::ISWAP: return 2;
    case OpType::PhaseDiag: return 1;
    default: return iswap_cost(t) + 3;
  }
}

class Router {
 public:
  Router(const Circuit& c, const Topology& topo, const RouteOptions& opt)
      : c_(c), topo_(topo), opt_(opt), n_(topo.n()) {
    if (c.n_qubits() > topo.n()) {
      throw InvalidQubits("circuit has more qubits than the topology has sites");
    }
    for (const Instruction& i : c.instructions()) {
      if (i.gate.arity() > 2) {
        throw std::invalid_argument("route: three-qubit gates must be decomposed first");
      }
    }
    goal_ = opt.goal;
    if (goal_ == LayoutGoal::Auto) {
      goal_ = (!c.ancillas().empty() && topo.kind() == TopologyKind::Ring)
                  ? LayoutGoal::Periodic
                  : LayoutGoal::Free;
    }
    for (unsigned l = 0; l < n_; ++l) {
      data_.push_back(l >= c.n_qubits() || !c.ancillas().count(l));
    }
    std::vector<InstrRange> blocks;
    if (opt.relax_blocks) blocks = ancilla_blocks(c);
    build_units(blocks);
    if (!units_consistent()) {
      blocks.clear();
      build_units(blocks);
    }
    build_dependencies(blocks);
  }

  RouteResult run() {
    RouteResult result;
    result.relaxed = relaxed_;
    std::optional<std::vector<Action>> plan;
    if (units_.size() <= kMaxSearchUnits) plan = search();
    if (!plan) {
      plan = greedy();
      result.searched = false;
    }
    emit(*plan, result);
    return result;
  }

 private:
  struct Action {
    bool is_swap = false;
    unsigned unit = 0;
    bool parity = false;
    unsigned a = 0, b = 0;  // physical sites of a stand-alone swap
  };

  struct State {
    std::uint64_t done = 0;
    std::vector<unsigned> pos;  // logical -> physical
  };

  void build_units(const std::vector<InstrRange>& blocks) {
    units_.clear();
    const auto& v = c_.instructions();
    std::vector<std::size_t> unit_of(v.size(), kNone);
    auto block_of = [&](std::size_t i) -> std::size_t {
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (i >= blocks[b].begin && i < blocks[b].end) return b;
      }
      return kNone;
    };
    // Two-qubit gates, merging runs on the same pair.
    std::vector<std::size_t> last2q(n_, kNone);  // last two-qubit unit per wire
    std::vector<bool> barrier(n_, false);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Instruction& g = v[i];
      if (!is_unitary_op(g.gate.type())) {
        barrier[g.qubits[0]] = true;
        continue;
      }
      if (g.qubits.size() != 2) continue;
      unsigned x = g.qubits[0], y = g.qubits[1];
      std::size_t u = last2q[x];
      if (u != kNone && u == last2q[y] && !barrier[x] && !barrier[y] &&
          block_of(units_[u].two_qubit.back()) == block_of(i)) {
        units_[u].two_qubit.push_back(i);
      } else {
        Unit nu;
        nu.two_qubit = {i};
        nu.p = std::min(x, y);
        nu.q = std::max(x, y);
        units_.push_back(nu);
        u = units_.size() - 1;
      }
      unit_of[i] = u;
      last2q[x] = last2q[y] = u;
      barrier[x] = barrier[y] = false;
    }
    // One-qubit gates attach to a neighboring two-qubit gate on their wire.
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Instruction& g = v[i];
      if (g.qubits.size() != 1 || !is_unitary_op(g.gate.type())) continue;
      const unsigned w = g.qubits[0];
      const std::size_t blk = block_of(i);
      std::size_t target = kNone;
      for (std::size_t j = i; j-- > 0;) {
        if (std::find(v[j].qubits.begin(), v[j].qubits.end(), w) == v[j].qubits.end()) {
          continue;
        }
        if (!is_unitary_op(v[j].gate.type())) break;
        if (v[j].qubits.size() == 2) {
          if (blocks.empty() || block_of(j) == blk) target = unit_of[j];
          break;
        }
      }
      if (target == kNone) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          if (std::find(v[j].qubits.begin(), v[j].qubits.end(), w) == v[j].qubits.end()) {
            continue;
          }
          if (!is_unitary_op(v[j].gate.type())) break;
          if (v[j].qubits.size() == 2) {
            if (blocks.empty() || block_of(j) == blk) target = unit_of[j];
            break;
          }
        }
      }
      unit_of[i] = target;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (unit_of[i] == kNone) {
        Unit nu;
        nu.members = {i};
        units_.push_back(nu);
        unit_of[i] = units_.size() - 1;
      } else {
        units_[unit_of[i]].members.push_back(i);
      }
    }
    auto first_key = [](const Unit& u) {
      return u.is_two_qubit() ? u.two_qubit.front() : u.members.front();
    };
    std::stable_sort(units_.begin(), units_.end(), [&](const Unit& a, const Unit& b) {
      return first_key(a) < first_key(b);
    });
  }

  /** Concatenating units in order must keep every wire's op order. */
  bool units_consistent() const {
    std::vector<std::size_t> last(n_, 0);
    std::vector<bool> any(n_, false);
    for (const Unit& u : units_) {
      for (std::size_t m : u.members) {
        for (unsigned q : c_[m].qubits) {
          if (any[q] && m < last[q]) return false;
          last[q] = m;
          any[q] = true;
        }
      }
    }
    return true;
  }

  std::vector<Instruction> member_instrs(const Unit& u) const {
    std::vector<Instruction> out;
    for (std::size_t m : u.members) out.push_back(c_[m]);
    return out;
  }

  void build_dependencies(const std::vector<InstrRange>& blocks) {
    const std::size_t k = units_.size();
    preds_.assign(k, {});
    std::vector<std::size_t> unit_block(k, kNone);
    for (std::size_t u = 0; u < k; ++u) {
      std::size_t first = units_[u].members.front();
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (first >= blocks[b].begin && first < blocks[b].end) unit_block[u] = b;
      }
    }
    std::vector<std::vector<bool>> commuting_blocks(
        blocks.size(), std::vector<bool>(blocks.size(), false));
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < blocks.size(); ++b) {
        bool ok = false;
        try {
          ok = block_commutator_norm(c_, blocks[a], blocks[b]) <= 1e-10;
        } catch (const std::exception&) {
          ok = false;
        }
        commuting_blocks[a][b] = commuting_blocks[b][a] = ok;
      }
    }
    std::vector<std::vector<unsigned>> wires(k);
    std::vector<std::vector<bool>> nonunitary_wire(k, std::vector<bool>(n_, false));
    std::vector<bool> unitary_only(k, true);
    for (std::size_t u = 0; u < k; ++u) {
      for (std::size_t m : units_[u].members) {
        for (unsigned q : c_[m].qubits) {
          wires[u].push_back(q);
          if (!is_unitary_op(c_[m].gate.type())) {
            nonunitary_wire[u][q] = true;
            unitary_only[u] = false;
          }
        }
      }
      std::sort(wires[u].begin(), wires[u].end());
      wires[u].erase(std::unique(wires[u].begin(), wires[u].end()), wires[u].end());
    }
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        std::vector<unsigned> shared;
        std::set_intersection(wires[i].begin(), wires[i].end(), wires[j].begin(),
                              wires[j].end(), std::back_inserter(shared));
        if (shared.empty()) continue;
        if (unit_block[i] != kNone && unit_block[j] != kNone &&
            unit_block[i] != unit_block[j] &&
            commuting_blocks[unit_block[i]][unit_block[j]]) {
          relaxed_ = true;
          continue;
        }
        bool dependent = !unitary_only[i] || !unitary_only[j];
        if (!dependent) {
          dependent = commutator_norm(member_instrs(units_[i]),
                                      member_instrs(units_[j])) > 1e-10;
        }
        if (dependent) preds_[j].push_back(i);
      }
    }
    unit_min_cost_.resize(k);
    for (std::size_t u = 0; u < k; ++u) {
      unit_min_cost_[u] = std::min(unit_cost(u, false), unit_cost(u, true));
    }
  }

  double unit_cost(std::size_t u, bool parity, std::size_t* fold_at = nullptr) const {
    const Unit& unit = units_[u];
    if (!unit.is_two_qubit()) return 0;
    double base = 0;
    for (std::size_t m : unit.two_qubit) base += unswapped_cost(c_[m].gate.type(), opt_.model);
    if (!parity) return base;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_at = 0;
    // Ties prefer folding into the last gate.
    for (std::size_t j = unit.two_qubit.size(); j-- > 0;) {
      OpType t = c_[unit.two_qubit[j]].gate.type();
      double cost = base - unswapped_cost(t, opt_.model) + swapped_cost(t, opt_.model);
      if (cost < best) {
        best = cost;
        best_at = j;
      }
    }
    if (fold_at) *fold_at = best_at;
    return best;
  }

  bool ready(const State& s, std::size_t u) const {
    if (s.done >> u & 1) return false;
    for (std::size_t p : preds_[u]) {
      if (!(s.done >> p & 1)) return false;
    }
    return true;
  }

  /** Runs every ready unit that has no two-qubit gate; returns them in order. */
  std::vector<std::size_t> normalize(State& s) const {
    std::vector<std::size_t> ran;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t u = 0; u < units_.size(); ++u) {
        if (!units_[u].is_two_qubit() && ready(s, u)) {
          s.done |= std::uint64_t{1} << u;
          ran.push_back(u);
          progress = true;
        }
      }
    }
    return ran;
  }

  std::uint64_t all_mask() const {
    return units_.size() == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << units_.size()) - 1;
  }

  bool goal_met(const State& s) const {
    if (s.done != all_mask()) return false;
    if (goal_ != LayoutGoal::Periodic) return true;
    std::optional<unsigned> shift;
    for (unsigned l = 0; l < n_; ++l) {
      if (!data_[l]) continue;
      unsigned r = (s.pos[l] + n_ - l) % n_;
      if (shift && *shift != r) return false;
      shift = r;
    }
    return true;
  }

  double heuristic(const State& s) const {
    double h = 0;
    for (std::size_t u = 0; u < units_.size(); ++u) {
      if (!(s.done >> u & 1)) h += unit_min_cost_[u];
    }
    return h;
  }

  std::string key(const State& s) const {
    std::string k(8 + n_, '\0');
    for (int i = 0; i < 8; ++i) k[i] = static_cast<char>(s.done >> (8 * i) & 0xff);
    for (unsigned l = 0; l < n_; ++l) k[8 + l] = static_cast<char>(s.pos[l]);
    return k;
  }

  State initial() const {
    State s;
    s.pos = identity_permutation(n_);
    normalize(s);
    return s;
  }

  void apply(State& s, const Action& a) const {
    if (a.is_swap) {
      for (unsigned& p : s.pos) {
        if (p == a.a) p = a.b;
        else if (p == a.b) p = a.a;
      }
    } else {
      s.done |= std::uint64_t{1} << a.unit;
      if (a.parity) std::swap(s.pos[units_[a.unit].p], s.pos[units_[a.unit].q]);
    }
    normalize(s);
  }

  double action_cost(const Action& a) const {
    return a.is_swap ? 3.0 : unit_cost(a.unit, a.parity);
  }

  std::vector<Action> successors(const State& s) const {
    std::vector<Action> out;
    std::vector<bool> hot(n_, false);
    bool all_done = s.done == all_mask();
    for (std::size_t u = 0; u < units_.size(); ++u) {
      if (!units_[u].is_two_qubit() || !ready(s, u)) continue;
      const Unit& unit = units_[u];
      hot[s.pos[unit.p]] = hot[s.pos[unit.q]] = true;
      if (!topo_.adjacent(s.pos[unit.p], s.pos[unit.q])) continue;
      for (bool parity : {false, true}) {
        Action a;
        a.unit = static_cast<unsigned>(u);
        a.parity = parity;
        out.push_back(a);
      }
    }
    for (unsigned x = 0; x < n_; ++x) {
      for (unsigned y = x + 1; y < n_; ++y) {
        if (!topo_.adjacent(x, y)) continue;
        if (!all_done && !hot[x] && !hot[y]) continue;
        Action a;
        a.is_swap = true;
        a.a = x;
        a.b = y;
        out.push_back(a);
      }
    }
    return out;
  }

  std::optional<std::vector<Action>> search() const {
    struct Node {
      State state;
      double g;
      std::size_t parent;
      Action action;
    };
    struct Entry {
      double f, h;
      unsigned depth;
      std::size_t order;
      std::size_t node;
    };
    auto worse = [](const Entry& x, const Entry& y) {
      if (x.f != y.f) return x.f > y.f;
      if (x.h != y.h) return x.h > y.h;
      if (x.depth != y.depth) return x.depth < y.depth;
      return x.order > y.order;
    };
    std::vector<Node> nodes;
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> open(worse);
    std::unordered_map<std::string, double> best_g;
    std::vector<unsigned> depth;
    std::size_t order = 0;
    State s0 = initial();
    nodes.push_back({s0, 0.0, kNone, {}});
    depth.push_back(0);
    best_g[key(s0)] = 0.0;
    open.push({heuristic(s0), heuristic(s0), 0, order++, 0});
    std::size_t expansions = 0;
    while (!open.empty()) {
      Entry e = open.top();
      open.pop();
      const std::size_t ni = e.node;
      if (nodes[ni].g > best_g[key(nodes[ni].state)] + 1e-12) continue;
      if (goal_met(nodes[ni].state)) {
        std::vector<Action> plan;
        for (std::size_t i = ni; nodes[i].parent != kNone; i = nodes[i].parent) {
          plan.push_back(nodes[i].action);
        }
        std::reverse(plan.begin(), plan.end());
        return plan;
      }
      if (++expansions > opt_.expansion_budget) return std::nullopt;
      for (const Action& a : successors(nodes[ni].state)) {
        State next = nodes[ni].state;
        apply(next, a);
        double g = nodes[ni].g + action_cost(a);
        std::string k = key(next);
        auto it = best_g.find(k);
        if (it != best_g.end() && it->second <= g + 1e-12) continue;
        best_g[k] = g;
        double h = heuristic(next);
        nodes.push_back({std::move(next), g, ni, a});
        depth.push_back(depth[ni] + 1);
        open.push({g + h, h, depth.back(), order++, nodes.size() - 1});
      }
    }
    return std::nullopt;
  }

  /** Next site on a shortest path from x toward y. */
  unsigned step_toward(unsigned x, unsigned y) const {
    unsigned best = x;
    unsigned best_d = topo_.distance(x, y);
    for (unsigned z = 0; z < n_; ++z) {
      if (topo_.adjacent(x, z) && topo_.distance(z, y) < best_d) {
        best = z;
        best_d = topo_.distance(z, y);
      }
    }
    return best;
  }

  std::vector<Action> greedy() const {
    std::vector<Action> plan;
    State s = initial();
    while (s.done != all_mask()) {
      std::optional<Action> chosen;
      std::optional<std::size_t> first_ready;
      for (std::size_t u = 0; u < units_.size() && !chosen; ++u) {
        if (!units_[u].is_two_qubit() || !ready(s, u)) continue;
        if (!first_ready) first_ready = u;
        const Unit& unit = units_[u];
        if (topo_.adjacent(s.pos[unit.p], s.pos[unit.q])) {
          Action a;
          a.unit = static_cast<unsigned>(u);
          a.parity = unit_cost(u, true) < unit_cost(u, false);
          chosen = a;
        }
      }
      if (!chosen) {
        if (!first_ready) throw std::logic_error("router: dependency cycle");
        const Unit& unit = units_[*first_ready];
        Action a;
        a.is_swap = true;
        a.a = s.pos[unit.p];
        a.b = step_toward(a.a, s.pos[unit.q]);
        chosen = a;
      }
      apply(s, *chosen);
      plan.push_back(*chosen);
    }
    if (goal_ == LayoutGoal::Periodic && !goal_met(s)) {
      for (auto [x, y] : restore_swaps(s.pos, topo_)) {
        Action a;
        a.is_swap = true;
        a.a = x;
        a.b = y;
        apply(s, a);
        plan.push_back(a);
      }
    }
    return plan;
  }

  void emit(const std::vector<Action>& plan, RouteResult& result) const {
    std::vector<Instruction> out;
    std::set<unsigned> anc_wires;
    State s;
    s.pos = identity_permutation(n_);
    auto emit_member = [&](std::size_t m) {
      Instruction instr = c_[m];
      for (unsigned& q : instr.qubits) q = s.pos[q];
      if (!is_unitary_op(instr.gate.type())) anc_wires.insert(instr.qubits[0]);
      out.push_back(std::move(instr));
    };
    auto run_auto = [&]() {
      State probe = s;
      for (std::size_t u : normalize(probe)) {
        for (std::size_t m : units_[u].members) emit_member(m);
      }
      s.done = probe.done;
    };
    run_auto();
    for (const Action& a : plan) {
      result.cost += action_cost(a);
      if (a.is_swap) {
        out.push_back({Gate::fixed(OpType::SWAP), {a.a, a.b}, std::nullopt});
        apply_layout_only(s, a);
      } else {
        const Unit& unit = units_[a.unit];
        std::size_t fold = 0;
        if (a.parity) unit_cost(a.unit, true, &fold);
        std::size_t fold_instr = a.parity ? unit.two_qubit[fold] : kNone;
        for (std::size_t m : unit.members) {
          emit_member(m);
          if (m != fold_instr) continue;
          unsigned x = s.pos[unit.p], y = s.pos[unit.q];
          if (c_[m].gate.type() == OpType::SWAP) {
            out.pop_back();
          } else {
            out.push_back({Gate::fixed(OpType::SWAP), {x, y}, std::nullopt});
          }
          std::swap(s.pos[unit.p], s.pos[unit.q]);
        }
        s.done |= std::uint64_t{1} << a.unit;
      }
      run_auto();
    }
    settle_ancilla_ops(out);
    for (const Instruction& instr : out) {
      if (!is_unitary_op(instr.gate.type())) anc_wires.insert(instr.qubits[0]);
    }
    for (unsigned l = 0; l < c_.n_qubits(); ++l) {
      if (c_.ancillas().count(l)) {
        anc_wires.insert(l);
        anc_wires.insert(s.pos[l]);
      }
    }
    Circuit routed(n_);
    routed.set_ancillas(anc_wires);
    routed.set_instructions(std::move(out));
    std::vector<unsigned> in_map = c_.qubit_map();
    for (unsigned l = c_.n_qubits(); l < n_; ++l) in_map.push_back(l);
    routed.set_qubit_map(compose_permutations(s.pos, in_map));
    result.circuit = std::move(routed);
    result.final_layout = s.pos;
  }

  void apply_layout_only(State& s, const Action& a) const {
    for (unsigned& p : s.pos) {
      if (p == a.a) p = a.b;
      else if (p == a.b) p = a.a;
    }
  }

  const Circuit& c_;
  const Topology& topo_;
  RouteOptions opt_;
  unsigned n_;
  LayoutGoal goal_;
  std::vector<bool> data_;
  std::vector<Unit> units_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<double> unit_min_cost_;
  bool relaxed_ = false;
};

/** Sites strictly between x and y along the route the naive router takes. */
std::vector<unsigned> naive_path(const Topology& topo, unsigned x, unsigned y) {
  const unsigned n = topo.n();
  std::vector<unsigned> up, down;
  if (topo.kind() == TopologyKind::Chain || topo.kind() == TopologyKind::Complete) {
    if (topo.adjacent(x, y)) return {};
    int step = y > x ? 1 : -1;
    std::vector<unsigned> path;
    for (int z = static_cast<int>(x) + step; z != static_cast<int>(y); z += step) {
      path.push_back(static_cast<unsigned>(z));
    }
    return path;
  }
  for (unsigned z = (x + 1) % n; z != y; z = (z + 1) % n) up.push_back(z);
  for (unsigned z = (x + n - 1) % n; z != y; z = (z + n - 1) % n) down.push_back(z);
  if (up.size() != down.size()) return up.size() < down.size() ? up : down;
  unsigned mu = up.empty() ? 0 : *std::min_element(up.begin(), up.end());
  unsigned md = down.empty() ? 0 : *std::min_element(down.begin(), down.end());
  return mu <= md ? up : down;
}

}  // namespace

RouteResult route_circuit(
    const Circuit& c, const Topology& topo, const RouteOptions& options) {
  RouteResult r = Router(c, topo, options).run();
  if (!r.relaxed) return r;
  // Blocks commute as wholes, but the search may interleave their units.
  const unsigned n = topo.n();
  bool sound = n <= kMaxRelaxCheckQubits;
  if (sound) {
    std::vector<unsigned> in_map = c.qubit_map();
    for (unsigned l = c.n_qubits(); l < n; ++l) in_map.push_back(l);
    const std::vector<unsigned> pi =
        compose_permutations(r.circuit.qubit_map(), invert_permutation(in_map));
    const Eigen::Index idle = Eigen::Index{1} << (n - c.n_qubits());
    const CMatrix expected =
        perm_matrix(pi, n).matrix() *
        tensor(circuit_unitary(coherent_core(c)).matrix(), CMatrix::Identity(idle, idle));
    sound = dist_phase(expected, circuit_unitary(coherent_core(r.circuit)).matrix()) <= 1e-8;
  }
  if (sound) return r;
  RouteOptions strict = options;
  strict.relax_blocks = false;
  return Router(c, topo, strict).run();
}

Circuit route(const Circuit& c, const Topology& topo) {
  RouteOptions opt;
  opt.model = CostModel::MinSwap;
  opt.goal = LayoutGoal::Free;
  return route_circuit(c, topo, opt).circuit;
}

Circuit route_naive(const Circuit& c, const Topology& topo, bool expand_cnots) {
  if (c.n_qubits() > topo.n()) {
    throw InvalidQubits("circuit has more qubits than the topology has sites");
  }
  Circuit out(topo.n());
  std::set<unsigned> anc = c.ancillas();
  out.set_ancillas(anc);
  const Circuit deferred = defer_ancilla_ops(c);
  for (const Instruction& instr : deferred.instructions()) {
    if (instr.gate.arity() > 2) {
      throw std::invalid_argument("route: three-qubit gates must be decomposed first");
    }
    if (instr.qubits.size() < 2 || topo.adjacent(instr.qubits[0], instr.qubits[1])) {
      out.add(instr);
      continue;
    }
    const unsigned x = instr.qubits[0], y = instr.qubits[1];
    std::vector<unsigned> path = naive_path(topo, x, y);
    std::vector<std::pair<unsigned, unsigned>> swaps;
    unsigned at = x;
    for (unsigned z : path) {
      swaps.emplace_back(at, z);
      at = z;
    }
    if (!expand_cnots) {
      for (auto [p, q] : swaps) out.add_op(OpType::SWAP, {p, q});
      out.add(instr.gate, {at, y});
      for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
        out.add_op(OpType::SWAP, {it->first, it->second});
      }
      continue;
    }
    // SWAP(p, q) as CX(q,p) CX(p,q) CX(q,p), q being where x lands. The
    // innermost pair's trailing and leading CX(q,p) share the CNOT's control
    // and cancel across it.
    const bool fold = instr.gate.type() == OpType::CNOT && !swaps.empty();
    auto swap_cnots = [&](unsigned p, unsigned q, bool drop_first, bool drop_last) {
      if (!drop_first) out.add_op(OpType::CNOT, {q, p});
      out.add_op(OpType::CNOT, {p, q});
      if (!drop_last) out.add_op(OpType::CNOT, {q, p});
    };
    for (std::size_t k = 0; k < swaps.size(); ++k) {
      swap_cnots(swaps[k].first, swaps[k].second, false, fold && k + 1 == swaps.size());
    }
    out.add(instr.gate, {at, y});
    for (std::size_t k = swaps.size(); k-- > 0;) {
      swap_cnots(swaps[k].first, swaps[k].second, fold && k + 1 == swaps.size(), false);
    }
  }
  std::vector<unsigned> map = c.qubit_map();
  for (unsigned l = c.n_qubits(); l < topo.n(); ++l) map.push_back(l);
  out.set_qubit_map(map);
  return out;
}

std::vector<std::pair<unsigned, unsigned>> restore_swaps(
    const std::vector<unsigned>& layout, const Topology& topo) {
  const unsigned n = static_cast<unsigned>(layout.size());
  if (n > topo.n()) throw InvalidQubits("layout larger than topology");
  std::vector<unsigned> occ(n);
  for (unsigned l = 0; l < n; ++l) occ[layout[l]] = l;
  std::vector<std::pair<unsigned, unsigned>> out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned p = 0; p + 1 < n; ++p) {
      if (occ[p] > occ[p + 1]) {
        std::swap(occ[p], occ[p + 1]);
        out.emplace_back(p, p + 1);
        changed = true;
      }
    }
  }
  return out;
}

}  // namespace xychain
