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

#include "xychain/synthesis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <queue>
#include <random>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

namespace xychain {

namespace {

using Mat4 = Eigen::Matrix4cd;
using Key = std::vector<long long>;

double snap(double theta) {
  double q = theta / (kPi / 4);
  double r = std::round(q);
  if (std::abs(q - r) * (kPi / 4) < 1e-11) return r * (kPi / 4);
  return theta;
}

/** Phase-normalized, rounded entries of a unitary: equal iff equal up to phase. */
Key phase_key(const CMatrix& m) {
  double best = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) best = std::max(best, std::abs(m(i)));
  Complex ref = 1.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (std::abs(m(i)) > best - 1e-6) {
      ref = std::conj(m(i)) / std::abs(m(i));
      break;
    }
  }
  Key key;
  key.reserve(2 * m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    Complex v = m(i) * ref;
    key.push_back(std::llround(v.real() * 1e6));
    key.push_back(std::llround(v.imag() * 1e6));
  }
  return key;
}

CMatrix hadamard() {
  CMatrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

/** Rz(a) Ry(b) Rz(c) proportional to u (matrix product order). */
void zyz_angles(const CMatrix& u, double& a, double& b, double& c) {
  Complex det = u.determinant();
  CMatrix v = u / std::sqrt(det);
  double cb = std::abs(v(0, 0)), sb = std::abs(v(1, 0));
  b = 2 * std::atan2(sb, cb);
  double sum = cb > 1e-12 ? 2 * std::arg(v(1, 1)) : 0.0;
  double diff = sb > 1e-12 ? 2 * std::arg(v(1, 0)) : 0.0;
  a = (sum + diff) / 2;
  c = (sum - diff) / 2;
}

CMatrix ry_matrix(double theta) {
  CMatrix m(2, 2);
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

/** s with Rx(t) = Rz(s) Ry(t) Rz(-s) for all t. */
double x_from_y_offset() {
  static const double s = [] {
    for (double cand : {kPi / 2, -kPi / 2}) {
      CMatrix lhs = rx_matrix(0.37);
      CMatrix rhs = rz_matrix(cand) * ry_matrix(0.37) * rz_matrix(-cand);
      if (dist_phase(lhs, rhs) < 1e-12) return cand;
    }
    throw std::logic_error("rotation axis convention check failed");
  }();
  return s;
}

RotationSeq make_seq(OpType outer, double first, double middle, double last) {
  OpType inner = outer == OpType::Rz ? OpType::Rx : OpType::Rz;
  RotationSeq seq;
  if (snap(canonical_angle(middle)) == 0.0) {
    first += last;
    last = 0;
  }
  const std::pair<OpType, double> parts[] = {
      {outer, first}, {inner, middle}, {outer, last}};
  for (const auto& [axis, angle] : parts) {
    double t = snap(canonical_angle(angle));
    if (t != 0.0) seq.push_back(Gate::rotation(axis, t));
  }
  return seq;
}

/** Time-ordered zxz sequence: Rz(gamma), Rx(beta), Rz(alpha). */
RotationSeq zxz_impl(const CMatrix& u) {
  double a, b, c;
  zyz_angles(u, a, b, c);
  double s = x_from_y_offset();
  double alpha = a - s, beta = b, gamma = c + s;
  RotationSeq s1 = make_seq(OpType::Rz, gamma, beta, alpha);
  RotationSeq s2 = make_seq(OpType::Rz, gamma + kPi, -beta, alpha + kPi);
  RotationSeq& best = rotation_time(s2) < rotation_time(s1) - 1e-12 ? s2 : s1;
  if (dist_phase(seq_matrix(best), u) > 1e-9) {
    throw std::logic_error("Euler decomposition failed its own check");
  }
  return best;
}

bool is_pauli_up_to_phase(const CMatrix& m) {
  const CMatrix* paulis[] = {nullptr, &pauli_x(), &pauli_y(), &pauli_z()};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CMatrix a = i ? *paulis[i] : CMatrix::Identity(2, 2);
      CMatrix b = j ? *paulis[j] : CMatrix::Identity(2, 2);
      if (dist_phase(tensor(a, b), m) < 1e-9) return true;
    }
  }
  return false;
}

bool is_two_qubit_clifford(const CMatrix& t) {
  CMatrix id = CMatrix::Identity(2, 2);
  CMatrix gens[] = {tensor(pauli_x(), id), tensor(pauli_z(), id),
                    tensor(id, pauli_x()), tensor(id, pauli_z())};
  for (const CMatrix& g : gens) {
    if (!is_pauli_up_to_phase(t * g * t.adjoint())) return false;
  }
  return true;
}

Mat4 iswap4() { return Gate::fixed(OpType::ISWAP).unitary().matrix(); }

CMatrix layer_matrix(const std::array<RotationSeq, 2>& layer) {
  return tensor(seq_matrix(layer[0]), seq_matrix(layer[1]));
}

CMatrix assemble(const SynthesizedDressing& d) {
  CMatrix u = layer_matrix(d.layers[0]);
  const Mat4 isw = iswap4();
  for (unsigned k = 1; k <= d.n_iswaps; ++k) {
    u = layer_matrix(d.layers[k]) * isw * u;
  }
  return u;
}

/** Continuous search: Euler angles per slot plus a global phase. */
struct DressingFit {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  Mat4 target;
  unsigned n_iswaps;

  int inputs() const { return static_cast<int>(6 * (n_iswaps + 1) + 1); }
  int values() const { return 32; }

  static Eigen::Matrix2cd euler(double p0, double p1, double p2) {
    return rz_matrix(p2) * rx_matrix(p1) * rz_matrix(p0);
  }

  Mat4 build(const Eigen::VectorXd& x) const {
    const Mat4 isw = iswap4();
    Mat4 u = Mat4::Identity();
    for (unsigned k = 0; k <= n_iswaps; ++k) {
      const double* p = x.data() + 6 * k;
      Eigen::Matrix2cd a = euler(p[0], p[1], p[2]);
      Eigen::Matrix2cd b = euler(p[3], p[4], p[5]);
      Mat4 layer = tensor(a, b);
      u = layer * u;
      if (k < n_iswaps) u = isw * u;
    }
    return u;
  }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    Mat4 diff = build(x) - std::exp(kI * x(x.size() - 1)) * target;
    for (int i = 0; i < 16; ++i) {
      f(2 * i) = diff(i).real();
      f(2 * i + 1) = diff(i).imag();
    }
    return 0;
  }
};

SynthesizedDressing continuous_search(
    const CMatrix& target, unsigned n_iswaps, std::uint64_t seed) {
  DressingFit fit{target, n_iswaps};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  Eigen::VectorXd best_x;
  double best = std::numeric_limits<double>::infinity();
  constexpr int kRestarts = 32;
  for (int r = 0; r < kRestarts && best > 1e-13; ++r) {
    Eigen::VectorXd x(fit.inputs());
    for (int i = 0; i < x.size(); ++i) x(i) = angle(rng);
    Eigen::NumericalDiff<DressingFit> numdiff(fit);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<DressingFit>> lm(numdiff);
    lm.parameters.maxfev = 4000;
    lm.parameters.xtol = 1e-15;
    lm.parameters.ftol = 1e-15;
    lm.minimize(x);
    double d = dist_phase(fit.build(x), target);
    if (d < best) {
      best = d;
      best_x = x;
    }
  }
  if (!(best < 1e-8)) {
    throw SynthesisError(
        "no dressing with " + std::to_string(n_iswaps) +
        " iSWAP(s) found (best residual " + std::to_string(best) + ")");
  }
  SynthesizedDressing out;
  out.target = target;
  out.n_iswaps = n_iswaps;
  for (unsigned k = 0; k <= n_iswaps; ++k) {
    const double* p = best_x.data() + 6 * k;
    out.layers.push_back({euler_best(DressingFit::euler(p[0], p[1], p[2])),
                          euler_best(DressingFit::euler(p[3], p[4], p[5]))});
  }
  out.residual = dist_phase(assemble(out), target);
  return out;
}

struct LocalPair {
  Mat4 matrix;
  unsigned a, b;
  double cost;
};

std::vector<LocalPair> local_pairs(bool restricted) {
  const auto& table = clifford_table();
  std::vector<LocalPair> out;
  for (unsigned i = 0; i < table.size(); ++i) {
    if (restricted && table[i].seq.size() > 1) continue;
    for (unsigned j = 0; j < table.size(); ++j) {
      if (restricted && table[j].seq.size() > 1) continue;
      out.push_back({tensor(table[i].matrix, table[j].matrix), i, j,
                     rotation_time(table[i].seq) + rotation_time(table[j].seq)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const LocalPair& x, const LocalPair& y) {
    return x.cost < y.cost;
  });
  return out;
}

std::optional<SynthesizedDressing> clifford_search(
    const CMatrix& target, unsigned n_iswaps) {
  if (n_iswaps > 3) return std::nullopt;
  const auto& table = clifford_table();
  const std::vector<LocalPair> all = local_pairs(false);
  const std::vector<LocalPair> inner =
      n_iswaps == 3 ? local_pairs(true) : all;
  std::map<Key, std::size_t> final_lookup;
  for (std::size_t i = 0; i < all.size(); ++i) {
    final_lookup.emplace(phase_key(all[i].matrix), i);
  }
  const Mat4 isw = iswap4();
  const Mat4 t = target;
  double best = std::numeric_limits<double>::infinity();
  std::vector<const LocalPair*> best_layers;
  std::vector<const LocalPair*> stack;

  auto recurse = [&](auto&& self, const Mat4& prefix, double cost,
                     unsigned depth) -> void {
    if (depth == n_iswaps) {
      Mat4 rest = t * prefix.adjoint();
      auto it = final_lookup.find(phase_key(rest));
      if (it == final_lookup.end()) return;
      double total = cost + all[it->second].cost;
      if (total < best - 1e-12) {
        best = total;
        best_layers = stack;
        best_layers.push_back(&all[it->second]);
      }
      return;
    }
    const std::vector<LocalPair>& choices = depth == 0 ? all : inner;
    for (const LocalPair& lp : choices) {
      if (cost + lp.cost >= best - 1e-12) break;
      stack.push_back(&lp);
      self(self, Mat4(isw * lp.matrix * prefix), cost + lp.cost, depth + 1);
      stack.pop_back();
    }
  };
  if (n_iswaps == 0) {
    auto it = final_lookup.find(phase_key(target));
    if (it == final_lookup.end()) return std::nullopt;
    best_layers = {&all[it->second]};
  } else {
    recurse(recurse, Mat4::Identity(), 0.0, 0);
  }
  if (best_layers.empty()) return std::nullopt;
  SynthesizedDressing out;
  out.target = target;
  out.n_iswaps = n_iswaps;
  for (const LocalPair* lp : best_layers) {
    out.layers.push_back({table[lp->a].seq, table[lp->b].seq});
  }
  out.residual = dist_phase(assemble(out), target);
  if (out.residual > 1e-10) return std::nullopt;
  return out;
}

}  // namespace

double rotation_time(const RotationSeq& seq) {
  double t = 0;
  for (const Gate& g : seq) t += std::abs(g.angle());
  return t;
}

CMatrix seq_matrix(const RotationSeq& seq) {
  CMatrix m = CMatrix::Identity(2, 2);
  for (const Gate& g : seq) m = g.unitary().matrix() * m;
  return m;
}

RotationSeq euler_zxz(const CMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionMismatch("Euler needs 2x2");
  return zxz_impl(u);
}

RotationSeq euler_xzx(const CMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionMismatch("Euler needs 2x2");
  // H Rz H = Rx, so an xzx form of u is a zxz form of H u H.
  CMatrix h = hadamard();
  RotationSeq z = zxz_impl(h * u * h);
  RotationSeq out;
  for (const Gate& g : z) {
    out.push_back(Gate::rotation(
        g.type() == OpType::Rz ? OpType::Rx : OpType::Rz, g.angle()));
  }
  return out;
}

RotationSeq euler_best(const CMatrix& u) {
  RotationSeq a = euler_zxz(u);
  RotationSeq b = euler_xzx(u);
  double ta = rotation_time(a), tb = rotation_time(b);
  if (tb < ta - 1e-12) return b;
  if (std::abs(tb - ta) <= 1e-12 && b.size() < a.size()) return b;
  return a;
}

const std::vector<CliffordEntry>& clifford_table() {
  static const std::vector<CliffordEntry> table = [] {
    const std::pair<OpType, double> moves[] = {
        {OpType::Rz, kPi / 2}, {OpType::Rz, -kPi / 2}, {OpType::Rx, kPi / 2},
        {OpType::Rx, -kPi / 2}, {OpType::Rz, kPi},     {OpType::Rx, kPi}};
    struct Node {
      double cost;
      std::size_t order;
      CMatrix m;
      RotationSeq seq;
    };
    auto cmp = [](const Node& x, const Node& y) {
      if (x.cost != y.cost) return x.cost > y.cost;
      return x.order > y.order;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> frontier(cmp);
    std::size_t counter = 0;
    frontier.push({0.0, counter++, CMatrix::Identity(2, 2), {}});
    std::map<Key, bool> done;
    std::vector<CliffordEntry> out;
    while (!frontier.empty()) {
      Node node = frontier.top();
      frontier.pop();
      Key key = phase_key(node.m);
      if (done.count(key)) continue;
      done[key] = true;
      out.push_back({node.m, node.seq});
      for (const auto& [axis, angle] : moves) {
        Gate g = Gate::rotation(axis, angle);
        CMatrix m = g.unitary().matrix() * node.m;
        if (done.count(phase_key(m))) continue;
        RotationSeq seq = node.seq;
        seq.push_back(g);
        frontier.push({node.cost + std::abs(angle), counter++, m, std::move(seq)});
      }
    }
    if (out.size() != 24) throw std::logic_error("Clifford enumeration failed");
    return out;
  }();
  return table;
}

Circuit SynthesizedDressing::circuit() const {
  Circuit c(2);
  emit(c, 0, 1);
  return c;
}

void SynthesizedDressing::emit(Circuit& out, unsigned a, unsigned b) const {
  for (unsigned k = 0; k < layers.size(); ++k) {
    for (const Gate& g : layers[k][0]) out.add(g, {a});
    for (const Gate& g : layers[k][1]) out.add(g, {b});
    if (k < n_iswaps) out.add_op(OpType::ISWAP, {a, b});
  }
}

double SynthesizedDressing::total_rotation_time() const {
  double t = 0;
  for (const auto& layer : layers) t += rotation_time(layer[0]) + rotation_time(layer[1]);
  return t;
}

SynthesizedDressing synthesize_dressing(
    const Unitary& target, unsigned n_iswaps, std::uint64_t seed) {
  if (target.dim() != 4) throw DimensionMismatch("dressing target must be 4x4");
  const CMatrix& t = target.matrix();
  if (n_iswaps == 1 &&
      !locally_equivalent(target, Gate::fixed(OpType::ISWAP).unitary())) {
    throw SynthesisError(
        "target is not locally equivalent to iSWAP; one iSWAP cannot build it");
  }
  std::optional<SynthesizedDressing> cont;
  try {
    cont = continuous_search(t, n_iswaps, seed);
  } catch (const SynthesisError&) {
    if (!is_two_qubit_clifford(t)) throw;
  }
  if (is_two_qubit_clifford(t)) {
    std::optional<SynthesizedDressing> disc = clifford_search(t, n_iswaps);
    if (disc && (!cont || disc->total_rotation_time() <=
                              cont->total_rotation_time() + 1e-12)) {
      return *disc;
    }
  }
  if (!cont) {
    throw SynthesisError(
        "no dressing with " + std::to_string(n_iswaps) + " iSWAP(s) found");
  }
  return *cont;
}

unsigned iswap_cost(OpType type) {
  switch (type) {
    case OpType::CNS:
    case OpType::ISWAP:
      return 1;
    case OpType::CNOT:
    case OpType::PhaseDiag:
      return 2;
    case OpType::SWAP:
    case OpType::SqrtSWAP:
      return 3;
    default:
      return 0;
  }
}

const SynthesizedDressing& cached_dressing(OpType type) {
  if (!is_two_qubit(type)) {
    throw std::invalid_argument("no dressing for a non-two-qubit gate");
  }
  static std::mutex mu;
  static std::map<OpType, SynthesizedDressing> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end()) {
    it = cache.emplace(type, synthesize_dressing(
                                 Gate::fixed(type).unitary(), iswap_cost(type), 0))
             .first;
  }
  return it->second;
}

}  // namespace xychain
