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

#include "xychain/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace xychain {

Statevector::Statevector(unsigned n) : n_(n), data_(CMatrix::Zero(Eigen::Index{1} << n, 1)) {
  data_(0, 0) = 1.0;
}

Statevector::Statevector(unsigned n, CVector amplitudes) : n_(n) {
  if (amplitudes.size() != (Eigen::Index{1} << n)) {
    throw DimensionMismatch("statevector needs 2^n amplitudes");
  }
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-10) {
    throw NotUnitary("statevector is not normalized");
  }
  data_ = amplitudes;
}

Statevector Statevector::basis(unsigned n, std::uint64_t index) {
  if (index >> n) throw InvalidQubits("basis index outside the register");
  CVector v = CVector::Zero(Eigen::Index{1} << n);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return Statevector(n, std::move(v));
}

Statevector Statevector::random(unsigned n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(rng), normal(rng));
  v /= v.norm();
  return Statevector(n, std::move(v));
}

void Statevector::apply_gate(const CMatrix& gate, std::span<const unsigned> qubits) {
  apply_gate_inplace(data_, gate, qubits, n_);
}

namespace {

inline unsigned bit_of(std::uint64_t x, unsigned q, unsigned n) {
  return static_cast<unsigned>((x >> (n - 1 - q)) & 1u);
}

double weight_of_one(const Statevector& psi, unsigned q) {
  const unsigned n = psi.n_qubits();
  double w = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    if (bit_of(x, q, n)) w += std::norm(psi[x]);
  }
  return w;
}

std::string basis_label(std::uint64_t x, unsigned n) {
  std::string s = "|";
  for (unsigned q = 0; q < n; ++q) s += bit_of(x, q, n) ? '1' : '0';
  return s + ">";
}

void require_size(const Circuit& a, const Circuit& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionMismatch("circuits act on registers of different size");
  }
  if (a.n_qubits() > kMaxVerifyQubits) {
    throw DimensionMismatch(
        "register of " + std::to_string(a.n_qubits()) + " qubits exceeds the verifier limit of " +
        std::to_string(kMaxVerifyQubits));
  }
}

}  // namespace

Statevector apply(const Circuit& c, const Statevector& psi) {
  if (c.n_qubits() != psi.n_qubits()) {
    throw DimensionMismatch("circuit and state have different qubit counts");
  }
  Statevector out = psi;
  for (const Instruction& instr : c.instructions()) {
    switch (instr.gate.type()) {
      case OpType::MeasureZ:
        throw std::invalid_argument("apply: circuit contains a measurement");
      case OpType::Init0:
        if (weight_of_one(out, instr.qubits[0]) > 1e-10) {
          throw std::invalid_argument(
              "apply: Init0 on qubit " + std::to_string(instr.qubits[0]) + " which is not |0>");
        }
        break;
      default:
        out.apply_gate(instr.gate.unitary().matrix(), instr.qubits);
    }
  }
  return out;
}

std::string_view equiv_class_name(EquivClass k) {
  switch (k) {
    case EquivClass::Exact: return "exact";
    case EquivClass::Phase: return "phase";
    case EquivClass::PhasePermutation: return "phase+permutation";
    case EquivClass::Local: return "local";
    case EquivClass::Measurement: return "measurement";
  }
  return "?";
}

EquivClass parse_equiv_class(const std::string& name) {
  for (EquivClass k : {EquivClass::Exact, EquivClass::Phase, EquivClass::PhasePermutation,
                       EquivClass::Local, EquivClass::Measurement}) {
    if (equiv_class_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown equivalence class '" + name + "'");
}

std::vector<unsigned> declared_permutation(const Circuit& a, const Circuit& b) {
  require_size(a, b);
  return compose_permutations(b.qubit_map(), invert_permutation(a.qubit_map()));
}

EquivalenceReport equivalent(
    const Circuit& a, const Circuit& b, EquivClass cls,
    const std::optional<std::vector<unsigned>>& perm, double tolerance) {
  require_size(a, b);
  if (cls == EquivClass::Measurement) {
    return measurement_equivalent(a, b, 20, 0, perm, tolerance);
  }
  if (cls == EquivClass::PhasePermutation && !perm) {
    throw MissingPermutation("phase+permutation equivalence needs a declared permutation");
  }
  const unsigned n = a.n_qubits();
  EquivalenceReport r;
  r.cls = cls;
  r.permutation = perm;
  CMatrix ua = circuit_unitary(coherent_core(a)).matrix();
  CMatrix ub = circuit_unitary(coherent_core(b)).matrix();
  if (perm) ua = perm_matrix(*perm, n).matrix() * ua;

  if (cls == EquivClass::Local) {
    if (n != 2) throw DimensionMismatch("local equivalence is defined for two qubits");
    LocalInvariants ia = local_invariants(Unitary(ua)), ib = local_invariants(Unitary(ub));
    r.residual = std::abs(ia.g1 - ib.g1) + std::abs(ia.g2 - ib.g2);
    r.equivalent = r.residual <= tolerance;
    if (!r.equivalent) {
      std::ostringstream w;
      w << "invariants (" << ia.g1.real() << "," << ia.g1.imag() << "; " << ia.g2 << ") vs ("
        << ib.g1.real() << "," << ib.g1.imag() << "; " << ib.g2 << ")";
      r.witness = w.str();
    }
    return r;
  }

  CMatrix aligned = ua;
  if (cls != EquivClass::Exact) {
    Complex overlap = (ua.adjoint() * ub).trace();
    if (std::abs(overlap) > 0) aligned = ua * (overlap / std::abs(overlap));
    r.residual = dist_phase(ua, ub);
  } else {
    r.residual = max_abs(ua - ub);
  }
  r.equivalent = r.residual <= tolerance;
  if (!r.equivalent) {
    Eigen::Index worst = 0;
    double worst_norm = -1;
    for (Eigen::Index j = 0; j < ua.cols(); ++j) {
      double d = (aligned.col(j) - ub.col(j)).norm();
      if (d > worst_norm) {
        worst_norm = d;
        worst = j;
      }
    }
    std::ostringstream w;
    w << "input " << basis_label(static_cast<std::uint64_t>(worst), n)
      << " differs by " << worst_norm;
    r.witness = w.str();
  }
  return r;
}

namespace {

struct WireRoles {
  std::set<unsigned> initialized;
  std::set<unsigned> measured;
};

WireRoles wire_roles(const Circuit& c) {
  WireRoles roles;
  const auto& v = c.instructions();
  std::vector<bool> seen(c.n_qubits(), false);
  for (const Instruction& instr : v) {
    for (unsigned q : instr.qubits) {
      if (!seen[q] && instr.gate.type() == OpType::Init0) roles.initialized.insert(q);
      seen[q] = true;
    }
  }
  std::vector<bool> closed(c.n_qubits(), false);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    for (unsigned q : it->qubits) {
      if (!closed[q] && it->gate.type() == OpType::MeasureZ) roles.measured.insert(q);
      closed[q] = true;
    }
  }
  for (const Instruction& instr : v) {
    if (instr.gate.type() == OpType::MeasureZ && !roles.measured.count(instr.qubits[0])) {
      throw std::invalid_argument(
          "measurement on qubit " + std::to_string(instr.qubits[0]) +
          " is followed by further operations");
    }
  }
  return roles;
}

/** Outcome index (over `measured`, ascending) -> unnormalized conditional state. */
std::map<std::uint64_t, CVector> split_by_outcome(
    const CVector& psi, unsigned n, const std::vector<unsigned>& measured) {
  std::vector<bool> is_measured(n, false);
  for (unsigned q : measured) is_measured[q] = true;
  const unsigned rest = n - static_cast<unsigned>(measured.size());
  std::map<std::uint64_t, CVector> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << measured.size()); ++m) {
    out.emplace(m, CVector::Zero(Eigen::Index{1} << rest));
  }
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::uint64_t m = 0, r = 0;
    for (unsigned q = 0; q < n; ++q) {
      if (is_measured[q]) m = (m << 1) | bit_of(x, q, n);
      else r = (r << 1) | bit_of(x, q, n);
    }
    out[m](static_cast<Eigen::Index>(r)) = psi(static_cast<Eigen::Index>(x));
  }
  return out;
}

}  // namespace

EquivalenceReport measurement_equivalent(
    const Circuit& a, const Circuit& b, unsigned trials, std::uint64_t seed,
    const std::optional<std::vector<unsigned>>& perm, double tolerance) {
  require_size(a, b);
  const unsigned n = a.n_qubits();
  std::vector<unsigned> pi = perm ? *perm : declared_permutation(a, b);
  check_permutation(pi, n);

  WireRoles ra = wire_roles(a), rb = wire_roles(b);
  if (ra.initialized != rb.initialized) {
    throw AncillaMismatch("the circuits initialize different wires");
  }
  std::set<unsigned> mapped;
  for (unsigned q : ra.measured) mapped.insert(pi[q]);
  if (mapped != rb.measured) {
    throw AncillaMismatch("measured wires do not correspond under the permutation");
  }
  const std::vector<unsigned> measured(ra.measured.begin(), ra.measured.end());

  Circuit core_a = coherent_core(a), core_b = coherent_core(b);
  EquivalenceReport r;
  r.cls = EquivClass::Measurement;
  r.permutation = pi;
  std::mt19937_64 rng(seed);
  std::vector<unsigned> free_wires;
  for (unsigned q = 0; q < n; ++q) {
    if (!ra.initialized.count(q)) free_wires.push_back(q);
  }
  const unsigned k = static_cast<unsigned>(free_wires.size());

  for (unsigned t = 0; t < trials; ++t) {
    Statevector sub = Statevector::random(k, rng);
    CVector amp = CVector::Zero(Eigen::Index{1} << n);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
      std::uint64_t x = 0;
      for (unsigned i = 0; i < k; ++i) {
        if (bit_of(s, i, k)) x |= std::uint64_t{1} << (n - 1 - free_wires[i]);
      }
      amp(static_cast<Eigen::Index>(x)) = sub[s];
    }
    Statevector psi(n, std::move(amp));
    CVector out_a = apply(core_a, psi).amplitudes();
    CVector out_b_raw = apply(core_b, psi).amplitudes();
    // Read b's state in a's wire labels.
    CVector out_b(out_b_raw.size());
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      std::uint64_t y = 0;
      for (unsigned q = 0; q < n; ++q) {
        if (bit_of(x, q, n)) y |= std::uint64_t{1} << (n - 1 - pi[q]);
      }
      out_b(static_cast<Eigen::Index>(x)) = out_b_raw(static_cast<Eigen::Index>(y));
    }
    auto parts_a = split_by_outcome(out_a, n, measured);
    auto parts_b = split_by_outcome(out_b, n, measured);
    for (const auto& [m, va] : parts_a) {
      const CVector& vb = parts_b.at(m);
      double pa = va.squaredNorm(), pb = vb.squaredNorm();
      double dev = std::abs(pa - pb);
      Complex overlap = vb.dot(va);
      CVector aligned = vb;
      if (std::abs(overlap) > 0) aligned *= overlap / std::abs(overlap);
      double state_dev = (va - aligned).cwiseAbs().maxCoeff();
      double worst = std::max(dev, state_dev);
      r.residual = std::max(r.residual, worst);
      if (worst > tolerance && !r.witness) {
        std::ostringstream w;
        w << "trial " << t << ", outcome ";
        for (std::size_t i = 0; i < measured.size(); ++i) {
          w << (i ? "," : "") << "q" << measured[i] << "="
            << ((m >> (measured.size() - 1 - i)) & 1u);
        }
        w << ": p_a=" << pa << " p_b=" << pb << ", state deviation " << state_dev;
        r.witness = w.str();
      }
    }
  }
  r.equivalent = !r.witness.has_value();
  return r;
}

}  // namespace xychain
