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

#include <map>
#include <queue>

#include "catch_amalgamated.hpp"

#include "test_util.hpp"
#include "xychain/fixtures.hpp"
#include "xychain/passes.hpp"
#include "xychain/route.hpp"
#include "xychain/schedule.hpp"
#include "xychain/synthesis.hpp"
#include "xychain/verify.hpp"

namespace xychain {
namespace {

using test::matrix_of;

constexpr int kTrials = 500;
constexpr double kRewriteTolerance = 1e-9;

double phase_residual(const Circuit& a, const Circuit& b) {
  return dist_phase(circuit_unitary(a).matrix(), circuit_unitary(b).matrix());
}

std::size_t count(const Circuit& c, OpType t) {
  auto census = gate_census(c);
  return census.count(t) ? census.at(t) : 0;
}

TEST_CASE("rotation merging and angle canonicalization", "[passes]") {
  Circuit a(1);
  a.add(Gate::rz(kPi / 3), {0});
  a.add(Gate::rz(kPi / 3), {0});
  Circuit sa = simplify_1q(a);
  REQUIRE(sa.size() == 1);
  CHECK(sa[0].gate.angle() == Catch::Approx(2 * kPi / 3));

  Circuit b(1);
  b.add(Gate::rx(2 * kPi), {0});
  CHECK(simplify_1q(b).empty());
  // Rx(2 pi) is -I: dropped only up to global phase.
  CHECK(max_abs(circuit_unitary(b).matrix() + CMatrix::Identity(2, 2)) < 1e-15);

  Circuit c(1);
  c.add(Gate::rz(3 * kPi / 2), {0});
  Circuit sc = simplify_1q(c);
  REQUIRE(sc.size() == 1);
  CHECK(sc[0].gate.angle() == Catch::Approx(-kPi / 2));
}

TEST_CASE("property: merged rotations keep the unitary", "[passes][property]") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < kTrials; ++trial) {
    Circuit c(2);
    for (int i = 0; i < 14; ++i) {
      const int k = pick(rng);
      const unsigned q = static_cast<unsigned>(rng() % 2);
      if (k == 0) c.add_op(OpType::ISWAP, {0, 1});
      else c.add(Gate::rotation(k == 1 ? OpType::Rx : OpType::Rz, test::uniform_angle(rng)), {q});
    }
    Circuit s = simplify_1q(c);
    REQUIRE(phase_residual(c, s) <= kRewriteTolerance);
    // No two same-axis rotations stay adjacent on a wire.
    for (unsigned q = 0; q < 2; ++q) {
      std::optional<OpType> last;
      for (const Instruction& instr : s.instructions()) {
        if (std::find(instr.qubits.begin(), instr.qubits.end(), q) == instr.qubits.end()) continue;
        const OpType t = instr.gate.type();
        if (is_rotation(t)) {
          REQUIRE(last != t);
          REQUIRE(instr.gate.angle() > -kPi);
          REQUIRE(instr.gate.angle() <= kPi);
        }
        last = t;
      }
    }
  }
}

TEST_CASE("property: full-turn rotations are dropped", "[passes][property]") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < kTrials; ++trial) {
    Circuit base = test::random_circuit(2, 8, rng, true);
    std::vector<Instruction> v = base.instructions();
    const std::size_t at = rng() % (v.size() + 1);
    const OpType axis = rng() % 2 ? OpType::Rx : OpType::Rz;
    const double turn = rng() % 2 ? 2 * kPi : -2 * kPi;
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(at),
             Instruction{Gate::rotation(axis, turn), {static_cast<unsigned>(rng() % 2)}, {}});
    Circuit padded(2);
    padded.set_instructions(v);
    Circuit s = simplify_1q(padded);
    REQUIRE(phase_residual(padded, s) <= kRewriteTolerance);
    REQUIRE(s.size() <= simplify_1q(base).size());
  }
}

TEST_CASE("Rz through iSWAP", "[passes]") {
  Circuit c(2);
  c.add(Gate::rz(0.7), {0});
  c.add_op(OpType::ISWAP, {0, 1});
  std::size_t at = 0;
  Circuit f = commute_rz_iswap(c, 0, FlipDirection::Forward, &at);
  REQUIRE(f.size() == 2);
  CHECK(f[0].gate.type() == OpType::ISWAP);
  CHECK(f[1].gate.type() == OpType::Rz);
  CHECK(f[1].qubits == std::vector<unsigned>{1});
  CHECK(at == 1);
  CHECK(phase_residual(c, f) <= 1e-12);

  Circuit back = commute_rz_iswap(f, at, FlipDirection::Backward);
  CHECK(back.instructions() == c.instructions());

  Circuit zero(2);
  zero.add(Gate::rz(0), {0});
  zero.add_op(OpType::ISWAP, {0, 1});
  CHECK(phase_residual(zero, commute_rz_iswap(zero, 0, FlipDirection::Forward)) < 1e-15);

  CHECK_THROWS(commute_rz_iswap(c, 0, FlipDirection::Backward));
  CHECK_THROWS(commute_rz_iswap(c, 1, FlipDirection::Forward));
}

TEST_CASE("property: Rz flips through iSWAP", "[passes][property]") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < kTrials; ++trial) {
    Circuit c = test::random_circuit(3, 10, rng, true);
    const unsigned a = static_cast<unsigned>(rng() % 3);
    const unsigned b = (a + 1 + static_cast<unsigned>(rng() % 2)) % 3;
    const bool forward = rng() % 2;
    std::size_t rz_at;
    if (forward) {
      rz_at = c.size();
      c.add(Gate::rz(test::uniform_angle(rng)), {a});
      c.add_op(OpType::ISWAP, {a, b});
    } else {
      c.add_op(OpType::ISWAP, {a, b});
      rz_at = c.size();
      c.add(Gate::rz(test::uniform_angle(rng)), {a});
    }
    c.append(test::random_circuit(3, 5, rng, true));
    const FlipDirection dir = forward ? FlipDirection::Forward : FlipDirection::Backward;
    std::size_t moved = 0;
    Circuit f = commute_rz_iswap(c, rz_at, dir, &moved);
    REQUIRE(phase_residual(c, f) <= kRewriteTolerance);
    REQUIRE(f[moved].qubits[0] == b);
    const FlipDirection undo = forward ? FlipDirection::Backward : FlipDirection::Forward;
    REQUIRE(commute_rz_iswap(f, moved, undo).instructions() == c.instructions());
  }
}

TEST_CASE("Hadamard triples", "[passes]") {
  const CMatrix h = matrix_of(OpType::H);
  CHECK(dist_phase(rz_matrix(kPi / 2) * rx_matrix(kPi / 2) * rz_matrix(kPi / 2), h) < 1e-12);
  CHECK(dist_phase(rx_matrix(kPi / 2) * rz_matrix(kPi / 2) * rx_matrix(kPi / 2), h) < 1e-12);

  const auto& forms = hadamard_catalog();
  CHECK(forms.size() >= 2);
  for (const HadamardForm& f : forms) {
    RotationSeq seq;
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(f.angles[k]) == Catch::Approx(kPi / 2));
      seq.push_back(Gate::rotation(f.axes[k], f.angles[k]));
    }
    CHECK(dist_phase(seq_matrix(seq), h) < 1e-12);
  }
  CHECK_THROWS(hadamard_rewrite(Circuit(1), forms.size()));
}

TEST_CASE("property: Hadamard forms", "[passes][property]") {
  std::mt19937_64 rng(104);
  const std::size_t n_forms = hadamard_catalog().size();
  for (int trial = 0; trial < kTrials; ++trial) {
    Circuit c = test::random_circuit(2, 10, rng);
    c.add_op(OpType::H, {static_cast<unsigned>(rng() % 2)});
    const std::size_t form = rng() % n_forms;
    Circuit r = hadamard_rewrite(c, form);
    REQUIRE(count(r, OpType::H) == 0);
    REQUIRE(phase_residual(c, r) <= kRewriteTolerance);
    REQUIRE(hadamard_collapse(r, form).instructions() == c.instructions());
  }
}

Circuit ancilla_example() {
  Circuit c(2);
  c.add_ancilla(1);
  c.add_op(OpType::Init0, {1});
  c.add(Gate::rz(0.4), {1});
  c.add_op(OpType::CNOT, {0, 1});
  c.add(Gate::rz(1.1), {1});
  c.add_op(OpType::MeasureZ, {1});
  return c;
}

TEST_CASE("ancilla elisions", "[passes]") {
  Circuit c = ancilla_example();
  Circuit e = ancilla_elide(c);
  CHECK(count(e, OpType::Rz) == 0);
  CHECK(e.size() == 3);
  CHECK(measurement_equivalent(c, e, 20, 0).equivalent);

  Circuit x(2);
  x.add_ancilla(1);
  x.add_op(OpType::Init0, {1});
  x.add_op(OpType::CNOT, {0, 1});
  x.add(Gate::rx(0.5), {1});
  x.add_op(OpType::MeasureZ, {1});
  CHECK(ancilla_elide(x).instructions() == x.instructions());
}

TEST_CASE("deferred resets and measurements", "[passes]") {
  Circuit c = ancilla_example();
  c.add_op(OpType::CNOT, {0, 1});
  Circuit r(2);
  r.add_ancilla(1);
  r.add_op(OpType::H, {0});
  r.append(c);
  r.add_op(OpType::Init0, {1});
  r.add(Gate::rx(0.3), {0});
  Circuit d = defer_ancilla_ops(r);
  REQUIRE(d.size() == r.size());
  CHECK(d[0].gate.type() == OpType::Init0);
  // Wire 1 is used after its measurement, so the measurement stays.
  CHECK(d.instructions() == std::vector<Instruction>(
                                {r[1], r[0], r[2], r[3], r[4], r[5], r[6], r[7], r[8]}));
  Circuit e = defer_ancilla_ops(ancilla_example());
  CHECK(e[e.size() - 1].gate.type() == OpType::MeasureZ);
  CHECK(measurement_equivalent(fixture("dvshor5").circuit,
                               defer_ancilla_ops(fixture("dvshor5").circuit), 3, 0)
            .equivalent);
}

TEST_CASE("property: ancilla elisions keep measurement statistics", "[passes][property]") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < kTrials; ++trial) {
    Circuit body = test::random_circuit(3, 8, rng);
    Circuit c(3);
    c.add_ancilla(2);
    c.add_op(OpType::Init0, {2});
    c.add(Gate::rz(test::uniform_angle(rng)), {2});
    c.append(body);
    c.add(Gate::rz(test::uniform_angle(rng)), {2});
    c.add_op(OpType::MeasureZ, {2});
    Circuit e = ancilla_elide(c);
    REQUIRE(e.size() <= c.size() - 2);
    EquivalenceReport r = measurement_equivalent(c, e, 2, static_cast<std::uint64_t>(trial));
    REQUIRE(r.equivalent);
    REQUIRE(r.residual <= kRewriteTolerance);
  }
}

TEST_CASE("commuting syndrome blocks", "[passes]") {
  // Wires: data 0, data 4 (here 1), ancillas a1 (2) and a3 (3). One block
  // checks X on data 0 and Z on data 4, the other the reverse.
  Circuit c(4);
  c.add_op(OpType::H, {0});
  c.add_op(OpType::CNOT, {0, 2});
  c.add_op(OpType::H, {0});
  c.add_op(OpType::CNOT, {1, 2});
  c.add_op(OpType::CNOT, {0, 3});
  c.add_op(OpType::H, {1});
  c.add_op(OpType::CNOT, {1, 3});
  c.add_op(OpType::H, {1});
  const InstrRange first{0, 4}, second{4, 8};
  CHECK(block_commutator_norm(c, first, second) <= 1e-10);
  Circuit swapped = reorder_commuting_blocks(c, first, second);
  CHECK(swapped[0].qubits == std::vector<unsigned>{0, 3});
  CHECK(phase_residual(c, swapped) <= 1e-10);

  Circuit nc(3);
  nc.add_op(OpType::CNOT, {0, 1});
  nc.add_op(OpType::CNOT, {1, 2});
  CHECK(block_commutator_norm(nc, {0, 1}, {1, 2}) > 0.1);
  CHECK_THROWS_AS(reorder_commuting_blocks(nc, {0, 1}, {1, 2}), NonCommutingBlocks);

  Circuit disjoint(4);
  disjoint.add_op(OpType::CNOT, {0, 1});
  disjoint.add_op(OpType::ISWAP, {2, 3});
  CHECK(block_commutator_norm(disjoint, {0, 1}, {1, 2}) == 0);
}

TEST_CASE("ancilla blocks of the syndrome network", "[passes]") {
  auto blocks = ancilla_blocks(fixture("dvshor5").circuit);
  CHECK(blocks.size() == 4);
}

TEST_CASE("CNS fusion", "[passes]") {
  Circuit a(2);
  a.add_op(OpType::CNOT, {0, 1});
  a.add_op(OpType::SWAP, {0, 1});
  Circuit fa = fuse_cns(a);
  REQUIRE(fa.size() == 1);
  CHECK(fa[0].gate.type() == OpType::CNS);
  CHECK(fa[0].qubits == std::vector<unsigned>{0, 1});

  Circuit b(2);
  b.add_op(OpType::SWAP, {0, 1});
  b.add_op(OpType::CNOT, {0, 1});
  Circuit fb = fuse_cns(b);
  REQUIRE(fb.size() == 1);
  CHECK(fb[0].gate.type() == OpType::CNS);
  CHECK(phase_residual(b, fb) <= 1e-12);

  Circuit c(3);
  c.add_op(OpType::CNOT, {0, 1});
  c.add(Gate::rx(0.3), {2});
  c.add_op(OpType::SWAP, {0, 1});
  Circuit fc = fuse_cns(c);
  REQUIRE(fc.size() == 2);
  CHECK(count(fc, OpType::CNS) == 1);
  CHECK(phase_residual(c, fc) <= 1e-12);
}

TEST_CASE("Toffoli decomposition", "[passes]") {
  Circuit c(3);
  c.add_op(OpType::Toffoli, {0, 1, 2});
  Circuit d = decompose_toffoli(c);
  CHECK(count(d, OpType::CNOT) == 6);
  CHECK(count(d, OpType::Toffoli) == 0);
  CHECK(phase_residual(c, d) <= 1e-10);
}

/** Shortest CNOT word for each 3x3 invertible binary matrix on chain(3). */
std::map<unsigned, unsigned> gl32_distances() {
  using Rows = std::array<unsigned, 3>;
  auto key = [](const Rows& r) { return r[0] | r[1] << 3 | r[2] << 6; };
  const std::pair<unsigned, unsigned> moves[] = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  std::map<unsigned, unsigned> dist;
  Rows start{4, 2, 1};  // row i has bit (2 - i)
  std::queue<Rows> todo;
  dist[key(start)] = 0;
  todo.push(start);
  while (!todo.empty()) {
    Rows r = todo.front();
    todo.pop();
    for (auto [c, t] : moves) {
      Rows n = r;
      n[t] ^= n[c];
      if (dist.emplace(key(n), dist[key(r)] + 1).second) todo.push(n);
    }
  }
  return dist;
}

TEST_CASE("a CNOT across one site", "[passes]") {
  auto dist = gl32_distances();
  CHECK(dist.size() == 168);
  // CNOT(0 -> 2): row 2 becomes row 2 xor row 0.
  const unsigned target = 4 | 2 << 3 | (1 ^ 4) << 6;
  CHECK(dist.at(target) == 4);

  Circuit c(3);
  c.add_op(OpType::CNOT, {0, 2});
  Circuit five = route_naive(c, Topology::chain(3), true);
  CHECK(count(five, OpType::CNOT) == 5);
  CHECK(count(five, OpType::SWAP) == 0);
  CHECK(phase_residual(c, five) <= 1e-10);

  // Cancellation alone cannot reach the four-CNOT optimum found above.
  Circuit cancelled = swaps_to_cnots(route_naive(c, Topology::chain(3)));
  CHECK(count(cancelled, OpType::CNOT) == 5);
  CHECK(phase_residual(c, cancelled) <= 1e-10);
}

TEST_CASE("CNOT cancellation", "[passes]") {
  Circuit c(3);
  c.add_op(OpType::CNOT, {0, 1});
  c.add(Gate::rz(0.2), {0});
  c.add_op(OpType::CNOT, {0, 2});
  c.add_op(OpType::CNOT, {0, 1});
  Circuit d = cancel_cnots(c);
  CHECK(count(d, OpType::CNOT) == 1);
  CHECK(phase_residual(c, d) <= 1e-12);

  Circuit blocked(2);
  blocked.add_op(OpType::CNOT, {0, 1});
  blocked.add(Gate::rx(0.2), {0});
  blocked.add_op(OpType::CNOT, {0, 1});
  CHECK(cancel_cnots(blocked).size() == 3);
}

TEST_CASE("property: gauge search keeps the unitary", "[passes][property]") {
  std::mt19937_64 rng(106);
  for (int trial = 0; trial < 40; ++trial) {
    Circuit c = lower_to_iswap(test::random_circuit(3, 12, rng));
    Circuit g = optimize_gauge(c, false, static_cast<std::uint64_t>(trial), 2);
    REQUIRE(phase_residual(c, g) <= 1e-8);
    REQUIRE(count(g, OpType::ISWAP) == count(c, OpType::ISWAP));
    const Topology all = Topology::complete(3);
    REQUIRE(asap(g, all, DeviceModel()).makespan_1bit <=
            asap(c, all, DeviceModel()).makespan_1bit + 1e-9);
  }
}

TEST_CASE("gauge search with ancilla freedom keeps statistics", "[passes]") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(3);
    c.add_ancilla(2);
    c.add_op(OpType::Init0, {2});
    c.add_op(OpType::H, {2});
    c.append(test::random_circuit(3, 8, rng));
    c.add_op(OpType::H, {2});
    c.add_op(OpType::MeasureZ, {2});
    Circuit low = lower_to_iswap(c);
    Circuit g = optimize_gauge(low, true, 0, 2);
    REQUIRE(measurement_equivalent(c, g, 3, static_cast<std::uint64_t>(trial)).equivalent);
  }
}

}  // namespace
}  // namespace xychain
