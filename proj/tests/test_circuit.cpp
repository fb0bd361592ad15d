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

#include "catch_amalgamated.hpp"

#include "test_util.hpp"
#include "xychain/fixtures.hpp"
#include "xychain/text_format.hpp"
#include "xychain/verify.hpp"

namespace xychain {
namespace {

using test::matrix_of;

TEST_CASE("parse the basic statements", "[circuit]") {
  Circuit a = parse_circuit("qubits 2\ncnot 0 1\n");
  REQUIRE(a.n_qubits() == 2);
  REQUIRE(a.size() == 1);
  CHECK(a[0].gate.type() == OpType::CNOT);
  CHECK(a[0].qubits == std::vector<unsigned>{0, 1});

  Circuit b = parse_circuit("qubits 2\nrz 0 1.5707963268\niswap 0 1\n");
  REQUIRE(b.size() == 2);
  CHECK(b[0].gate.type() == OpType::Rz);
  CHECK(b[0].gate.angle() == Catch::Approx(kPi / 2).margin(1e-10));
  CHECK(b[1].gate.type() == OpType::ISWAP);

  Circuit c = parse_circuit("# comment\nqubits 3  # trailing\n\nancilla 2\ninit0 2\nh 0\nmeasz 2\n");
  CHECK(c.ancillas() == std::set<unsigned>{2});
  CHECK(c.size() == 3);
}

TEST_CASE("parse errors carry a position", "[circuit]") {
  auto error_at = [](const std::string& text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(0u, 0u);
  };
  CHECK(error_at("cnot 0 1\n").first == 1);
  CHECK(error_at("qubits 2\ncnot 0 5\n") == std::make_pair(2u, 8u));
  CHECK(error_at("qubits 2\nfoo 0\n") == std::make_pair(2u, 1u));
  CHECK(error_at("qubits 2\nrz 0\n").first == 2);
  CHECK(error_at("qubits 2\nrz 0 abc\n") == std::make_pair(2u, 6u));
  CHECK(error_at("qubits 2\ncnot 1 1\n").first == 2);
  CHECK(error_at("qubits 2\ninit0 0\n").first == 2);
  CHECK(error_at("qubits 2\nqubits 3\n").first == 2);
}

TEST_CASE("serialize then parse reproduces every fixture", "[circuit]") {
  for (const std::string& name : fixture_names()) {
    const Circuit c = fixture(name).circuit;
    const Circuit back = parse_circuit(serialize_circuit(c));
    INFO(name);
    CHECK(back.n_qubits() == c.n_qubits());
    CHECK(back.ancillas() == c.ancillas());
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(back[i].gate.type() == c[i].gate.type());
      CHECK(back[i].qubits == c[i].qubits);
      CHECK(back[i].gate.angle() == c[i].gate.angle());
    }
  }
}

TEST_CASE("circuit validation", "[circuit]") {
  Circuit c(3);
  CHECK_THROWS_AS(c.add_op(OpType::CNOT, {0, 3}), InvalidQubits);
  CHECK_THROWS_AS(c.add_op(OpType::CNOT, {1, 1}), InvalidQubits);
  CHECK_THROWS(c.add_op(OpType::CNOT, {0}));
  CHECK_THROWS(c.add_op(OpType::Init0, {0}));
  c.add_ancilla(2);
  CHECK_NOTHROW(c.add_op(OpType::Init0, {2}));
  CHECK_THROWS(c.set_qubit_map({0, 0, 1}));
  CHECK(c.qubit_map() == identity_permutation(3));
}

TEST_CASE("circuit unitaries", "[circuit]") {
  CHECK(max_abs(circuit_unitary(Circuit(2)).matrix() - CMatrix::Identity(4, 4)) == 0);

  Circuit twice(2);
  twice.add_op(OpType::CNOT, {0, 1});
  twice.add_op(OpType::CNOT, {0, 1});
  CHECK(max_abs(circuit_unitary(twice).matrix() - CMatrix::Identity(4, 4)) < 1e-15);

  const Fixture swap = fixture("swap_3cnot");
  CHECK(dist_phase(circuit_unitary(swap.circuit).matrix(), matrix_of(OpType::SWAP)) < 1e-10);

  // Time order: the later gate multiplies from the left.
  Circuit order(1);
  order.add(Gate::rz(0.3), {0});
  order.add(Gate::rx(0.4), {0});
  CHECK(max_abs(circuit_unitary(order).matrix() - rx_matrix(0.4) * rz_matrix(0.3)) < 1e-15);

  Circuit measured(2);
  measured.add_ancilla(1);
  measured.add_op(OpType::CNOT, {0, 1});
  measured.add_op(OpType::MeasureZ, {1});
  CHECK_THROWS(circuit_unitary(measured));
  CHECK(coherent_core(measured).size() == 1);
}

TEST_CASE("inverse circuits undo random circuits", "[circuit]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c = test::random_circuit(3, 20, rng);
    Circuit round = c;
    round.append(inverse(c));
    Statevector psi = Statevector::random(3, rng);
    Statevector out = apply(round, psi);
    const Complex overlap = psi.amplitudes().dot(out.amplitudes());
    REQUIRE(std::abs(std::abs(overlap) - 1) < 1e-9);
  }
}

TEST_CASE("topologies", "[circuit]") {
  Topology chain = Topology::parse("chain:3");
  CHECK(chain.adjacent(0, 1));
  CHECK_FALSE(chain.adjacent(0, 2));
  CHECK(chain.distance(0, 2) == 2);

  Topology ring = Topology::parse("ring:9");
  CHECK(ring.adjacent(0, 8));
  CHECK(ring.distance(1, 7) == 3);
  CHECK(ring.to_string() == "ring:9");

  CHECK(Topology::parse("complete:4").adjacent(0, 3));
  CHECK_THROWS(Topology::parse("ring"));
  CHECK_THROWS(Topology::parse("torus:4"));
  CHECK_THROWS(Topology::parse("chain:x"));

  Circuit c(3);
  c.add_op(OpType::CNOT, {0, 2});
  CHECK_FALSE(is_topology_legal(c, chain));
  CHECK(is_topology_legal(c, Topology::ring(3)));
}

TEST_CASE("gate census", "[circuit]") {
  CHECK(gate_census(Circuit(2)).empty());
  const Census census = gate_census(fixture("cnot_2iswap").circuit);
  CHECK(census.at(OpType::ISWAP) == 2);
  CHECK(count_one_qubit(fixture("cnot_2iswap").circuit) >= 1);
  CHECK(gate_census(fixture("swap_3iswap").circuit).at(OpType::ISWAP) == 3);
  CHECK(count_two_qubit(fixture("toffoli_6cnot").circuit) == 6);
}

}  // namespace
}  // namespace xychain
