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

#include "xychain/fixtures.hpp"
#include "xychain/pipeline.hpp"
#include "xychain/schedule.hpp"

namespace xychain {
namespace {

Circuit toffoli() {
  Circuit c(3);
  c.add_op(OpType::Toffoli, {0, 1, 2});
  return c;
}

void check_native(const Circuit& c) {
  for (const Instruction& i : c.instructions()) {
    const OpType t = i.gate.type();
    CHECK((t == OpType::ISWAP || t == OpType::Rx || t == OpType::Rz || t == OpType::Init0 ||
           t == OpType::MeasureZ));
  }
}

TEST_CASE("Toffoli on a chain of three", "[pipeline]") {
  const Topology chain = Topology::chain(3);
  PipelineReport def = run_pipeline(toffoli(), chain, {});
  CHECK(def.iswap <= 10);
  CHECK(def.iswap_if_restored == 10);
  CHECK(def.permutation == std::vector<unsigned>{1, 0, 2});
  REQUIRE(def.oracle_residual);
  CHECK(*def.oracle_residual <= 1e-8);
  CHECK(is_topology_legal(def.output, chain));
  check_native(def.output);

  PipelineOptions restore;
  restore.restore_order = true;
  PipelineReport r = run_pipeline(toffoli(), chain, restore);
  CHECK(r.iswap == 10);
  CHECK(r.permutation == identity_permutation(3));

  PipelineOptions naive;
  naive.mode = PipelineMode::Naive;
  CHECK(run_pipeline(toffoli(), chain, naive).iswap == 24);

  PipelineOptions cnot;
  cnot.mode = PipelineMode::CnotCount;
  PipelineReport cr = run_pipeline(toffoli(), chain, cnot);
  CHECK(cr.cnot == 14);
  REQUIRE(cr.cnot_search);
  CHECK(*cr.cnot_search <= 14);
}

TEST_CASE("syndrome network on a ring of nine", "[pipeline]") {
  const Circuit ecc = fixture("dvshor5").circuit;
  PipelineReport r = run_pipeline(ecc, Topology::ring(9), {});
  CHECK(r.standalone_cnot == 1);
  CHECK(r.standalone_swap == 0);
  REQUIRE(r.measurement);
  CHECK(r.measurement->equivalent);
  CHECK(r.measurement_trials == 20);
  check_native(r.output);
  for (unsigned q = 0; q < 9; ++q) {
    if (q % 2 == 0) CHECK(r.permutation[q] == (q + 3) % 9);
  }

  const Schedule s = asap(r.output, Topology::ring(9), DeviceModel{});
  CHECK_FALSE(find_overlap(s));
  CHECK(s.makespan_2bit == Catch::Approx(5 * kPi));
}

TEST_CASE("reports", "[pipeline]") {
  PipelineReport r = run_pipeline(fixture("swap_3cnot").circuit, Topology::chain(2), {});
  const nlohmann::json j = r.to_json();
  CHECK(j.contains("passes"));
  CHECK(j.contains("permutation"));
  CHECK(j.dump() == run_pipeline(fixture("swap_3cnot").circuit, Topology::chain(2), {})
                        .to_json()
                        .dump());
  for (const PassRecord& p : r.passes) CHECK_FALSE(p.wall_ms);

  CHECK(pad_to(Circuit(2), 4).n_qubits() == 4);
  CHECK_THROWS(run_pipeline(Circuit(5), Topology::chain(3), {}));
}

}  // namespace
}  // namespace xychain
