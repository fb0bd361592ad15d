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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "xychain/circuit.hpp"
#include "xychain/verify.hpp"

namespace xychain {

enum class PipelineMode {
  /** Route with SWAP folding, fuse into CNS, lower to iSWAP. */
  Default,
  /** Swap each distant pair together and back; no fusion. */
  Naive,
  /** Naive routing with SWAPs expanded to CNOTs and cancelled. */
  CnotCount,
};

std::string_view mode_name(PipelineMode m);

struct PipelineOptions {
  PipelineMode mode = PipelineMode::Default;
  /** Append SWAPs that return every logical qubit to its own wire. */
  bool restore_order = false;
  std::uint64_t seed = 0;
  /** Record wall-clock time per pass (makes reports non-reproducible). */
  bool timing = false;
};

struct PassRecord {
  std::string name;
  std::string preserves;
  Census census;
  unsigned iswap_cost = 0;
  std::optional<double> residual;
  std::optional<double> wall_ms;
};

struct PipelineReport {
  PipelineOptions options;
  Topology topology = Topology::chain(1);
  Circuit input;
  Circuit output;
  Census census;
  unsigned iswap = 0;
  unsigned cnot = 0;
  /**
   * CNOT-count mode only: CNOTs left when every SWAP orientation is searched
   * and commuting CNOT pairs are cancelled.
   */
  std::optional<unsigned> cnot_search;
  /** Two-qubit gates left as CNOT or SWAP after fusion, before lowering. */
  unsigned standalone_cnot = 0;
  unsigned standalone_swap = 0;
  /** iSWAPs once the SWAPs restoring logical order are added (3 each). */
  unsigned iswap_if_restored = 0;
  std::vector<unsigned> permutation;
  std::optional<double> oracle_residual;
  std::optional<EquivalenceReport> measurement;
  unsigned measurement_trials = 0;
  std::vector<PassRecord> passes;

  nlohmann::json to_json() const;
};

/** The compiled result disagrees with its input: a compiler bug. */
class OracleBreach : public std::runtime_error {
 public:
  OracleBreach(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/** The input is padded with idle wires up to the topology size. */
Circuit pad_to(const Circuit& c, unsigned n);

/**
 * Compiles a circuit to Rx, Rz and iSWAP on the topology. The unitary oracle
 * runs on registers of at most kMaxVerifyQubits; circuits with ancillas are
 * also checked for equal measurement statistics over 20 random inputs.
 */
PipelineReport run_pipeline(
    const Circuit& c, const Topology& topo, const PipelineOptions& options);

nlohmann::json census_json(const Census& census);

}  // namespace xychain
