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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "xychain/circuit.hpp"

namespace xychain {

/** Energy scales (hbar = 1): a rotation by phi takes |phi|/e1, an iSWAP pi/e2. */
struct DeviceModel {
  double e1 = 1.0;
  double e2 = 1.0;
  /** Diagram time quantum; 0.5 pi / max(e1, e2) when unset. */
  std::optional<double> grid_step;

  DeviceModel() = default;
  DeviceModel(double e1_, double e2_, std::optional<double> grid = std::nullopt);

  double grid() const;
  /** "e1=1,e2=2"; either key may be omitted. */
  static DeviceModel parse(const std::string& spec);
};

class UnloweredGate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Physical duration of one gate; H counts as its lowered Rz Rx Rz triple. */
double gate_duration(const Gate& g, const DeviceModel& dev);

struct ScheduleEntry {
  Instruction instruction;
  double start = 0;
  double duration = 0;
  double end() const { return start + duration; }
};

struct Schedule {
  unsigned n_qubits = 0;
  DeviceModel device;
  std::vector<ScheduleEntry> entries;
  /** Completion time of the last entry. */
  double makespan = 0;
  /**
   * The critical path is the dependency chain with the most two-qubit time,
   * ties broken by one-qubit time; these are its two components.
   */
  double makespan_1bit = 0;
  double makespan_2bit = 0;
};

/**
 * Earliest-start schedule keeping per-wire order. Couplings on disjoint
 * pairs run in parallel. Init0 and MeasureZ take no time.
 */
Schedule asap(const Circuit& c, const Topology& topo, const DeviceModel& dev);

/**
 * Interval sweep per wire. Returns a description of the first pair of
 * overlapping entries, or nothing when every wire is used exclusively.
 */
std::optional<std::string> find_overlap(const Schedule& s);

/**
 * One row per qubit on the device grid: 'z' for Rz, 'x' for Rx, '#' for
 * iSWAP, '.' when idle.
 */
std::string render_text(const Schedule& s);

/** {qubits, entries:[{gate, qubits, start, duration}], makespan_1bit, makespan_2bit, makespan}. */
nlohmann::json to_json(const Schedule& s);

}  // namespace xychain
