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

#include "xychain/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xychain {

DeviceModel::DeviceModel(double e1_, double e2_, std::optional<double> grid)
    : e1(e1_), e2(e2_), grid_step(grid) {
  if (!(e1 > 0) || !(e2 > 0)) {
    throw std::invalid_argument("device energies must be positive");
  }
  if (grid_step && !(*grid_step > 0)) {
    throw std::invalid_argument("grid step must be positive");
  }
}

double DeviceModel::grid() const {
  return grid_step ? *grid_step : 0.5 * kPi / std::max(e1, e2);
}

DeviceModel DeviceModel::parse(const std::string& spec) {
  double e1 = 1.0, e2 = 1.0;
  std::optional<double> grid;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("device spec item '" + item + "' lacks '='");
    }
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    char* end = nullptr;
    double x = std::strtod(val.c_str(), &end);
    if (val.empty() || *end != '\0') {
      throw std::invalid_argument("device spec value '" + val + "' is not a number");
    }
    if (key == "e1") e1 = x;
    else if (key == "e2") e2 = x;
    else if (key == "grid") grid = x;
    else throw std::invalid_argument("unknown device spec key '" + key + "'");
  }
  return DeviceModel(e1, e2, grid);
}

double gate_duration(const Gate& g, const DeviceModel& dev) {
  switch (g.type()) {
    case OpType::Rx:
    case OpType::Rz:
      return std::abs(g.angle()) / dev.e1;
    case OpType::H:
      return 1.5 * kPi / dev.e1;
    case OpType::ISWAP:
      return kPi / dev.e2;
    case OpType::Init0:
    case OpType::MeasureZ:
      return 0.0;
    default:
      throw UnloweredGate(
          "no duration for '" + std::string(op_name(g.type())) + "'; lower the circuit first");
  }
}

Schedule asap(const Circuit& c, const Topology& topo, const DeviceModel& dev) {
  if (c.n_qubits() > topo.n()) {
    throw InvalidQubits("circuit has more qubits than the topology has sites");
  }
  if (!is_topology_legal(c, topo)) {
    throw std::invalid_argument("circuit is not legal on " + topo.to_string());
  }
  const unsigned n = c.n_qubits();
  Schedule s;
  s.n_qubits = n;
  s.device = dev;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<double> free_at(n, 0.0);
  std::vector<std::size_t> last(n, kNone);
  // Critical-path bookkeeping: (two-qubit time, one-qubit time) per entry.
  std::vector<std::pair<double, double>> path;
  auto better = [](const std::pair<double, double>& a,
                   const std::pair<double, double>& b) {
    if (std::abs(a.first - b.first) > 1e-12) return a.first > b.first;
    return a.second > b.second + 1e-12;
  };
  std::pair<double, double> best{0.0, 0.0};

  for (const Instruction& instr : c.instructions()) {
    if (instr.gate.type() == OpType::H) {
      throw UnloweredGate("asap: H must be lowered to Rz/Rx first");
    }
    double d = gate_duration(instr.gate, dev);
    double start = 0.0;
    std::pair<double, double> here{0.0, 0.0};
    for (unsigned q : instr.qubits) {
      start = std::max(start, free_at[q]);
      if (last[q] != kNone && better(path[last[q]], here)) here = path[last[q]];
    }
    if (instr.gate.type() == OpType::ISWAP) here.first += d;
    else here.second += d;
    const std::size_t index = s.entries.size();
    s.entries.push_back({instr, start, d});
    path.push_back(here);
    for (unsigned q : instr.qubits) {
      free_at[q] = start + d;
      last[q] = index;
    }
    s.makespan = std::max(s.makespan, start + d);
    if (better(here, best)) best = here;
  }
  s.makespan_2bit = best.first;
  s.makespan_1bit = best.second;
  return s;
}

std::optional<std::string> find_overlap(const Schedule& s) {
  std::vector<std::vector<std::size_t>> per_wire(s.n_qubits);
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    for (unsigned q : s.entries[i].instruction.qubits) {
      if (q >= s.n_qubits) return "entry " + std::to_string(i) + " is outside the register";
      per_wire[q].push_back(i);
    }
  }
  for (unsigned q = 0; q < s.n_qubits; ++q) {
    auto& ids = per_wire[q];
    std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return s.entries[a].start < s.entries[b].start;
    });
    for (std::size_t k = 1; k < ids.size(); ++k) {
      const auto& prev = s.entries[ids[k - 1]];
      const auto& cur = s.entries[ids[k]];
      if (cur.start < prev.end() - 1e-12) {
        return "entries " + std::to_string(ids[k - 1]) + " and " +
               std::to_string(ids[k]) + " overlap on qubit " + std::to_string(q);
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string in_units(double t, double unit) {
  std::ostringstream out;
  out << std::round(t / unit * 1e9) / 1e9;
  return out.str();
}

}  // namespace

std::string render_text(const Schedule& s) {
  const double step = s.device.grid();
  const double pi_e1 = kPi / s.device.e1, pi_e2 = kPi / s.device.e2;
  std::ostringstream out;
  out << "# " << s.n_qubits << " qubits, " << s.entries.size() << " entries, grid "
      << in_units(step, kPi) << " pi\n";
  out << "# makespan_1bit " << in_units(s.makespan_1bit, pi_e1) << " pi/e1, makespan_2bit "
      << in_units(s.makespan_2bit, pi_e2) << " pi/e2, makespan "
      << in_units(s.makespan, kPi) << " pi\n";
  if (s.entries.empty()) return out.str();

  const auto cell = [&](double t) { return t / step; };
  const std::size_t width =
      static_cast<std::size_t>(std::ceil(cell(s.makespan) - 1e-9));
  std::vector<std::string> rows(s.n_qubits, std::string(width, '.'));
  for (const ScheduleEntry& e : s.entries) {
    if (e.duration <= 0) continue;
    char mark = '#';
    if (e.instruction.gate.type() == OpType::Rz) mark = 'z';
    else if (e.instruction.gate.type() == OpType::Rx) mark = 'x';
    auto from = static_cast<std::size_t>(std::floor(cell(e.start) + 1e-9));
    auto to = static_cast<std::size_t>(std::ceil(cell(e.end()) - 1e-9));
    to = std::min(std::max(to, from + 1), width);
    for (unsigned q : e.instruction.qubits) {
      for (std::size_t k = from; k < to; ++k) rows[q][k] = mark;
    }
  }
  const std::size_t label = std::to_string(s.n_qubits - 1).size() + 1;
  std::string ruler(width, ' ');
  for (std::size_t k = 0; k < width; k += 10) ruler[k] = '|';
  out << std::string(label + 1, ' ') << ruler << "\n";
  for (unsigned q = 0; q < s.n_qubits; ++q) {
    std::string name = "q" + std::to_string(q);
    out << name << std::string(label + 1 - name.size(), ' ') << rows[q] << "\n";
  }
  return out.str();
}

nlohmann::json to_json(const Schedule& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const ScheduleEntry& e : s.entries) {
    nlohmann::json item;
    item["gate"] = std::string(op_name(e.instruction.gate.type()));
    if (is_rotation(e.instruction.gate.type())) item["angle"] = e.instruction.gate.angle();
    item["qubits"] = e.instruction.qubits;
    item["start"] = e.start;
    item["duration"] = e.duration;
    entries.push_back(std::move(item));
  }
  nlohmann::json j;
  j["qubits"] = s.n_qubits;
  j["device"] = {{"e1", s.device.e1}, {"e2", s.device.e2}, {"grid", s.device.grid()}};
  j["entries"] = std::move(entries);
  j["makespan_1bit"] = s.makespan_1bit;
  j["makespan_2bit"] = s.makespan_2bit;
  j["makespan"] = s.makespan;
  return j;
}

}  // namespace xychain
