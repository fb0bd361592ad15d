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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "xychain/fixtures.hpp"
#include "xychain/pipeline.hpp"
#include "xychain/schedule.hpp"
#include "xychain/synthesis.hpp"
#include "xychain/text_format.hpp"
#include "xychain/verify.hpp"

namespace {

using namespace xychain;

enum Exit : int {
  kOk = 0,
  kNotEquivalent = 1,
  kUsage = 2,
  kBreach = 3,
  kFailure = 4,
};

/** An input file could not be read or parsed. */
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kFixturePrefix = "fixture:";

/** Reads a circuit from a path, "-" (stdin) or "fixture:<name>". */
Circuit load_circuit(const std::string& source) {
  if (source.rfind(kFixturePrefix, 0) == 0) {
    const std::string name = source.substr(kFixturePrefix.size());
    try {
      return fixture(name).circuit;
    } catch (const std::out_of_range&) {
      throw InputError("unknown fixture '" + name + "'");
    }
  }
  std::stringstream buf;
  if (source == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) throw InputError("cannot open '" + source + "'");
    buf << in.rdbuf();
  }
  try {
    return parse_circuit(buf.str());
  } catch (const ParseError& e) {
    throw InputError(source + ":" + std::to_string(e.line()) + ":" +
                     std::to_string(e.column()) + ": " + e.detail());
  }
}

Topology topology_for(const std::string& spec, const Circuit& c) {
  if (spec.empty()) return Topology::chain(c.n_qubits());
  try {
    return Topology::parse(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError("bad topology '" + spec + "': " + e.what());
  }
}

std::vector<unsigned> parse_perm(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw InputError("bad permutation entry '" + item + "'");
    }
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

struct CompileArgs {
  std::string input;
  std::string topology;
  std::string output;
  std::string circuit_output;
  bool restore_order = false;
  bool naive = false;
  bool cnot_count = false;
  bool timing = false;
  std::uint64_t seed = 0;
};

int cmd_compile(const CompileArgs& a) {
  Circuit c = load_circuit(a.input);
  Topology topo = topology_for(a.topology, c);
  PipelineOptions opt;
  if (a.naive) opt.mode = PipelineMode::Naive;
  if (a.cnot_count) opt.mode = PipelineMode::CnotCount;
  opt.restore_order = a.restore_order;
  opt.seed = a.seed;
  opt.timing = a.timing;
  PipelineReport rep = run_pipeline(c, topo, opt);
  nlohmann::json j = rep.to_json();
  const std::string text = serialize_circuit(rep.output);
  j["circuit"] = text;
  write_output(a.output, j.dump(2) + "\n");
  if (!a.circuit_output.empty()) write_output(a.circuit_output, text);
  return kOk;
}

int cmd_verify(const std::string& pa, const std::string& pb, const std::string& cls_name,
               const std::string& perm_text, double tolerance) {
  Circuit a = load_circuit(pa);
  Circuit b = load_circuit(pb);
  EquivClass cls;
  try {
    cls = parse_equiv_class(cls_name);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::optional<std::vector<unsigned>> perm;
  if (!perm_text.empty()) perm = parse_perm(perm_text);
  EquivalenceReport r = equivalent(a, b, cls, perm, tolerance);
  nlohmann::json j;
  j["class"] = std::string(equiv_class_name(r.cls));
  j["equivalent"] = r.equivalent;
  j["residual"] = r.residual;
  j["permutation"] = r.permutation ? nlohmann::json(*r.permutation) : nlohmann::json();
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json();
  std::cout << j.dump(2) << "\n";
  return r.equivalent ? kOk : kNotEquivalent;
}

int cmd_cost(const std::string& input) {
  Circuit c = load_circuit(input);
  Census census = gate_census(c);
  unsigned iswaps = 0;
  for (const auto& [t, k] : census) iswaps += iswap_cost(t) * k;
  nlohmann::json j;
  j["qubits"] = c.n_qubits();
  j["census"] = census_json(census);
  j["one_qubit"] = count_one_qubit(c);
  j["two_qubit"] = count_two_qubit(c);
  j["iswap_cost"] = iswaps;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_schedule(const std::string& input, const std::string& topo_spec,
                 const std::string& device, bool as_json) {
  Circuit c = load_circuit(input);
  Topology topo = topology_for(topo_spec, c);
  DeviceModel dev;
  if (!device.empty()) {
    try {
      dev = DeviceModel::parse(device);
    } catch (const std::invalid_argument& e) {
      throw InputError("bad device '" + device + "': " + e.what());
    }
  }
  Schedule s = asap(c, topo, dev);
  if (auto overlap = find_overlap(s)) {
    throw std::logic_error("schedule overlaps: " + *overlap);
  }
  if (as_json) {
    std::cout << to_json(s).dump(2) << "\n";
    return kOk;
  }
  std::cout << render_text(s);
  char line[160];
  std::snprintf(line, sizeof line, "makespan_1bit %.6g pi/e1\nmakespan_2bit %.6g pi/e2\n",
                s.makespan_1bit * dev.e1 / kPi, s.makespan_2bit * dev.e2 / kPi);
  std::cout << line;
  return kOk;
}

int cmd_fixtures(bool list, const std::string& emit) {
  if (!emit.empty()) {
    try {
      std::cout << serialize_circuit(fixture(emit).circuit);
    } catch (const std::out_of_range&) {
      throw InputError("unknown fixture '" + emit + "'");
    }
    return kOk;
  }
  if (!list) throw InputError("fixtures: pass --list or --emit <name>");
  for (const std::string& name : fixture_names()) {
    std::cout << name << "\t" << fixture(name).description << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compile circuits to iSWAP and one-qubit rotations on XY-coupled chains and rings"};
  app.require_subcommand(1);

  CompileArgs ca;
  auto* compile = app.add_subcommand("compile", "Route, lower and simplify a circuit");
  compile->add_option("input", ca.input, "Circuit file, '-' or fixture:<name>")->required();
  compile->add_option("--topology", ca.topology, "chain:N, ring:N or complete:N");
  compile->add_flag("--restore-order", ca.restore_order, "Return qubits to their own wires");
  auto* naive = compile->add_flag("--naive", ca.naive, "Swap each distant pair there and back");
  compile->add_flag("--cnot-count", ca.cnot_count, "Naive routing with SWAPs as three CNOTs")
      ->excludes(naive);
  compile->add_option("--seed", ca.seed, "Seed for every randomized step");
  compile->add_flag("--timing", ca.timing, "Record wall time per pass");
  compile->add_option("-o,--output", ca.output, "Report path (default stdout)");
  compile->add_option("--emit-circuit", ca.circuit_output, "Also write the lowered circuit here");

  std::string va, vb, vclass = "phase+permutation", vperm;
  double vtol = kAccumulatedTolerance;
  auto* verify = app.add_subcommand("verify", "Check two circuits for equivalence");
  verify->add_option("a", va)->required();
  verify->add_option("b", vb)->required();
  verify->add_option("--class", vclass,
                     "exact, phase, phase+permutation, local or measurement");
  verify->add_option("--perm", vperm, "Comma-separated wire map from a to b");
  verify->add_option("--tolerance", vtol);

  std::string cost_in;
  auto* cost = app.add_subcommand("cost", "Gate census and iSWAP cost");
  cost->add_option("input", cost_in)->required();

  std::string s_in, s_topo, s_dev;
  bool s_json = false;
  auto* schedule = app.add_subcommand("schedule", "ASAP schedule of a lowered circuit");
  schedule->add_option("input", s_in)->required();
  schedule->add_option("--topology", s_topo);
  schedule->add_option("--device", s_dev, "e1=<val>,e2=<val>[,grid=<val>]");
  schedule->add_flag("--json", s_json);

  bool f_list = false;
  std::string f_emit;
  auto* fixtures = app.add_subcommand("fixtures", "List or print built-in circuits");
  fixtures->add_flag("--list", f_list);
  fixtures->add_option("--emit", f_emit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*compile) return cmd_compile(ca);
    if (*verify) return cmd_verify(va, vb, vclass, vperm, vtol);
    if (*cost) return cmd_cost(cost_in);
    if (*schedule) return cmd_schedule(s_in, s_topo, s_dev, s_json);
    if (*fixtures) return cmd_fixtures(f_list, f_emit);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MissingPermutation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AncillaMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OracleBreach& e) {
    std::cerr << "oracle breach: " << e.what() << "\n";
    return kBreach;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
