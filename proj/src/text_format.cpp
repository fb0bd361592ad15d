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

#include "xychain/text_format.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <vector>

namespace xychain {

ParseError::ParseError(const std::string& message, unsigned line, unsigned column)
    : std::runtime_error(
          "line " + std::to_string(line) + ", column " + std::to_string(column) +
          ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

struct Token {
  std::string text;
  unsigned column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char ch = line[i];
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), static_cast<unsigned>(start + 1)});
  }
  return out;
}

std::optional<OpType> lookup_gate(const std::string& word) {
  for (OpType t : kAllOpTypes) {
    if (t == OpType::Generic1Q) continue;
    if (op_name(t) == word) return t;
  }
  return std::nullopt;
}

unsigned parse_index(const Token& tok, unsigned line) {
  const std::string& s = tok.text;
  if (s.empty() || s.size() > 6 ||
      s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected a non-negative integer, got '" + s + "'", line,
                     tok.column);
  }
  return static_cast<unsigned>(std::stoul(s));
}

double parse_angle(const Token& tok, unsigned line) {
  const char* begin = tok.text.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw ParseError("expected an angle in radians, got '" + tok.text + "'",
                     line, tok.column);
  }
  return v;
}

std::string format_angle(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  unsigned lineno = 0;
  std::optional<Circuit> circuit;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    const Token& head = toks[0];
    if (head.text == "qubits") {
      if (circuit) throw ParseError("duplicate 'qubits' statement", lineno, head.column);
      if (toks.size() != 2) {
        throw ParseError("'qubits' takes exactly one count", lineno, head.column);
      }
      unsigned n = parse_index(toks[1], lineno);
      if (n == 0) throw ParseError("qubit count must be positive", lineno, toks[1].column);
      circuit.emplace(n);
      continue;
    }
    if (!circuit) {
      throw ParseError("'qubits' must precede other statements", lineno, head.column);
    }
    if (head.text == "ancilla") {
      if (toks.size() < 2) {
        throw ParseError("'ancilla' needs at least one index", lineno, head.column);
      }
      for (std::size_t i = 1; i < toks.size(); ++i) {
        unsigned q = parse_index(toks[i], lineno);
        if (q >= circuit->n_qubits()) {
          throw ParseError("ancilla index out of range", lineno, toks[i].column);
        }
        circuit->add_ancilla(q);
      }
      continue;
    }
    std::optional<OpType> type = lookup_gate(head.text);
    if (!type) throw ParseError("unknown gate '" + head.text + "'", lineno, head.column);
    unsigned arity = op_arity(*type);
    std::size_t expected = 1 + arity + (is_rotation(*type) ? 1 : 0);
    if (toks.size() != expected) {
      unsigned col = toks.size() > expected ? toks[expected].column : head.column;
      throw ParseError(
          "'" + head.text + "' expects " + std::to_string(expected - 1) +
              " operand(s), got " + std::to_string(toks.size() - 1),
          lineno, col);
    }
    std::vector<unsigned> qubits;
    for (unsigned i = 0; i < arity; ++i) {
      unsigned q = parse_index(toks[1 + i], lineno);
      if (q >= circuit->n_qubits()) {
        throw ParseError("qubit index " + std::to_string(q) + " out of range",
                         lineno, toks[1 + i].column);
      }
      for (unsigned prev : qubits) {
        if (prev == q) throw ParseError("repeated qubit index", lineno, toks[1 + i].column);
      }
      qubits.push_back(q);
    }
    Gate g = is_rotation(*type)
                 ? Gate::rotation(*type, parse_angle(toks[1 + arity], lineno))
                 : Gate::fixed(*type);
    if (!is_unitary_op(*type) && !circuit->ancillas().count(qubits[0])) {
      throw ParseError(
          std::string(op_name(*type)) + " on qubit " + std::to_string(qubits[0]) +
              " which is not declared as an ancilla",
          lineno, toks[1].column);
    }
    circuit->add(g, std::move(qubits));
  }
  if (!circuit) throw ParseError("missing 'qubits' statement", lineno + 1, 1);
  return *circuit;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n_qubits() << "\n";
  if (!c.ancillas().empty()) {
    out << "ancilla";
    for (unsigned q : c.ancillas()) out << " " << q;
    out << "\n";
  }
  for (const Instruction& instr : c.instructions()) {
    OpType t = instr.gate.type();
    if (t == OpType::Generic1Q) {
      throw std::invalid_argument(
          "Generic1Q gate '" + instr.gate.name() + "' has no text form");
    }
    out << op_name(t);
    for (unsigned q : instr.qubits) out << " " << q;
    if (is_rotation(t)) out << " " << format_angle(instr.gate.angle());
    out << "\n";
  }
  if (c.qubit_map() != identity_permutation(c.n_qubits())) {
    out << "# qubit_map";
    for (unsigned p : c.qubit_map()) out << " " << p;
    out << "\n";
  }
  return out.str();
}

}  // namespace xychain
