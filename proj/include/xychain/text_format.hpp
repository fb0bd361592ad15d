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

#include <stdexcept>
#include <string>

#include "xychain/circuit.hpp"

namespace xychain {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, unsigned line, unsigned column);

  unsigned line() const { return line_; }
  unsigned column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  unsigned line_;
  unsigned column_;
  std::string detail_;
};

/**
 * Parses the line-oriented circuit format:
 *
 *   qubits <n>
 *   ancilla <i> [<i> ...]
 *   rx <q> <theta> | rz <q> <theta> | h <q>
 *   cnot <c> <t> | swap <a> <b> | iswap <a> <b> | cns <c> <t>
 *   sqrtswap <a> <b> | phasediag <a> <b> | toffoli <c1> <c2> <t>
 *   init0 <q> | measz <q>
 *
 * '#' starts a comment. `qubits` must come before any other statement.
 */
Circuit parse_circuit(const std::string& text);

/**
 * Canonical text for a circuit. A non-identity qubit map is carried as a
 * trailing comment only; Generic1Q gates have no text form and throw.
 */
std::string serialize_circuit(const Circuit& c);

}  // namespace xychain
