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

#include "xychain/circuit.hpp"

namespace xychain {

struct Fixture {
  std::string name;
  std::string description;
  Circuit circuit;
  /** Expected unitary of the circuit's coherent core, up to phase. */
  std::optional<Unitary> reference;
  /**
   * Where each input wire ends up (logical -> physical). The circuit then
   * implements P_perm * reference.
   */
  std::optional<std::vector<unsigned>> permutation;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& fixture_names();

/**
 * Builds a named fixture and checks it against its reference; a failing
 * check throws FixtureError, an unknown name std::out_of_range.
 */
Fixture fixture(const std::string& name);

/** dist_phase(P_perm * reference, U(circuit)); 0 when there is no reference. */
double fixture_residual(const Fixture& f);

}  // namespace xychain
