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

#include <string>
#include <string_view>

#include "xychain/linalg.hpp"

namespace xychain {

enum class OpType {
  Rx,
  Rz,
  H,
  Generic1Q,
  CNOT,
  SWAP,
  ISWAP,
  SqrtSWAP,
  PhaseDiag,
  CNS,
  Toffoli,
  Init0,
  MeasureZ,
};

inline constexpr OpType kAllOpTypes[] = {
    OpType::Rx,    OpType::Rz,        OpType::H,         OpType::Generic1Q,
    OpType::CNOT,  OpType::SWAP,      OpType::ISWAP,     OpType::SqrtSWAP,
    OpType::PhaseDiag, OpType::CNS,   OpType::Toffoli,   OpType::Init0,
    OpType::MeasureZ};

/** Lower-case mnemonic, as used by the text format ("cnot", "measz", ...). */
std::string_view op_name(OpType type);

unsigned op_arity(OpType type);
bool is_rotation(OpType type);
bool is_unitary_op(OpType type);
bool is_two_qubit(OpType type);

/** Reduces an angle into (-2pi, 2pi]; rotations are 4pi-periodic. */
double normalize_angle(double theta);

/** Reduces an angle into (-pi, pi]. */
double canonical_angle(double theta);

class Gate {
 public:
  static Gate rx(double theta);
  static Gate rz(double theta);
  static Gate rotation(OpType axis, double theta);
  static Gate generic1q(const CMatrix& u, std::string name);
  /** Any parameter-free kind. */
  static Gate fixed(OpType type);

  OpType type() const { return type_; }
  /** Rotation angle, normalized to (-2pi, 2pi]; 0 for other kinds. */
  double angle() const { return angle_; }
  const std::string& name() const { return name_; }
  unsigned arity() const { return op_arity(type_); }

  /** The gate's matrix; throws for Init0/MeasureZ. */
  Unitary unitary() const;

  /** Structural equality (angles compared exactly). */
  bool operator==(const Gate& other) const;

 private:
  Gate(OpType type, double angle) : type_(type), angle_(angle) {}

  OpType type_;
  double angle_ = 0.0;
  CMatrix generic_;
  std::string name_;
};

Unitary unitary_of(const Gate& g);

CMatrix rx_matrix(double theta);
CMatrix rz_matrix(double theta);

const CMatrix& pauli_x();
const CMatrix& pauli_y();
const CMatrix& pauli_z();

enum class HamiltonianKind { ZZ, JJ, XY };

struct Hamiltonian {
  HamiltonianKind kind;
  double energy;

  /** -E/4 times ZZ, XX+YY+ZZ or XX+YY. */
  CMatrix matrix() const;
};

Unitary evolve(const Hamiltonian& h, double t);

struct LocalInvariants {
  Complex g1;
  double g2;
};

/** Makhlin invariants of a two-qubit gate, computed in the magic basis. */
LocalInvariants local_invariants(const Unitary& u);

bool locally_equivalent(
    const Unitary& u, const Unitary& v, double tolerance = 1e-8);

}  // namespace xychain
