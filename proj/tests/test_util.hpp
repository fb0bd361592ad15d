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

#include <random>

#include "xychain/circuit.hpp"
#include "xychain/linalg.hpp"

namespace xychain::test {

/** Haar-random unitary via QR of a complex Gaussian matrix. */
inline CMatrix random_unitary(unsigned dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix z(dim, dim);
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = 0; j < dim; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR();
  for (unsigned j = 0; j < dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline double uniform_angle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(-2 * kPi, 2 * kPi)(rng);
}

/** Random circuit over Rx, Rz, H and the catalog two-qubit gates. */
inline Circuit random_circuit(unsigned n, unsigned length, std::mt19937_64& rng,
                              bool lowered_only = false) {
  Circuit c(n);
  std::uniform_int_distribution<unsigned> wire(0, n - 1);
  std::uniform_int_distribution<int> kind(0, lowered_only ? 2 : 6);
  for (unsigned i = 0; i < length; ++i) {
    const int k = kind(rng);
    const unsigned a = wire(rng);
    unsigned b = wire(rng);
    while (n > 1 && b == a) b = wire(rng);
    switch (k) {
      case 0: c.add(Gate::rx(uniform_angle(rng)), {a}); break;
      case 1: c.add(Gate::rz(uniform_angle(rng)), {a}); break;
      case 2: if (n > 1) c.add_op(OpType::ISWAP, {a, b}); break;
      case 3: c.add_op(OpType::H, {a}); break;
      case 4: if (n > 1) c.add_op(OpType::CNOT, {a, b}); break;
      case 5: if (n > 1) c.add_op(OpType::SWAP, {a, b}); break;
      default: if (n > 1) c.add_op(OpType::CNS, {a, b}); break;
    }
  }
  return c;
}

inline CMatrix matrix_of(OpType t) { return Gate::fixed(t).unitary().matrix(); }

}  // namespace xychain::test
