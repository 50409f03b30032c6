// Copyright 2026 The qenc Authors
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

#include <cmath>
#include <cstddef>
#include <string>

#include "qenc/quantum/density_matrix.hpp"
#include "qenc/random.hpp"

namespace qenc {

/// Random mixed state G G† / tr(G G†) for a d×rank matrix G with entries
/// uniform in the unit square around 0. rank = 0 means full rank.
inline DensityMatrix random_state(int qubits, CounterRng& rng, const std::string& name = "A",
                                  int rank = 0) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << qubits);
  const Eigen::Index k = rank > 0 ? rank : d;
  Matrix g(d, k);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(rho, Layout{{name, qubits}});
}

/// |+⟩^⊗q on one register.
inline DensityMatrix plus_state(int qubits, const std::string& name = "A") {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << qubits);
  return DensityMatrix::pure(Vector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d))),
                             Layout{{name, qubits}});
}

/// (|0…0⟩ + |1…1⟩)/√2 on one register.
inline DensityMatrix ghz_state(int qubits, const std::string& name = "A") {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << qubits);
  Vector ket = Vector::Zero(d);
  ket(0) = ket(d - 1) = 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(ket, Layout{{name, qubits}});
}

}  // namespace qenc
