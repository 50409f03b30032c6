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

// Shared fixtures for the test executables.

#pragma once

#include <cmath>
#include <string>

#include "qenc/quantum/density_matrix.hpp"
#include "qenc/quantum/states.hpp"
#include "qenc/random.hpp"

namespace qenc::testing {

using qenc::random_state;

inline DensityMatrix random_pure(int qubits, CounterRng& rng, const std::string& name = "A") {
  return random_state(qubits, rng, name, 1);
}

inline DensityMatrix plus_state(const std::string& name = "A") {
  Vector ket(2);
  ket << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(ket, Layout{{name, 1}});
}

inline DensityMatrix minus_state(const std::string& name = "A") {
  Vector ket(2);
  ket << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(ket, Layout{{name, 1}});
}

// (|00⟩ + |11⟩)/√2 over registers a and b.
inline DensityMatrix bell_state(const std::string& a = "A", const std::string& b = "B") {
  Vector ket = Vector::Zero(4);
  ket(0) = ket(3) = 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(ket, Layout{{a, 1}, {b, 1}});
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qenc::testing
