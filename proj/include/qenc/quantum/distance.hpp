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
#include <functional>
#include <string>
#include <utility>

#include "qenc/errors.hpp"
#include "qenc/estimate.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/random.hpp"

namespace qenc {

/// ½‖a − b‖₁. Layout names are ignored; only dimensions must agree.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("trace distance of states of different size");
  const Matrix diff = a.matrix() - b.matrix();
  const Matrix herm = (diff + diff.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

/// A map acting on register `target` of a larger state, identity elsewhere.
using Channel = std::function<DensityMatrix(const DensityMatrix&, const std::string& target)>;

/// A channel that draws randomness, e.g. an encryption with fresh coins.
using RandomizedChannel =
    std::function<DensityMatrix(const DensityMatrix&, const std::string& target, RandomSource&)>;

inline Channel identity_channel() {
  return [](const DensityMatrix& s, const std::string&) { return s; };
}

/// Averages a randomized channel over all of its coin outcomes exactly.
inline Channel exact_average(RandomizedChannel channel,
                             std::size_t cap = std::size_t{1} << 20) {
  return [channel = std::move(channel), cap](const DensityMatrix& state,
                                             const std::string& target) {
    Matrix acc = Matrix::Zero(static_cast<Eigen::Index>(state.dim()),
                              static_cast<Eigen::Index>(state.dim()));
    Layout layout;
    enumerate_branches(
        [&](RandomSource& coins) { return channel(state, target, coins); },
        [&](double w, DensityMatrix out) {
          acc += w * out.matrix();
          layout = out.layout();
        },
        cap);
    return DensityMatrix::unchecked(std::move(acc), std::move(layout));
  };
}

/// |Φ⁺⟩⟨Φ⁺| over registers R and A of `qubits` qubits each.
inline DensityMatrix max_entangled(int qubits, const std::string& ref = "R",
                                   const std::string& sys = "A") {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << qubits);
  Vector ket = Vector::Zero(d * d);
  for (Eigen::Index k = 0; k < d; ++k) ket(k * d + k) = 1.0 / std::sqrt(static_cast<double>(d));
  return DensityMatrix::pure(ket, Layout{{ref, qubits}, {sys, qubits}});
}

/// Trace distance between the Choi states of two channels on `qubits` qubits.
/// Zero exactly when the channels agree.
inline double channel_choi_distance(const Channel& channel, const Channel& reference,
                                    int qubits) {
  const auto phi = max_entangled(qubits);
  const auto a = channel(phi, "A");
  const auto b = reference(phi, "A");
  if (a.dim() != phi.dim() || b.dim() != phi.dim()) {
    throw DimensionMismatch("channel changed the dimension of its input");
  }
  return trace_distance(a, b);
}

}  // namespace qenc
