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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/random.hpp"

namespace qenc {

/// Outcomes with probability at or below this are dropped from distributions.
inline constexpr double kNegligibleProbability = 1e-14;

/// Probability of every outcome of a full-register measurement, indexed by
/// outcome value (0 … 2^q − 1). Entries may be tiny negatives from rounding;
/// they are clamped to zero.
inline std::vector<double> outcome_probabilities(const DensityMatrix& state,
                                                 const std::string& target) {
  const auto shifts = detail::register_shifts(state, target);
  std::vector<double> probs(std::size_t{1} << shifts.size(), 0.0);
  const Matrix& m = state.matrix();
  for (std::size_t i = 0; i < state.dim(); ++i) {
    probs[detail::gather(i, shifts)] += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  }
  for (auto& p : probs) p = std::max(p, 0.0);
  return probs;
}

/// Outcome → probability for a computational-basis measurement of `target`.
inline std::map<BitString, double> measurement_distribution(const DensityMatrix& state,
                                                            const std::string& target) {
  const auto probs = outcome_probabilities(state, target);
  const auto width = static_cast<std::size_t>(state.reg(target).qubits);
  std::map<BitString, double> out;
  for (std::size_t v = 0; v < probs.size(); ++v) {
    if (probs[v] > kNegligibleProbability) out.emplace(BitString::from_uint(v, width), probs[v]);
  }
  return out;
}

/// Projects `target` onto |outcome⟩ and renormalizes. Returns the probability
/// of the outcome together with the post-measurement state.
inline std::pair<double, DensityMatrix> project(const DensityMatrix& state,
                                                const std::string& target,
                                                const BitString& outcome) {
  const auto shifts = detail::register_shifts(state, target);
  if (outcome.size() != shifts.size()) {
    throw DimensionMismatch("outcome width does not match register '" + target + "'");
  }
  const std::size_t value = static_cast<std::size_t>(outcome.to_uint());
  const Matrix& m = state.matrix();
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  double p = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (detail::gather(i, shifts) != value) continue;
    p += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
    for (std::size_t j = 0; j < state.dim(); ++j) {
      if (detail::gather(j, shifts) != value) continue;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  if (p <= kNegligibleProbability) {
    throw InvalidState("cannot renormalize a probability-zero measurement outcome");
  }
  out /= p;
  return {p, DensityMatrix::unchecked(std::move(out), state.layout())};
}

struct Measurement {
  BitString outcome;
  DensityMatrix post_state;
};

/// Measures `target` in the computational basis, drawing the outcome from
/// `rng`. The measured register stays in the post-measurement state.
inline Measurement measure_computational(const DensityMatrix& state, const std::string& target,
                                         RandomSource& rng) {
  const auto probs = outcome_probabilities(state, target);
  const auto width = static_cast<std::size_t>(state.reg(target).qubits);
  std::vector<double> weights = probs;
  for (auto& w : weights) {
    if (w <= kNegligibleProbability) w = 0.0;
  }
  const std::size_t v = rng.weighted(weights);
  BitString outcome = BitString::from_uint(v, width);
  auto projected = project(state, target, outcome);
  return Measurement{std::move(outcome), std::move(projected.second)};
}

/// Measures `target` and discards it. Returns the outcome and the
/// conditional state of the remaining registers.
inline Measurement measure_and_discard(const DensityMatrix& state, const std::string& target,
                                       RandomSource& rng) {
  if (state.layout().size() == 1) throw InvalidState("cannot discard the only register");
  auto m = measure_computational(state, target, rng);
  return Measurement{std::move(m.outcome), partial_trace(m.post_state, target)};
}

}  // namespace qenc
