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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qenc/errors.hpp"
#include "qenc/random.hpp"

namespace qenc {

enum class Mode { exact, sample };

inline std::string to_string(Mode m) { return m == Mode::exact ? "exact" : "sample"; }

struct EstimateConfig {
  Mode mode = Mode::sample;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  /// Maximum number of leaves explored in exact mode.
  std::size_t branch_cap = std::size_t{1} << 20;
};

struct ProbabilityEstimate {
  double p = 0.0;
  double ci_halfwidth = 0.0;
  /// Trials in sampling mode, leaves in exact mode.
  std::size_t trials = 0;
  bool exact = false;
};

struct AdvantageEstimate {
  double p_real = 0.0;
  double p_ideal = 0.0;
  double advantage = 0.0;
  /// Sum of the two arms' half-widths; zero when exact.
  double ci_halfwidth = 0.0;
  std::size_t trials = 0;
  bool exact = false;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

namespace detail {

struct Choice {
  std::uint64_t index = 0;
  std::uint64_t arity = 0;
  std::vector<double> weights;  // empty for uniform draws

  double probability() const {
    return weights.empty() ? 1.0 / static_cast<double>(arity) : weights[index];
  }

  bool advance() {
    for (std::uint64_t next = index + 1; next < arity; ++next) {
      if (weights.empty() || weights[next] > 0.0) {
        index = next;
        return true;
      }
    }
    return false;
  }
};

class ReplaySource final : public RandomSource {
 public:
  ReplaySource(std::vector<Choice>& path, std::size_t arity_cap)
      : path_(path), arity_cap_(arity_cap) {}

  std::uint64_t below(std::uint64_t bound) override {
    if (bound == 0) throw Error("below() needs a positive bound");
    if (depth_ < path_.size()) {
      const Choice& c = path_[depth_++];
      if (c.arity != bound || !c.weights.empty()) {
        throw NondeterministicRole("replayed branch drew a different distribution");
      }
      return c.index;
    }
    if (bound > arity_cap_) {
      throw EnumerationCapExceeded("a single draw over " + std::to_string(bound) +
                                   " values exceeds the enumeration cap");
    }
    path_.push_back(Choice{0, bound, {}});
    ++depth_;
    return 0;
  }

  std::size_t weighted(std::span<const double> weights) override {
    if (depth_ < path_.size()) {
      const Choice& c = path_[depth_++];
      if (c.arity != weights.size() || c.weights.empty()) {
        throw NondeterministicRole("replayed branch drew a different distribution");
      }
      return static_cast<std::size_t>(c.index);
    }
    Choice c{0, weights.size(), std::vector<double>(weights.begin(), weights.end())};
    while (c.index < c.arity && c.weights[c.index] <= 0.0) ++c.index;
    if (c.index == c.arity) throw Error("weighted() called with no positive weight");
    path_.push_back(std::move(c));
    ++depth_;
    return static_cast<std::size_t>(path_.back().index);
  }

  std::size_t depth() const { return depth_; }

 private:
  std::vector<Choice>& path_;
  std::size_t arity_cap_;
  std::size_t depth_ = 0;
};

}  // namespace detail

/// Runs `run` once for every branch of its random choices, depth first, and
/// hands each result to `visit` together with the branch probability.
/// Returns the number of leaves. `run` must be a deterministic function of
/// the draws it makes; replaying a prefix that leads elsewhere is an error.
template <class Run, class Visit>
std::size_t enumerate_branches(Run&& run, Visit&& visit, std::size_t cap) {
  std::vector<detail::Choice> path;
  std::size_t leaves = 0;
  for (;;) {
    detail::ReplaySource source(path, cap);
    auto result = run(static_cast<RandomSource&>(source));
    if (source.depth() != path.size()) {
      throw NondeterministicRole("branch consumed fewer draws on replay");
    }
    if (++leaves > cap) {
      throw EnumerationCapExceeded("exact enumeration exceeded " + std::to_string(cap) +
                                   " branches");
    }
    double weight = 1.0;
    for (const auto& c : path) weight *= c.probability();
    visit(weight, std::move(result));

    while (!path.empty() && !path.back().advance()) path.pop_back();
    if (path.empty()) break;
  }
  return leaves;
}

/// Exact probability that `experiment` returns true.
inline ProbabilityEstimate exact_probability(const std::function<bool(RandomSource&)>& experiment,
                                             std::size_t cap) {
  CompensatedSum total;
  const std::size_t leaves = enumerate_branches(
      experiment, [&](double w, bool hit) { if (hit) total.add(w); }, cap);
  return ProbabilityEstimate{std::clamp(total.value(), 0.0, 1.0), 0.0, leaves, true};
}

/// Half-width of the 95% Wilson score interval, measured from the observed
/// frequency to the farther interval end.
inline double wilson_halfwidth(std::size_t successes, std::size_t trials) {
  if (trials == 0) return 1.0;
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double center = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double spread = z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return std::max(std::abs(center - spread - p), std::abs(center + spread - p));
}

/// Monte-Carlo frequency of `experiment` over config.trials independent
/// trials. Trial i draws from CounterRng(seed).split(stream).split(i).
inline ProbabilityEstimate sampled_probability(const std::function<bool(RandomSource&)>& experiment,
                                               const EstimateConfig& config,
                                               std::uint64_t stream) {
  if (config.trials == 0) throw Error("sampling needs at least one trial");
  const CounterRng base = CounterRng(config.seed).split(stream);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < config.trials; ++i) {
    CounterRng trial = base.split(i);
    if (experiment(trial)) ++hits;
  }
  return ProbabilityEstimate{static_cast<double>(hits) / static_cast<double>(config.trials),
                             wilson_halfwidth(hits, config.trials), config.trials, false};
}

inline ProbabilityEstimate estimate_probability(
    const EstimateConfig& config, const std::function<bool(RandomSource&)>& experiment,
    std::uint64_t stream = 0) {
  return config.mode == Mode::exact ? exact_probability(experiment, config.branch_cap)
                                    : sampled_probability(experiment, config, stream);
}

/// Estimates both arms of a real-versus-ideal experiment.
inline AdvantageEstimate estimate(const EstimateConfig& config,
                                  const std::function<bool(RandomSource&)>& real,
                                  const std::function<bool(RandomSource&)>& ideal) {
  const auto r = estimate_probability(config, real, 0);
  const auto i = estimate_probability(config, ideal, 1);
  AdvantageEstimate out;
  out.p_real = r.p;
  out.p_ideal = i.p;
  out.advantage = std::abs(r.p - i.p);
  out.ci_halfwidth = r.ci_halfwidth + i.ci_halfwidth;
  out.trials = config.mode == Mode::exact ? r.trials + i.trials : config.trials;
  out.exact = config.mode == Mode::exact;
  return out;
}

}  // namespace qenc
