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

#include <cstdint>
#include <span>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"

namespace qenc {

/// Source of every random choice made by schemes, roles and games.
///
/// Two implementations exist: CounterRng for sampling, and the replaying
/// source inside the exact enumerator (see estimate.hpp), which turns each
/// draw into a branch point. Code that only draws through this interface can
/// therefore be run in either mode without change.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  /// Uniform integer in [0, bound). bound must be at least 1.
  virtual std::uint64_t below(std::uint64_t bound) = 0;

  /// Index i drawn with probability weights[i]. Weights are non-negative and
  /// sum to one up to rounding.
  virtual std::size_t weighted(std::span<const double> weights) = 0;

  int bit() { return static_cast<int>(below(2)); }

  BitString bits(std::size_t length) {
    BitString out(length);
    for (std::size_t i = 0; i < length; ++i) out.set(i, bit());
    return out;
  }
};

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based generator: output k is mix64(key + k * golden), the
/// SplitMix64 sequence keyed by a 64-bit value. Streams derived with split()
/// are independent of the parent's position, so trial i of an experiment can
/// be reproduced without replaying trials 0..i-1.
///
/// Integer and real conversions avoid <random> distributions, whose output is
/// implementation-defined, so results are identical on every platform.
class CounterRng final : public RandomSource {
 public:
  explicit CounterRng(std::uint64_t seed)
      : key_(detail::mix64(seed ^ 0x6A09E667F3BCC909ULL)) {}

  /// Child stream labelled by `stream`.
  CounterRng split(std::uint64_t stream) const {
    return CounterRng(Key{detail::mix64(key_ ^ detail::mix64(stream + detail::kGolden))});
  }

  std::uint64_t next() {
    ++counter_;
    return detail::mix64(key_ + counter_ * detail::kGolden);
  }

  /// Uniform double in [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::uint64_t below(std::uint64_t bound) override {
    if (bound == 0) throw Error("below() needs a positive bound");
    // Rejection on the low residue class keeps the result exactly uniform.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  std::size_t weighted(std::span<const double> weights) override {
    if (weights.empty()) throw Error("weighted() needs at least one weight");
    const double u = uniform();
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      acc += weights[i];
      last_positive = i;
      if (u < acc) return i;
    }
    return last_positive;
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  struct Key {
    std::uint64_t value;
  };
  explicit CounterRng(Key k) : key_(k.value) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qenc
