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
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "qenc/bits.hpp"
#include "qenc/classical/prg.hpp"
#include "qenc/errors.hpp"
#include "qenc/estimate.hpp"
#include "qenc/random.hpp"

namespace qenc {

/// Keyed function {0,1}^key_len × {0,1}^in_len → {0,1}^out_len.
struct PrfSpec {
  std::size_t key_len = 0;
  std::size_t in_len = 0;
  std::size_t out_len = 0;
  std::function<BitString(const BitString& key, const BitString& input)> evaluate;

  BitString operator()(const BitString& key, const BitString& input) const {
    if (key.size() != key_len) throw DimensionMismatch("PRF key has the wrong length");
    if (input.size() != in_len) throw DimensionMismatch("PRF input has the wrong length");
    return evaluate(key, input);
  }
};

/// GGM tree walk: state ← key, then for each input bit keep the left (0) or
/// right (1) half of expand(state). The final state is truncated to out_len
/// if shorter, or extended by one more expansion if longer (up to twice the
/// seed length).
inline BitString ggm_prf(const PrgSpec& prg, const BitString& key, const BitString& input,
                         std::size_t out_len) {
  if (prg.out_len != 2 * prg.seed_len) throw DomainError("GGM needs a length-doubling PRG");
  if (key.size() != prg.seed_len) throw DimensionMismatch("GGM key must match the PRG seed length");
  if (out_len == 0 || out_len > 2 * prg.seed_len) {
    throw DomainError("GGM output length must be between 1 and twice the key length");
  }
  const std::size_t n = prg.seed_len;
  BitString state = key;
  for (std::size_t j = 0; j < input.size(); ++j) state = prg(state).slice(input[j] ? n : 0, n);
  if (out_len <= n) return state.slice(0, out_len);
  return prg(state).slice(0, out_len);
}

inline PrfSpec make_ggm_prf(PrgSpec prg, std::size_t in_len, std::size_t out_len) {
  const std::size_t key_len = prg.seed_len;
  if (out_len == 0 || out_len > 2 * key_len) {
    throw DomainError("GGM output length must be between 1 and twice the key length");
  }
  return PrfSpec{key_len, in_len, out_len,
                 [prg = std::move(prg), out_len](const BitString& k, const BitString& x) {
                   return ggm_prf(prg, k, x, out_len);
                 }};
}

/// Constant-zero function; insecure by construction.
inline PrfSpec constant_prf(std::size_t key_len, std::size_t in_len, std::size_t out_len) {
  return PrfSpec{key_len, in_len, out_len,
                 [out_len](const BitString&, const BitString&) { return BitString(out_len); }};
}

/// Lazily sampled uniform function. Fresh inputs draw their output from the
/// source handed over at construction; repeated inputs reuse it.
///
/// The oracle keeps a reference to `rng`, which must outlive it.
class RandomFunctionOracle {
 public:
  RandomFunctionOracle(std::size_t in_len, std::size_t out_len, RandomSource& rng)
      : in_len_(in_len), out_len_(out_len), rng_(&rng) {}

  BitString operator()(const BitString& x) {
    if (x.size() != in_len_) throw DimensionMismatch("oracle input has the wrong length");
    auto it = memo_.find(x);
    if (it == memo_.end()) it = memo_.emplace(x, rng_->bits(out_len_)).first;
    return it->second;
  }

  std::size_t in_len() const { return in_len_; }
  std::size_t out_len() const { return out_len_; }
  std::size_t queried() const { return memo_.size(); }

 private:
  std::size_t in_len_;
  std::size_t out_len_;
  RandomSource* rng_;
  std::map<BitString, BitString> memo_;
};

/// Oracle access handed to a PRF distinguisher.
using FunctionOracle = std::function<BitString(const BitString&)>;

/// Outputs a bit after querying its oracle.
using PrfDistinguisher = std::function<int(const FunctionOracle&, RandomSource&)>;

/// Outputs a bit for a candidate string y.
using PrgDistinguisher = std::function<int(const BitString&, RandomSource&)>;

/// |Pr[D^{f_k} = 1] − Pr[D^g = 1]| for a uniform key k and a uniform function g.
inline AdvantageEstimate prf_distinguisher_advantage(const PrfDistinguisher& d, const PrfSpec& prf,
                                                     const EstimateConfig& config) {
  const auto real = [&](RandomSource& coins) {
    const BitString key = coins.bits(prf.key_len);
    const FunctionOracle oracle = [&](const BitString& x) { return prf(key, x); };
    return d(oracle, coins) == 1;
  };
  const auto ideal = [&](RandomSource& coins) {
    auto g = std::make_shared<RandomFunctionOracle>(prf.in_len, prf.out_len, coins);
    const FunctionOracle oracle = [g](const BitString& x) { return (*g)(x); };
    return d(oracle, coins) == 1;
  };
  return estimate(config, real, ideal);
}

/// |Pr[D(G(s)) = 1] − Pr[D(y) = 1]| for uniform s and y.
inline AdvantageEstimate prg_distinguisher_advantage(const PrgDistinguisher& d, const PrgSpec& prg,
                                                     const EstimateConfig& config) {
  const auto real = [&](RandomSource& coins) {
    const BitString y = prg(coins.bits(prg.seed_len));
    return d(y, coins) == 1;
  };
  const auto ideal = [&](RandomSource& coins) { return d(coins.bits(prg.out_len), coins) == 1; };
  return estimate(config, real, ideal);
}

}  // namespace qenc
