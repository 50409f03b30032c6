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
#include <string>
#include <utility>
#include <vector>

#include "qenc/bits.hpp"
#include "qenc/classical/towp.hpp"
#include "qenc/errors.hpp"
#include "qenc/random.hpp"

namespace qenc {

/// b(f^{t-1}(d)) b(f^{t-2}(d)) … b(d): bit j (1-indexed) is b(f^{t-j}(d)).
inline BitString prg_iterated(const RsaIndex& i, std::uint64_t seed, std::size_t t) {
  if (t == 0) throw DomainError("PRG output length must be positive");
  if (!ToyRsaFamily::in_domain(i, seed)) throw DomainError("PRG seed is not in the domain");
  BitString out(t);
  std::uint64_t x = seed;
  for (std::size_t k = 0; k < t; ++k) {
    out.set(t - 1 - k, ToyRsaFamily::hardcore(i, x));
    if (k + 1 < t) x = ToyRsaFamily::evaluate(i, x);
  }
  return out;
}

/// Deterministic expansion of seed_len bits to out_len bits.
struct PrgSpec {
  std::size_t seed_len = 0;
  std::size_t out_len = 0;
  std::function<BitString(const BitString&)> expand;

  BitString operator()(const BitString& seed) const {
    if (seed.size() != seed_len) {
      throw DimensionMismatch("PRG seed must have " + std::to_string(seed_len) + " bits");
    }
    BitString out = expand(seed);
    if (out.size() != out_len) throw Error("PRG produced the wrong output length");
    return out;
  }
};

/// Largest seed length supported by make_doubling_prg.
inline constexpr std::size_t kMaxDoublingSeed = 12;

/// Modulus size behind make_doubling_prg.
inline constexpr int kDoublingModulusBits = 16;

/// Length-doubling PRG on seed_len-bit strings built from prg_iterated. The
/// seed s is mapped injectively into D_i as the element of rank
/// s·⌊|D_i| / 2^seed_len⌋, then iterated 2·seed_len times. Public parameters
/// (the index i) are drawn from `params`.
inline PrgSpec make_doubling_prg(std::size_t seed_len, RandomSource& params) {
  if (seed_len == 0 || seed_len > kMaxDoublingSeed) {
    throw DomainError("seed length must be between 1 and 12");
  }
  const ToyRsaFamily family(kDoublingModulusBits);
  const RsaIndex index = family.generate(params).index;
  const std::size_t out_len = 2 * seed_len;
  return PrgSpec{seed_len, out_len, [index, seed_len, out_len](const BitString& seed) {
                   const auto& dom = ToyRsaFamily::domain(index);
                   const std::size_t step = dom.size() >> seed_len;
                   return prg_iterated(index, dom[seed.to_uint() * step], out_len);
                 }};
}

/// Public parameters used by the library's GGM instances.
inline constexpr std::uint64_t kGgmParamSeed = 0x51A7E5EEDULL;

inline PrgSpec default_doubling_prg(std::size_t seed_len) {
  CounterRng params = CounterRng(kGgmParamSeed).split(seed_len);
  return make_doubling_prg(seed_len, params);
}

/// Constant-zero generator; insecure by construction.
inline PrgSpec constant_prg(std::size_t seed_len, std::size_t out_len) {
  return PrgSpec{seed_len, out_len, [out_len](const BitString&) { return BitString(out_len); }};
}

}  // namespace qenc
