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

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"
#include "qenc/random.hpp"

namespace qenc {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Inverse of a modulo m; a and m must be coprime.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("value has no modular inverse");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

inline int bit_length(std::uint64_t v) {
  int n = 0;
  while (v != 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// Safe primes p = 2p' + 1 below 2^16.
inline const std::vector<std::uint64_t>& safe_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 5; p < (1U << 16); p += 2) {
      if (is_prime(p) && is_prime((p - 1) / 2)) out.push_back(p);
    }
    return out;
  }();
  return primes;
}

}  // namespace detail

/// Public index i = (N, e, mask) of the toy RSA family. The mask drives the
/// inner-product hard-core bit.
struct RsaIndex {
  int modulus_bits = 0;
  std::uint64_t modulus = 0;
  std::uint64_t exponent = 0;
  std::uint64_t mask = 0;

  /// N ‖ e ‖ mask, each modulus_bits wide.
  BitString encode() const {
    const auto w = static_cast<std::size_t>(modulus_bits);
    return BitString::from_uint(modulus, w)
        .concat(BitString::from_uint(exponent, w))
        .concat(BitString::from_uint(mask, w));
  }

  static RsaIndex decode(const BitString& bits) {
    if (bits.empty() || bits.size() % 3 != 0) throw MalformedKey("index length must be a multiple of 3");
    const std::size_t w = bits.size() / 3;
    RsaIndex out{static_cast<int>(w), bits.slice(0, w).to_uint(), bits.slice(w, w).to_uint(),
                 bits.slice(2 * w, w).to_uint()};
    if (detail::bit_length(out.modulus) != out.modulus_bits || out.exponent < 3 || out.mask == 0) {
      throw MalformedKey("encoded index is not a valid RSA index");
    }
    return out;
  }

  bool operator==(const RsaIndex&) const = default;
};

/// Trapdoor t = (N, d) with e·d ≡ 1 mod φ(N).
struct RsaTrapdoor {
  std::uint64_t modulus = 0;
  std::uint64_t inverse_exponent = 0;

  bool operator==(const RsaTrapdoor&) const = default;
};

struct RsaKeypair {
  RsaIndex index;
  RsaTrapdoor trapdoor;
};

/// Toy RSA trapdoor permutation family on D_i = Z_N^*, N = p·q for distinct
/// safe primes with an N of exactly `modulus_bits` bits (6 to 20).
///
/// Only functionality is modelled here; moduli this small offer no security.
class ToyRsaFamily {
 public:
  static constexpr int kMinBits = 6;
  static constexpr int kMaxBits = 20;

  explicit ToyRsaFamily(int modulus_bits) : bits_(modulus_bits) {
    if (modulus_bits < kMinBits || modulus_bits > kMaxBits) {
      throw DomainError("modulus size must be between 6 and 20 bits, got " +
                        std::to_string(modulus_bits));
    }
    const auto& primes = detail::safe_primes();
    for (std::size_t a = 0; a < primes.size(); ++a) {
      for (std::size_t b = a + 1; b < primes.size(); ++b) {
        const std::uint64_t n = primes[a] * primes[b];
        if (detail::bit_length(n) > bits_) break;
        if (detail::bit_length(n) == bits_) pairs_.emplace_back(primes[a], primes[b]);
      }
    }
    if (pairs_.empty()) throw DomainError("no safe-prime modulus of the requested size");
  }

  int modulus_bits() const { return bits_; }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& prime_pairs() const { return pairs_; }

  /// Exponents usable with φ: odd, coprime to φ, and not acting as the identity.
  static std::vector<std::uint64_t> exponents(std::uint64_t p, std::uint64_t q) {
    const std::uint64_t phi = (p - 1) * (q - 1);
    const std::uint64_t lambda = std::lcm(p - 1, q - 1);
    std::vector<std::uint64_t> out;
    for (std::uint64_t e = 3; e < phi; e += 2) {
      if (std::gcd(e, phi) == 1 && e % lambda != 1) out.push_back(e);
    }
    return out;
  }

  /// Builds the keypair for explicit parameters; used by generate and tests.
  RsaKeypair make(std::uint64_t p, std::uint64_t q, std::uint64_t e, std::uint64_t mask) const {
    const std::uint64_t n = p * q;
    const std::uint64_t phi = (p - 1) * (q - 1);
    if (detail::bit_length(n) != bits_) throw DomainError("modulus has the wrong size");
    if (std::gcd(e, phi) != 1) throw DomainError("exponent is not coprime to phi");
    if (mask == 0 || detail::bit_length(mask) > bits_) throw DomainError("mask out of range");
    return RsaKeypair{RsaIndex{bits_, n, e, mask}, RsaTrapdoor{n, detail::invmod(e, phi)}};
  }

  RsaKeypair generate(RandomSource& rng) const {
    const auto [p, q] = pairs_[rng.below(pairs_.size())];
    const auto es = exponents(p, q);
    const std::uint64_t e = es[rng.below(es.size())];
    const std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << bits_) - 1);
    return make(p, q, e, mask);
  }

  /// Sorted elements of Z_N^*. Cached per modulus for the calling thread.
  static const std::vector<std::uint64_t>& domain(const RsaIndex& i) {
    thread_local std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
    auto it = cache.find(i.modulus);
    if (it == cache.end()) {
      std::vector<std::uint64_t> units;
      for (std::uint64_t x = 1; x < i.modulus; ++x) {
        if (std::gcd(x, i.modulus) == 1) units.push_back(x);
      }
      it = cache.emplace(i.modulus, std::move(units)).first;
    }
    return it->second;
  }

  static bool in_domain(const RsaIndex& i, std::uint64_t x) {
    return x > 0 && x < i.modulus && std::gcd(x, i.modulus) == 1;
  }

  /// Uniform element of D_i, chosen by rank so that every draw has a fixed,
  /// finite number of outcomes.
  static std::uint64_t sample(const RsaIndex& i, RandomSource& rng) {
    const auto& d = domain(i);
    return d[rng.below(d.size())];
  }

  static std::uint64_t evaluate(const RsaIndex& i, std::uint64_t x) {
    if (!in_domain(i, x)) throw DomainError("input is not in Z_N^*");
    return detail::powmod(x, i.exponent, i.modulus);
  }

  static std::uint64_t invert(const RsaTrapdoor& t, std::uint64_t y) {
    if (y == 0 || y >= t.modulus || std::gcd(y, t.modulus) != 1) {
      throw DomainError("input is not in Z_N^*");
    }
    return detail::powmod(y, t.inverse_exponent, t.modulus);
  }

  /// Inner-product bit ⟨x, mask⟩ mod 2.
  static int hardcore(const RsaIndex& i, std::uint64_t x) {
    if (!in_domain(i, x)) throw DomainError("input is not in Z_N^*");
    return std::popcount(x & i.mask) & 1;
  }

  /// f_i^k(x).
  static std::uint64_t iterate(const RsaIndex& i, std::uint64_t x, std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) x = evaluate(i, x);
    return x;
  }

 private:
  int bits_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;
};

}  // namespace qenc
