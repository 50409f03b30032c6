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
#include <optional>
#include <string>

#include "qenc/errors.hpp"
#include "qenc/estimate.hpp"
#include "qenc/games/roles.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/schemes/scheme.hpp"

namespace qenc {

namespace detail {

// One run of the IND experiment; `zero_challenge` selects the |0⟩⟨0|_M arm.
inline int ind_trial(const EncryptionScheme& scheme, const MessageGenerator& mgen,
                     const Distinguisher& dist, const GameOptions& options, std::uint64_t seed,
                     RandomSource& coins, std::optional<int> forced_arm, int* arm_out) {
  const int q = scheme.plaintext_qubits();
  Session session(scheme, options, seed, coins);
  GameContext mctx{coins, session.pk, q, session.pre, scheme};
  const auto state = normalize_message(mgen.fn(mctx).state, q, false);
  const int arm = forced_arm ? *forced_arm : coins.bit();
  if (arm_out) *arm_out = arm;
  const auto challenge = arm == 1 ? state : replace_with_zero(state, kRegM);
  const auto ct = session.keyed->encrypt(challenge, kRegM, coins);
  GameContext dctx{coins, session.pk, q, session.post, scheme};
  return dist.fn(ct, dctx);
}

}  // namespace detail

/// |Pr[D(Enc(ρ_ME)) = 1] − Pr[D(Enc(|0⟩⟨0|_M ⊗ ρ_E)) = 1]|. p_real is the
/// first arm, p_ideal the zero-message arm.
inline AdvantageEstimate run_ind(const EncryptionScheme& scheme, const MessageGenerator& mgen,
                                 const Distinguisher& dist, const GameOptions& options,
                                 const EstimateConfig& config) {
  const auto arm = [&](int which) {
    return [&, which](RandomSource& coins) {
      return detail::is_one(
          detail::ind_trial(scheme, mgen, dist, options, config.seed, coins, which, nullptr));
    };
  };
  return estimate(config, arm(1), arm(0));
}

/// Pr[D guesses the hidden bit b], where b = 1 encrypts ρ_ME and b = 0
/// encrypts |0⟩⟨0|_M ⊗ ρ_E.
inline ProbabilityEstimate run_ind_prime(const EncryptionScheme& scheme,
                                         const MessageGenerator& mgen, const Distinguisher& dist,
                                         const GameOptions& options, const EstimateConfig& config) {
  return estimate_probability(config, [&](RandomSource& coins) {
    int b = 0;
    const int out = detail::ind_trial(scheme, mgen, dist, options, config.seed, coins, std::nullopt, &b);
    return (detail::is_one(out) ? 1 : 0) == b;
  });
}

/// Both sides of Pr[guess = b] − ½ = ½(Pr[D(real) = 1] − Pr[D(zero) = 1]),
/// for D and for D ⊕ 1, computed by exact enumeration.
struct IndPrimeIdentity {
  double p_real = 0.0;
  double p_zero = 0.0;
  double guess = 0.0;          // Pr[D = b]
  double guess_flipped = 0.0;  // Pr[D ⊕ 1 = b]
  double lhs = 0.0;            // guess − ½
  double rhs = 0.0;            // ½(p_real − p_zero)
  double lhs_flipped = 0.0;
  double rhs_flipped = 0.0;
  double max_error = 0.0;

  bool holds(double tol = 1e-12) const { return max_error <= tol; }
};

inline Distinguisher flipped(const Distinguisher& d) {
  return Distinguisher{d.id + "^1", [fn = d.fn](const Ciphertext& ct, GameContext& ctx) {
                         return detail::is_one(fn(ct, ctx)) ? 0 : 1;
                       }};
}

/// Output mapped into {0, 1}: anything other than 1 counts as 0.
inline Distinguisher sanitized(const Distinguisher& d) {
  return Distinguisher{d.id, [fn = d.fn](const Ciphertext& ct, GameContext& ctx) {
                         return detail::is_one(fn(ct, ctx)) ? 1 : 0;
                       }};
}

inline IndPrimeIdentity ind_prime_identity_check(const EncryptionScheme& scheme,
                                                 const MessageGenerator& mgen,
                                                 const Distinguisher& dist,
                                                 const GameOptions& options,
                                                 EstimateConfig config) {
  config.mode = Mode::exact;
  const auto d = sanitized(dist);
  const auto ind = run_ind(scheme, mgen, d, options, config);
  IndPrimeIdentity out;
  out.p_real = ind.p_real;
  out.p_zero = ind.p_ideal;
  out.guess = run_ind_prime(scheme, mgen, d, options, config).p;
  out.guess_flipped = run_ind_prime(scheme, mgen, flipped(d), options, config).p;
  out.lhs = out.guess - 0.5;
  out.rhs = 0.5 * (out.p_real - out.p_zero);
  out.lhs_flipped = out.guess_flipped - 0.5;
  out.rhs_flipped = 0.5 * (out.p_zero - out.p_real);
  out.max_error = std::max({std::abs(out.lhs - out.rhs), std::abs(out.lhs_flipped - out.rhs_flipped),
                            std::abs(out.lhs + out.lhs_flipped)});
  return out;
}

}  // namespace qenc
