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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"
#include "qenc/estimate.hpp"
#include "qenc/games/roles.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/quantum/measure.hpp"
#include "qenc/schemes/scheme.hpp"

namespace qenc {

namespace detail {

// Keeps only `names` of a role's output, checking that they are present.
inline DensityMatrix role_output(const DensityMatrix& out, const std::vector<std::string>& names,
                                 const std::string& role) {
  for (const auto& n : names) {
    if (!out.has(n)) throw ModeError(role + " output lacks register '" + n + "'");
  }
  return reduce_to(out, names);
}

// Shared setup of the SEM arms: the generator's state with F either measured
// and set aside (classical F) or left in place (quantum F).
struct SemPrepared {
  DensityMatrix state;          // M, E[, F]
  std::optional<BitString> y;   // measured F value when F is classical
};

inline SemPrepared sem_prepare(const DensityMatrix& raw, int q, RandomSource& coins) {
  auto state = normalize_message(raw, q, true);
  if (!state.has(kRegF)) throw ModeError("SEM message generator must emit an F register");
  if (is_classical_register(state, kRegF)) {
    auto m = measure_and_discard(state, kRegF, coins);
    return SemPrepared{std::move(m.post_state), std::move(m.outcome)};
  }
  return SemPrepared{std::move(state), std::nullopt};
}

inline DensityMatrix sem_final(const DensityMatrix& role_out, const std::optional<BitString>& y,
                               const std::string& role) {
  if (y) return tensor(role_output(role_out, {kRegOut}, role), DensityMatrix::basis(*y, kRegF));
  return role_output(role_out, {kRegOut, kRegF}, role);
}

}  // namespace detail

/// |Pr[D((A ⊗ 1_F)(Enc ⊗ 1_EF) ρ_MEF) = 1] − Pr[D((S ⊗ 1_F) ρ_EF) = 1]|.
///
/// A block-diagonal (classical) F is measured before the roles run and
/// reattached to their output, which leaves every probability unchanged
/// because the roles never act on F. A quantum F is handed to A inside the
/// ciphertext payload and to S with E; both must return it next to OUT.
inline AdvantageEstimate run_sem(const EncryptionScheme& scheme, const MessageGenerator& mgen,
                                 const Adversary& adv, const Simulator& sim,
                                 const SemDistinguisher& dist, const GameOptions& options,
                                 const EstimateConfig& config) {
  const int q = scheme.plaintext_qubits();
  const auto real = [&](RandomSource& coins) {
    detail::Session session(scheme, options, config.seed, coins);
    GameContext mctx{coins, session.pk, q, session.pre, scheme};
    auto prep = detail::sem_prepare(mgen.fn(mctx).state, q, coins);
    const auto ct = session.keyed->encrypt(prep.state, kRegM, coins);
    GameContext actx{coins, session.pk, q, session.post, scheme};
    const auto out = detail::sem_final(adv.fn(ct, actx), prep.y, "adversary");
    return detail::is_one(dist.fn(out, coins));
  };
  const auto ideal = [&](RandomSource& coins) {
    detail::Session session(scheme, options, config.seed, coins);
    GameContext mctx{coins, session.pk, q, session.pre, scheme};
    auto prep = detail::sem_prepare(mgen.fn(mctx).state, q, coins);
    GameContext sctx{coins, session.pk, q, session.post, scheme};
    const auto out = detail::sem_final(sim.fn(partial_trace(prep.state, kRegM), sctx), prep.y, "simulator");
    return detail::is_one(dist.fn(out, coins));
  };
  return estimate(config, real, ideal);
}

namespace detail {

// Measures OUT and compares it with `target`; unequal lengths fail.
inline bool out_equals(const DensityMatrix& role_out, const BitString& target,
                       const std::string& role, RandomSource& coins) {
  const auto out = role_output(role_out, {kRegOut}, role);
  return measure_computational(out, kRegOut, coins).outcome == target;
}

// Runs both arms of a game in which A and S must output a classical target.
template <class Prepare>
AdvantageEstimate run_classical_target(const EncryptionScheme& scheme, const Adversary& adv,
                                       const Simulator& sim, const GameOptions& options,
                                       const EstimateConfig& config, Prepare prepare) {
  const int q = scheme.plaintext_qubits();
  const auto real = [&](RandomSource& coins) {
    Session session(scheme, options, config.seed, coins);
    GameContext mctx{coins, session.pk, q, session.pre, scheme};
    auto [state, target] = prepare(mctx, session.pk);
    const auto ct = session.keyed->encrypt(state, kRegM, coins);
    GameContext actx{coins, session.pk, q, session.post, scheme};
    return out_equals(adv.fn(ct, actx), target, "adversary", coins);
  };
  const auto ideal = [&](RandomSource& coins) {
    Session session(scheme, options, config.seed, coins);
    GameContext mctx{coins, session.pk, q, session.pre, scheme};
    auto [state, target] = prepare(mctx, session.pk);
    GameContext sctx{coins, session.pk, q, session.post, scheme};
    return out_equals(sim.fn(partial_trace(state, kRegM), sctx), target, "simulator", coins);
  };
  return estimate(config, real, ideal);
}

}  // namespace detail

/// |Pr[A(Enc(ρ_ME)) = y] − Pr[S(ρ_E) = y]| for a generator whose F register
/// holds a basis state |y⟩ in every run.
inline AdvantageEstimate run_sem2(const EncryptionScheme& scheme, const MessageGenerator& mgen2,
                                  const Adversary& adv, const Simulator& sim,
                                  const GameOptions& options, const EstimateConfig& config) {
  const int q = scheme.plaintext_qubits();
  return detail::run_classical_target(
      scheme, adv, sim, options, config,
      [&](GameContext& ctx, const std::optional<BitString>&) {
        const auto state = detail::normalize_message(mgen2.fn(ctx).state, q, true);
        if (!state.has(kRegF)) throw ModeError("SEM2 generator must emit an F register");
        const auto dist = measurement_distribution(state, kRegF);
        if (dist.size() != 1 || std::abs(dist.begin()->second - 1.0) > kTolPsd) {
          throw ModeError("SEM2 generator's F register is not a basis state");
        }
        return std::pair{partial_trace(state, kRegF), dist.begin()->first};
      });
}

/// |Pr[A(Enc(ρ_ME)) = f_pk(x)] − Pr[S(ρ_E) = f_pk(x)]| where x is the
/// generator's measurement transcript.
inline AdvantageEstimate run_sem3(const EncryptionScheme& scheme, const MessageFunctionPair& pair,
                                  const Adversary& adv, const Simulator& sim,
                                  const GameOptions& options, const EstimateConfig& config) {
  const int q = scheme.plaintext_qubits();
  return detail::run_classical_target(
      scheme, adv, sim, options, config,
      [&](GameContext& ctx, const std::optional<BitString>& pk) {
        auto msg = pair.gen.fn(ctx);
        if (!msg.transcript || msg.transcript->size() != pair.input_len) {
          throw ModeError("SEM3 transcript length does not match the paired function");
        }
        const auto state = detail::normalize_message(msg.state, q, false);
        return std::pair{state, pair.f(pk, *msg.transcript)};
      });
}

}  // namespace qenc
