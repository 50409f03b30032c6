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
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qenc/bits.hpp"
#include "qenc/classical/prf.hpp"
#include "qenc/classical/prg.hpp"
#include "qenc/errors.hpp"
#include "qenc/estimate.hpp"
#include "qenc/games/ind.hpp"
#include "qenc/games/oracles.hpp"
#include "qenc/games/roles.hpp"
#include "qenc/games/sem.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/quantum/measure.hpp"
#include "qenc/quantum/pauli.hpp"
#include "qenc/schemes/prf_ske.hpp"
#include "qenc/schemes/scheme.hpp"

namespace qenc {

// ---------------------------------------------------------------------------
// IND => SEM

/// Simulator that encrypts |0^q⟩_M itself and hands the result to `adv`.
/// Encryption goes through the granted oracle if any, else the public key,
/// else a key the simulator generates on its own.
inline Simulator reduction_ind_to_sem(const Adversary& adv) {
  return Simulator{"reduction(" + adv.id + ")", [fn = adv.fn](const DensityMatrix& rest,
                                                             GameContext& ctx) {
    const int q = ctx.message_qubits;
    const auto zero = tensor(DensityMatrix::basis(BitString::zeros(static_cast<std::size_t>(q)), kRegM), rest);
    if (ctx.oracle.can_encrypt()) return fn(ctx.oracle.encrypt(zero, kRegM), ctx);
    if (ctx.scheme.flavor() == Flavor::public_key) {
      if (!ctx.pk) throw ModeError("public-key simulator was given no public key");
      return fn(ctx.scheme.encrypt_public(*ctx.pk, zero, kRegM, ctx.coins), ctx);
    }
    auto own = ctx.scheme.keygen(ctx.coins);
    return fn(own->encrypt(zero, kRegM, ctx.coins), ctx);
  }};
}

namespace detail {

// Views registers a, b (adjacent, in that order) as one register `name`.
inline DensityMatrix merge_pair(const DensityMatrix& s, const std::string& a, const std::string& b,
                                const std::string& name) {
  Layout out;
  for (std::size_t i = 0; i < s.layout().size(); ++i) {
    const auto& r = s.layout()[i];
    if (r.name == a) {
      if (i + 1 >= s.layout().size() || s.layout()[i + 1].name != b) {
        throw InvalidState("registers '" + a + "' and '" + b + "' are not adjacent");
      }
      out.push_back(Register{name, r.qubits + s.layout()[i + 1].qubits});
      ++i;
    } else {
      out.push_back(r);
    }
  }
  return DensityMatrix::unchecked(s.matrix(), std::move(out));
}

// Inverse of merge_pair: the first `first_qubits` of `name` become `a`.
inline DensityMatrix split_register(const DensityMatrix& s, const std::string& name,
                                    int first_qubits, const std::string& a, const std::string& b) {
  Layout out;
  for (const auto& r : s.layout()) {
    if (r.name == name) {
      out.push_back(Register{a, first_qubits});
      out.push_back(Register{b, r.qubits - first_qubits});
    } else {
      out.push_back(r);
    }
  }
  return DensityMatrix::unchecked(s.matrix(), std::move(out));
}

inline const std::string kRegEF = "E+F";

}  // namespace detail

/// IND roles matching a SEM tuple: the generator folds E and F into one
/// side register and the distinguisher runs `adv` then `dist` on the result.
struct IndFromSem {
  MessageGenerator mgen;
  Distinguisher dist;
};

inline IndFromSem ind_roles_from_sem(const MessageGenerator& sem_mgen, const Adversary& adv,
                                     const SemDistinguisher& dist) {
  auto e_qubits = std::make_shared<int>(0);
  MessageGenerator m{sem_mgen.id + "/ef", [gen = sem_mgen.fn, e_qubits](GameContext& ctx) {
                       auto st = detail::normalize_message(gen(ctx).state, ctx.message_qubits, true);
                       if (!st.has(kRegF)) throw ModeError("SEM generator must emit an F register");
                       *e_qubits = st.reg(kRegE).qubits;
                       auto merged = detail::merge_pair(st, kRegE, kRegF, kRegE);
                       return MessageOutput{std::move(merged), std::nullopt};
                     }};
  Distinguisher d{dist.id + "." + adv.id, [afn = adv.fn, dfn = dist.fn, e_qubits](
                                              const Ciphertext& ct, GameContext& ctx) {
                    Ciphertext split{ct.tag, detail::split_register(ct.payload, kRegE, *e_qubits, kRegE, kRegF),
                                     ct.target};
                    const auto out = detail::role_output(afn(split, ctx), {kRegOut, kRegF}, "adversary");
                    return dfn(out, ctx.coins);
                  }};
  return IndFromSem{std::move(m), std::move(d)};
}

struct IndToSemReport {
  AdvantageEstimate sem;  // with the reduction simulator
  AdvantageEstimate ind;  // of the composed distinguisher
  /// sem.advantage ≤ ind.advantage + both half-widths (+ 1e-12 slack).
  bool within_bound = false;
};

inline IndToSemReport run_ind_to_sem(const EncryptionScheme& scheme, const MessageGenerator& mgen,
                                     const Adversary& adv, const SemDistinguisher& dist,
                                     const GameOptions& options, const EstimateConfig& config) {
  IndToSemReport r;
  r.sem = run_sem(scheme, mgen, adv, reduction_ind_to_sem(adv), dist, options, config);
  const auto roles = ind_roles_from_sem(mgen, adv, dist);
  r.ind = run_ind(scheme, roles.mgen, roles.dist, options, config);
  r.within_bound = r.sem.advantage <= r.ind.advantage + r.sem.ci_halfwidth + r.ind.ci_halfwidth + 1e-12;
  return r;
}

// ---------------------------------------------------------------------------
// SEM => IND

/// compare-f: measures OUT and F, outputs 1 iff the strings agree.
inline SemDistinguisher compare_f_distinguisher() {
  return SemDistinguisher{"compare-f", [](const DensityMatrix& s, RandomSource& coins) {
                            if (!s.has(kRegOut) || !s.has(kRegF)) return 0;
                            const auto out = measure_computational(s, kRegOut, coins);
                            const auto f = measure_computational(out.post_state, kRegF, coins);
                            return out.outcome == f.outcome ? 1 : 0;
                          }};
}

/// Roles built from an IND pair (M, D).
struct SemFromInd {
  MessageGenerator mgen;   // M′: ρ_ME ⊗ |0⟩_F or |0⟩_M ⊗ ρ_E ⊗ |1⟩_F, each w.p. ½
  Adversary adv;           // writes D's bit to OUT
  Adversary adv_flipped;   // writes D ⊕ 1
  SemDistinguisher dist;   // compare-f
};

inline SemFromInd reduction_sem_to_ind(const MessageGenerator& ind_mgen, const Distinguisher& ind_dist) {
  MessageGenerator m{"coin(" + ind_mgen.id + ")", [gen = ind_mgen.fn](GameContext& ctx) {
                       const auto st = detail::normalize_message(gen(ctx).state, ctx.message_qubits, false);
                       const int c = ctx.coins.bit();
                       const auto body = c == 0 ? st : replace_with_zero(st, kRegM);
                       return MessageOutput{tensor(body, DensityMatrix::basis(BitString::from_uint(static_cast<std::uint64_t>(c), 1), kRegF)),
                                            std::nullopt};
                     }};
  const auto make = [&](bool flip) {
    return Adversary{(flip ? "bit^1(" : "bit(") + ind_dist.id + ")",
                     [fn = ind_dist.fn, flip](const Ciphertext& ct, GameContext& ctx) {
                       int b = detail::is_one(fn(ct, ctx)) ? 1 : 0;
                       if (flip) b ^= 1;
                       return DensityMatrix::basis(BitString::from_uint(static_cast<std::uint64_t>(b), 1), kRegOut);
                     }};
  };
  return SemFromInd{std::move(m), make(false), make(true), compare_f_distinguisher()};
}

/// Both sides of IND advantage = 2·max(p_A − ½, p_{A⊕1} − ½), by exact
/// enumeration, together with the simulator's success probability.
struct SemToIndIdentity {
  double ind_advantage = 0.0;
  double p_adv = 0.0;
  double p_adv_flipped = 0.0;
  double p_sim = 0.0;
  double sem_advantage = 0.0;          // |p_adv − p_sim|
  double sem_advantage_flipped = 0.0;  // |p_adv_flipped − p_sim|
  double rhs = 0.0;                    // 2·max(p_adv − ½, p_adv_flipped − ½)
  double max_error = 0.0;

  bool holds(double tol = 1e-12) const { return max_error <= tol; }
};

inline SemToIndIdentity sem_to_ind_identity_check(const EncryptionScheme& scheme,
                                                  const MessageGenerator& ind_mgen,
                                                  const Distinguisher& ind_dist, const Simulator& sim,
                                                  const GameOptions& options, EstimateConfig config) {
  config.mode = Mode::exact;
  const auto roles = reduction_sem_to_ind(ind_mgen, ind_dist);
  const auto ind = run_ind(scheme, ind_mgen, sanitized(ind_dist), options, config);
  const auto a = run_sem(scheme, roles.mgen, roles.adv, sim, roles.dist, options, config);
  const auto b = run_sem(scheme, roles.mgen, roles.adv_flipped, sim, roles.dist, options, config);
  SemToIndIdentity r;
  r.ind_advantage = ind.advantage;
  r.p_adv = a.p_real;
  r.p_adv_flipped = b.p_real;
  r.p_sim = a.p_ideal;
  r.sem_advantage = a.advantage;
  r.sem_advantage_flipped = b.advantage;
  r.rhs = 2.0 * std::max(r.p_adv - 0.5, r.p_adv_flipped - 0.5);
  r.max_error = std::max({std::abs(r.ind_advantage - r.rhs), std::abs(a.p_ideal - 0.5),
                          std::abs(b.p_ideal - 0.5), std::abs(r.p_adv + r.p_adv_flipped - 1.0)});
  return r;
}

// ---------------------------------------------------------------------------
// IND-CCA1 on the PRF scheme => PRF distinguisher

/// A₀: given φ, simulates Enc_φ and Dec_φ for the generator, encrypts the
/// challenge for a fair coin, and outputs 1 iff the adversary names the coin.
inline PrfDistinguisher reduction_cca1_to_prf(const PrfSke& scheme, const MessageGenerator& mgen,
                                              const Distinguisher& dist,
                                              std::size_t budget = kDefaultOracleBudget) {
  return [&scheme, gen = mgen.fn, dfn = dist.fn, budget](const FunctionOracle& phi,
                                                          RandomSource& coins) {
    const int q = scheme.plaintext_qubits();
    auto keyed = scheme.with_pad(phi);
    OracleHandle pre(keyed.get(), Access::enc_dec, coins, budget);
    OracleHandle post(keyed.get(), Access::enc, coins, budget);
    GameContext mctx{coins, std::nullopt, q, pre, scheme};
    const auto st = detail::normalize_message(gen(mctx).state, q, false);
    const int c = coins.bit();
    const auto ct = keyed->encrypt(c == 1 ? st : replace_with_zero(st, kRegM), kRegM, coins);
    GameContext dctx{coins, std::nullopt, q, post, scheme};
    return (detail::is_one(dfn(ct, dctx)) ? 1 : 0) == c ? 1 : 0;
  };
}

struct Cca1ToPrfReport {
  AdvantageEstimate cca1;  // the adversary against the scheme
  AdvantageEstimate prf;   // A₀ against the scheme's PRF
};

inline Cca1ToPrfReport run_cca1_to_prf(const PrfSke& scheme, const MessageGenerator& mgen,
                                       const Distinguisher& dist, const EstimateConfig& config,
                                       std::size_t budget = kDefaultOracleBudget) {
  GameOptions options{OraclePolicy::cca1(), KeyMode::enumerate, budget};
  return Cca1ToPrfReport{run_ind(scheme, mgen, dist, options, config),
                         prf_distinguisher_advantage(reduction_cca1_to_prf(scheme, mgen, dist, budget),
                                                     scheme.prf(), config)};
}

// ---------------------------------------------------------------------------
// padded-state distinguisher => PRG distinguisher

/// The pair (ρ_AB, σ_A) a distinguisher tells apart after padding A.
struct PaddedPair {
  DensityMatrix rho;    // registers include `target`
  DensityMatrix sigma;  // single register named `target`
  std::string target = "A";
};

/// D′(y): coin c picks ρ_AB (c = 1) or σ_A ⊗ ρ_B (c = 0), pads A with P_y,
/// and outputs 1 iff `dist` returns c.
inline PrgDistinguisher reduction_qotp_to_prg(const StateDistinguisher& dist, const PaddedPair& pair) {
  if (pair.sigma.layout().size() != 1 || pair.sigma.layout()[0].name != pair.target) {
    throw InvalidState("sigma must be a single register named '" + pair.target + "'");
  }
  if (pair.sigma.reg(pair.target).qubits != pair.rho.reg(pair.target).qubits) {
    throw DimensionMismatch("sigma and rho disagree on the size of '" + pair.target + "'");
  }
  DensityMatrix product = pair.sigma;
  if (pair.rho.layout().size() > 1) {
    product = permute_registers(tensor(pair.sigma, partial_trace(pair.rho, pair.target)),
                                register_names(pair.rho));
  }
  return [fn = dist.fn, rho = pair.rho, product = std::move(product), target = pair.target](
             const BitString& y, RandomSource& coins) {
    const auto need = static_cast<std::size_t>(2 * rho.reg(target).qubits);
    if (y.size() != need) {
      throw DimensionMismatch("pad has " + std::to_string(y.size()) + " bits, expected " + std::to_string(need));
    }
    const int c = coins.bit();
    const auto padded = apply_pauli(y, c == 1 ? rho : product, target);
    return (detail::is_one(fn(padded, coins)) ? 1 : 0) == c ? 1 : 0;
  };
}

struct QotpToPrgReport {
  AdvantageEstimate prg;  // D′ on G(s) versus uniform y
  double p_uniform = 0.0; // D′'s success on uniform y
};

inline QotpToPrgReport run_qotp_to_prg(const StateDistinguisher& dist, const PaddedPair& pair,
                                       const PrgSpec& prg, const EstimateConfig& config) {
  const auto est = prg_distinguisher_advantage(reduction_qotp_to_prg(dist, pair), prg, config);
  return QotpToPrgReport{est, est.p_ideal};
}

// ---------------------------------------------------------------------------
// SEM3 => IND'

/// SEM3 roles from an IND′ pair: the generator draws b, emits ρ^{(b)} and
/// appends b to its transcript; f returns the last transcript bit; the
/// adversary writes D's guess to OUT.
struct Sem3FromIndPrime {
  MessageFunctionPair pair;
  Adversary adv;
};

inline Sem3FromIndPrime sem3_from_ind_prime(const MessageGenerator& ind_mgen, const Distinguisher& ind_dist,
                                            std::size_t inner_transcript = 0) {
  MessageGenerator gen{"hidden-bit(" + ind_mgen.id + ")",
                       [fn = ind_mgen.fn, inner_transcript](GameContext& ctx) {
                         auto msg = fn(ctx);
                         BitString x = msg.transcript.value_or(BitString{});
                         if (x.size() != inner_transcript) {
                           throw ModeError("inner transcript length does not match the declared length");
                         }
                         const auto st = detail::normalize_message(msg.state, ctx.message_qubits, false);
                         const int b = ctx.coins.bit();
                         x.push_back(b == 1);
                         return MessageOutput{b == 1 ? st : replace_with_zero(st, kRegM), std::move(x)};
                       }};
  MessageFunctionPair pair{gen.id, gen,
                           [](const std::optional<BitString>&, const BitString& x) {
                             return x.slice(x.size() - 1, 1);
                           },
                           inner_transcript + 1};
  Adversary adv{"guess(" + ind_dist.id + ")", [fn = ind_dist.fn](const Ciphertext& ct, GameContext& ctx) {
                  const int b = detail::is_one(fn(ct, ctx)) ? 1 : 0;
                  return DensityMatrix::basis(BitString::from_uint(static_cast<std::uint64_t>(b), 1), kRegOut);
                }};
  return Sem3FromIndPrime{std::move(pair), std::move(adv)};
}

// ---------------------------------------------------------------------------
// SEM2 => SEM and SEM3 => SEM2 role conversions

/// A SEM2 generator is a SEM generator; OUT = F is the SEM distinguisher.
inline SemDistinguisher sem2_as_sem() { return compare_f_distinguisher(); }

/// Writes f_pk(x) into a fresh F register next to the generator's M, E.
inline MessageGenerator sem3_as_sem2(const MessageFunctionPair& pair) {
  return MessageGenerator{"f(" + pair.id + ")", [pair](GameContext& ctx) {
                            auto msg = pair.gen.fn(ctx);
                            if (!msg.transcript || msg.transcript->size() != pair.input_len) {
                              throw ModeError("SEM3 transcript length does not match the paired function");
                            }
                            const auto st = detail::normalize_message(msg.state, ctx.message_qubits, false);
                            const auto y = pair.f(ctx.pk, *msg.transcript);
                            return MessageOutput{tensor(st, DensityMatrix::basis(y, kRegF)), msg.transcript};
                          }};
}

}  // namespace qenc
