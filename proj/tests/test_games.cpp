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

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "qenc/games/ind.hpp"
#include "qenc/games/role_library.hpp"
#include "qenc/games/sem.hpp"
#include "qenc/schemes/registry.hpp"

using namespace qenc;
using Catch::Matchers::WithinAbs;

namespace {

EstimateConfig exact_config(std::uint64_t seed = 7) {
  EstimateConfig c;
  c.mode = Mode::exact;
  c.seed = seed;
  return c;
}

EstimateConfig sample_config(std::size_t trials, std::uint64_t seed) {
  EstimateConfig c;
  c.mode = Mode::sample;
  c.trials = trials;
  c.seed = seed;
  return c;
}

GameOptions with_policy(OraclePolicy p, KeyMode k = KeyMode::enumerate) {
  GameOptions o;
  o.policy = std::move(p);
  o.key_mode = k;
  return o;
}

const Adversary kCopy = roles::adversary("copy-m");

}  // namespace

TEST_CASE("oracle policies and budgets are enforced", "[games][oracles]") {
  CHECK_THROWS_AS(OraclePolicy("bad", Access::enc, Access::enc_dec), PolicyViolation);
  CHECK(OraclePolicy::cca1().pre() == Access::enc_dec);
  CHECK(OraclePolicy::cca1().post() == Access::enc);

  auto scheme = make_scheme("qotp", 1);
  CounterRng coins(3);
  auto keyed = scheme->keygen(coins);
  const auto zero = DensityMatrix::basis(BitString::zeros(1), "M");

  OracleHandle none(keyed.get(), Access::none, coins);
  CHECK_THROWS_AS(none.encrypt(zero, "M"), PolicyViolation);

  OracleHandle enc(keyed.get(), Access::enc, coins, 2);
  const auto ct = enc.encrypt(zero, "M");
  CHECK_THROWS_AS(enc.decrypt(ct), PolicyViolation);
  enc.encrypt(zero, "M");
  CHECK(enc.calls() == 2);
  CHECK_THROWS_AS(enc.encrypt(zero, "M"), BudgetExhausted);

  OracleHandle both(keyed.get(), Access::enc_dec, coins);
  CHECK(both.decrypt(both.encrypt(zero, "M")).matrix().isApprox(zero.matrix()));
}

TEST_CASE("decryption after the challenge aborts a CCA1 run", "[games][oracles]") {
  auto scheme = make_scheme("prf-ske", 1);
  const Distinguisher cheat{"cheat", [](const Ciphertext& ct, GameContext& ctx) {
                              ctx.oracle.decrypt(ct);
                              return 1;
                            }};
  CHECK_THROWS_AS(run_ind(*scheme, roles::message_generator("ones"), cheat,
                          with_policy(OraclePolicy::cca1()), exact_config()),
                  PolicyViolation);

  // The generator may decrypt before the challenge.
  const MessageGenerator probing{"probing", [](GameContext& ctx) {
                                   const auto one = DensityMatrix::basis(BitString::ones(1), "M");
                                   const auto back = ctx.oracle.decrypt(ctx.oracle.encrypt(one, "M"));
                                   return MessageOutput{back, std::nullopt};
                                 }};
  const auto r = run_ind(*scheme, probing, roles::distinguisher("measure-m"),
                         with_policy(OraclePolicy::cca1()), exact_config());
  CHECK(r.exact);
  CHECK(r.p_real >= 0.0);
  // Without a grant the same generator fails.
  CHECK_THROWS_AS(run_ind(*scheme, probing, roles::distinguisher("measure-m"),
                          with_policy(OraclePolicy::cpa()), exact_config()),
                  PolicyViolation);
}

TEST_CASE("message generators are checked against the scheme", "[games]") {
  auto scheme = make_scheme("qotp", 2);
  const MessageGenerator small{"small", [](GameContext&) {
                                 return MessageOutput{DensityMatrix::basis(BitString::zeros(1), "M"),
                                                      std::nullopt};
                               }};
  const MessageGenerator stray{"stray", [](GameContext&) {
                                 return MessageOutput{
                                     tensor(DensityMatrix::basis(BitString::zeros(2), "M"),
                                            DensityMatrix::basis(BitString::zeros(1), "X")),
                                     std::nullopt};
                               }};
  const auto d = roles::distinguisher("measure-m");
  CHECK_THROWS_AS(run_ind(*scheme, small, d, {}, exact_config()), DimensionMismatch);
  CHECK_THROWS_AS(run_ind(*scheme, stray, d, {}, exact_config()), ModeError);
}

TEST_CASE("IND game examples", "[games][ind]") {
  const auto ones = roles::message_generator("ones");
  const auto measure = roles::distinguisher("measure-m");

  SECTION("identity encryption is broken") {
    auto s = make_scheme("identity", 1);
    const auto r = run_ind(*s, ones, measure, {}, exact_config());
    CHECK(r.exact);
    CHECK(r.ci_halfwidth == 0.0);
    CHECK(r.p_real == 1.0);
    CHECK(r.p_ideal == 0.0);
    CHECK(r.advantage == 1.0);
  }
  SECTION("constant distinguisher has no advantage") {
    auto s = make_scheme("identity", 1);
    CHECK(run_ind(*s, ones, roles::distinguisher("constant-1"), {}, exact_config()).advantage == 0.0);
  }
  SECTION("fresh one-time pad hides the message") {
    for (int q = 1; q <= 2; ++q) {
      auto s = make_scheme("qotp", q);
      for (const auto& m : roles::message_generators()) {
        if (m.id == "ghz-copy" || m.id == "bell") continue;
        CHECK_THAT(run_ind(*s, m, measure, {}, exact_config()).advantage, WithinAbs(0.0, 1e-12));
      }
    }
  }
}

TEST_CASE("IND' game examples", "[games][ind]") {
  const auto ones = roles::message_generator("ones");
  auto id = make_scheme("identity", 1);
  auto qotp = make_scheme("qotp", 1);
  CHECK(run_ind_prime(*id, ones, roles::distinguisher("coin"), {}, exact_config()).p == 0.5);
  CHECK(run_ind_prime(*id, ones, roles::distinguisher("measure-m"), {}, exact_config()).p == 1.0);
  CHECK_THAT(run_ind_prime(*qotp, ones, roles::distinguisher("measure-m"), {}, exact_config()).p,
             WithinAbs(0.5, 1e-12));
}

TEST_CASE("IND' and IND identity for deterministic distinguishers", "[games][ind]") {
  const std::vector<std::string> schemes{"identity", "qotp", "prf-ske", "prf-ske-const", "prf-ske-ideal"};
  const std::vector<std::string> dists{"measure-m", "constant-1", "constant-0", "pad-reuse"};
  for (const auto& sid : schemes) {
    auto s = make_scheme(sid, 1);
    for (const auto& mid : {"ones", "plus", "bell", "mixed"}) {
      for (const auto& did : dists) {
        const auto rep = ind_prime_identity_check(*s, roles::message_generator(mid),
                                                  roles::distinguisher(did),
                                                  with_policy(OraclePolicy::cpa()), exact_config());
        INFO(sid << " " << mid << " " << did);
        CHECK(rep.holds());
        CHECK_THAT(rep.lhs_flipped, WithinAbs(-rep.lhs, 1e-12));
        if (did == std::string("constant-1") || did == std::string("constant-0")) {
          CHECK_THAT(rep.lhs, WithinAbs(0.0, 1e-12));
          CHECK_THAT(rep.rhs, WithinAbs(0.0, 1e-12));
        }
      }
    }
  }
  // Broken scheme: both sides equal ½.
  auto id = make_scheme("identity", 1);
  const auto rep = ind_prime_identity_check(*id, roles::message_generator("ones"),
                                            roles::distinguisher("measure-m"), {}, exact_config());
  CHECK(rep.lhs == 0.5);
  CHECK(rep.rhs == 0.5);
}

TEST_CASE("CPA attack on the constant-PRF scheme", "[games][ind]") {
  auto s = make_scheme("prf-ske-const", 1);
  const auto r = run_ind(*s, roles::message_generator("ones"), roles::distinguisher("pad-reuse"),
                         with_policy(OraclePolicy::cpa()), sample_config(1000, 11));
  CHECK_FALSE(r.exact);
  CHECK(r.trials == 1000);
  CHECK(r.advantage >= 0.9);
  CHECK(r.ci_halfwidth <= 0.05);
}

TEST_CASE("SEM game examples", "[games][sem]") {
  const auto compare = roles::sem_distinguisher("compare-f");
  auto id = make_scheme("identity", 1);

  SECTION("copying the message on the broken scheme") {
    const auto r = run_sem(*id, roles::message_generator("copy-one"), kCopy,
                           roles::simulator("zero", kCopy), compare, {}, exact_config());
    CHECK(r.p_real == 1.0);
    CHECK(r.p_ideal == 0.0);
    CHECK(r.advantage >= 0.9);
  }
  SECTION("adversary that ignores the ciphertext is its own simulator") {
    const auto r = run_sem(*id, roles::message_generator("copy-random"), roles::adversary("constant"),
                           roles::simulator("zero", kCopy), compare, {}, exact_config());
    CHECK(r.advantage == 0.0);
    CHECK(r.p_real == 0.5);
  }
  SECTION("quantum F is passed through the roles") {
    // Copying M from Σ|x⟩|x⟩ then comparing with F succeeds on the broken
    // scheme; the reduction simulator only sees |0⟩.
    const auto r = run_sem(*id, roles::message_generator("ghz-copy"), kCopy,
                           roles::simulator("reduction", kCopy), compare, {}, exact_config());
    CHECK_THAT(r.p_real, WithinAbs(1.0, 1e-12));
    CHECK_THAT(r.p_ideal, WithinAbs(0.5, 1e-12));
    auto qotp = make_scheme("qotp", 1);
    const auto s = run_sem(*qotp, roles::message_generator("ghz-copy"), kCopy,
                           roles::simulator("reduction", kCopy), compare, {}, exact_config());
    CHECK_THAT(s.advantage, WithinAbs(0.0, 1e-12));
  }
  SECTION("generator without F is rejected") {
    CHECK_THROWS_AS(run_sem(*id, roles::message_generator("ones"), kCopy,
                            roles::simulator("zero", kCopy), compare, {}, exact_config()),
                    ModeError);
  }
}

TEST_CASE("SEM2 game examples", "[games][sem]") {
  auto id = make_scheme("identity", 1);
  const auto copy_one = roles::message_generator("copy-one");
  const auto r = run_sem2(*id, copy_one, kCopy, roles::simulator("coin", kCopy), {}, exact_config());
  CHECK(r.p_ideal == 0.5);
  CHECK(r.p_real == 1.0);

  // A two-bit answer never equals a one-bit target.
  const Adversary wide{"wide", [](const Ciphertext&, GameContext&) {
                         return DensityMatrix::basis(BitString::from_string("11"), kRegOut);
                       }};
  CHECK(run_sem2(*id, copy_one, wide, roles::simulator("coin", kCopy), {}, exact_config()).p_real == 0.0);

  // F drawn at random is still a basis state within each run.
  CHECK(run_sem2(*id, roles::message_generator("copy-random"), kCopy, roles::simulator("coin", kCopy), {},
                 exact_config())
            .p_real == 1.0);
  const MessageGenerator mixed_f{"mixed-f", [](GameContext&) {
                                   return MessageOutput{tensor(DensityMatrix::basis(BitString::zeros(1), kRegM),
                                                               DensityMatrix::maximally_mixed(1, kRegF)),
                                                        std::nullopt};
                                 }};
  CHECK_THROWS_AS(run_sem2(*id, mixed_f, kCopy, roles::simulator("coin", kCopy), {}, exact_config()), ModeError);
  CHECK_THROWS_AS(run_sem2(*id, roles::message_generator("ghz-copy"), kCopy,
                           roles::simulator("coin", kCopy), {}, exact_config()),
                  ModeError);
}

TEST_CASE("SEM3 game examples", "[games][sem]") {
  auto id = make_scheme("identity", 1);
  const auto zero_pair = roles::message_function_pair("measured-zero", 1);
  CHECK_THAT(run_sem3(*id, zero_pair, kCopy, roles::simulator("zero", kCopy), {}, exact_config()).p_ideal,
             WithinAbs(1.0, 1e-12));

  const auto copy_pair = roles::message_function_pair("measured-copy", 1);
  const auto broken = run_sem3(*id, copy_pair, kCopy, roles::simulator("reduction", kCopy), {}, exact_config());
  CHECK_THAT(broken.p_real, WithinAbs(1.0, 1e-12));
  CHECK_THAT(broken.p_ideal, WithinAbs(0.5, 1e-12));

  // Hidden-bit construction: the simulator's input does not depend on b.
  const auto built = sem3_from_ind_prime(roles::message_generator("ones"), roles::distinguisher("measure-m"));
  for (const auto& sim : {roles::simulator("zero", built.adv), roles::simulator("coin", built.adv),
                          roles::simulator("reduction", built.adv)}) {
    const auto r = run_sem3(*id, built.pair, built.adv, sim, {}, exact_config());
    CHECK(r.p_ideal <= 0.5 + 1e-12);
    CHECK(r.p_real == 1.0);
  }

  auto bad = copy_pair;
  bad.input_len = 2;
  CHECK_THROWS_AS(run_sem3(*id, bad, kCopy, roles::simulator("zero", kCopy), {}, exact_config()), ModeError);
}

TEST_CASE("exact and sampled estimates agree", "[games][estimate]") {
  // pad-reuse against the ideal scheme at one qubit: p_real = 5/8, p_zero = 3/8.
  auto s = make_scheme("prf-ske-ideal", 1);
  const auto m = roles::message_generator("ones");
  const auto d = roles::distinguisher("pad-reuse");
  const auto opts = with_policy(OraclePolicy::cpa());
  const auto exact = run_ind(*s, m, d, opts, exact_config());
  CHECK_THAT(exact.p_real, WithinAbs(0.625, 1e-12));
  CHECK_THAT(exact.p_ideal, WithinAbs(0.375, 1e-12));

  int covered = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    const auto r = run_ind(*s, m, d, opts, sample_config(400, 1000 + rep));
    if (std::abs(r.advantage - exact.advantage) <= r.ci_halfwidth) ++covered;
  }
  INFO("covered " << covered);
  CHECK(covered >= 95);
}

TEST_CASE("secure idealizations show no advantage in any game", "[games][null]") {
  struct Target {
    std::string id;
    KeyMode mode;
  };
  const std::vector<Target> targets{{"prf-ske-ideal", KeyMode::enumerate},
                                    {"towp-pke-ideal", KeyMode::fixed},
                                    {"qotp", KeyMode::enumerate}};
  const auto compare = roles::sem_distinguisher("compare-f");
  const auto sim = roles::simulator("reduction", kCopy);
  for (const auto& t : targets) {
    auto s = make_scheme(t.id, 1);
    INFO(t.id);
    for (const auto& policy : {OraclePolicy::none(), OraclePolicy::cpa(), OraclePolicy::cca1()}) {
      const auto opts = with_policy(policy, t.mode);
      for (const auto& did : {"measure-m", "coin", "constant-1"}) {
        const auto d = roles::distinguisher(did);
        CHECK_THAT(run_ind(*s, roles::message_generator("ones"), d, opts, exact_config()).advantage,
                   WithinAbs(0.0, 1e-12));
        CHECK_THAT(run_ind_prime(*s, roles::message_generator("plus"), d, opts, exact_config()).p,
                   WithinAbs(0.5, 1e-12));
      }
    }
    const auto opts = with_policy(OraclePolicy::none(), t.mode);
    CHECK_THAT(run_sem(*s, roles::message_generator("copy-random"), kCopy, sim, compare, opts, exact_config()).advantage,
               WithinAbs(0.0, 1e-12));
    CHECK_THAT(run_sem2(*s, roles::message_generator("copy-one"), kCopy, sim, opts, exact_config()).advantage,
               WithinAbs(0.0, 1e-12));
    CHECK_THAT(run_sem3(*s, roles::message_function_pair("measured-copy", 1), kCopy, sim, opts, exact_config()).advantage,
               WithinAbs(0.0, 1e-12));
  }
}
