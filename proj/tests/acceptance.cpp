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

// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qenc/classical/prf.hpp"
#include "qenc/classical/prg.hpp"
#include "qenc/classical/towp.hpp"
#include "qenc/cli/commands.hpp"
#include "qenc/games/ind.hpp"
#include "qenc/games/reductions.hpp"
#include "qenc/games/role_library.hpp"
#include "qenc/games/sem.hpp"
#include "qenc/schemes/registry.hpp"
#include "qenc/schemes/towp_pke.hpp"

using namespace qenc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

EstimateConfig exact_config(std::uint64_t seed = 1) {
  EstimateConfig c;
  c.mode = Mode::exact;
  c.seed = seed;
  return c;
}

EstimateConfig sample_config(std::size_t trials, std::uint64_t seed) {
  EstimateConfig c;
  c.trials = trials;
  c.seed = seed;
  return c;
}

GameOptions options_for(OraclePolicy p, KeyMode k) {
  GameOptions o;
  o.policy = std::move(p);
  o.key_mode = k;
  return o;
}

// 1 -------------------------------------------------------------------------
Outcome qotp_mixing() {
  cli::ExperimentConfig c;
  c.qubits = 3;
  c.seed = 2026;
  const auto r = cli::cmd_qotp_mix(c);
  int states = 0;
  double worst = 0.0;
  for (const auto& row : r.json.at("results")) {
    if (row.at("kind") != "average") continue;
    ++states;
    worst = std::max(worst, row.at("distance").get<double>());
  }
  return {r.pass && states >= 20 && worst <= 1e-10,
          std::to_string(states) + " states over 1-3 qubits, max distance " + fmt(worst)};
}

// 2 -------------------------------------------------------------------------
Outcome scheme_correctness() {
  double worst = 0.0;
  int runs = 0;
  bool pass = true;
  for (const auto& id : {"prf-ske", "towp-pke"}) {
    for (int q = 1; q <= 2; ++q) {
      cli::ExperimentConfig c;
      c.scheme = id;
      c.qubits = q;
      c.keys = 20;
      c.seed = 77;
      const auto r = cli::cmd_correctness(c);
      pass = pass && r.pass;
      for (const auto& row : r.json.at("results")) {
        worst = std::max(worst, row.at("choi_distance").get<double>());
        ++runs;
      }
    }
  }
  return {pass && runs == 80 && worst <= 1e-10,
          std::to_string(runs) + " keys over both schemes and 1-2 qubits, max Choi distance " + fmt(worst)};
}

// 3 -------------------------------------------------------------------------
Outcome pad_identity() {
  CounterRng rng(303);
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (int bits : {10, 12}) {
    const int q = 2;
    const TowpPke scheme(q, bits);
    for (int k = 0; k < 2; ++k) {
      const auto kp = scheme.family().generate(rng);
      for (auto d : ToyRsaFamily::domain(kp.index)) {
        const auto tag = TowpPke::tag_for(kp.index, d, q);
        const auto u = TowpPke::decryption_pad(kp.index, kp.trapdoor, tag.to_uint(), q);
        if (!(u == prg_iterated(kp.index, d, 2 * q))) ++mismatches;
        ++checked;
      }
    }
  }
  return {mismatches == 0 && checked > 0,
          std::to_string(checked) + " domain elements at 10 and 12 bit moduli, " + std::to_string(mismatches) +
              " mismatches"};
}

// 4 -------------------------------------------------------------------------
BitString iterate_then_map(const RsaIndex& i, std::uint64_t d, std::size_t t) {
  std::vector<std::uint64_t> xs{d};
  for (std::size_t k = 1; k < t; ++k) xs.push_back(ToyRsaFamily::evaluate(i, xs.back()));
  BitString out;
  for (std::size_t j = 1; j <= t; ++j) out.push_back(ToyRsaFamily::hardcore(i, xs[t - j]));
  return out;
}

// G(k) = G0(k) ‖ G1(k); f_k(x) walks the tree, then takes the output prefix.
BitString ggm_reference(const PrgSpec& g, const BitString& k, const BitString& x, std::size_t out_len) {
  if (x.empty()) {
    if (out_len <= g.seed_len) return k.slice(0, out_len);
    return g(k).slice(0, out_len);
  }
  const auto both = g(k);
  const auto child = x[0] ? both.slice(g.seed_len, g.seed_len) : both.slice(0, g.seed_len);
  return ggm_reference(g, child, x.slice(1, x.size() - 1), out_len);
}

Outcome primitive_oracles() {
  std::size_t prg_checked = 0, prg_bad = 0, prf_checked = 0, prf_bad = 0, frozen = 0, frozen_bad = 0;
  CounterRng rng(404);
  const ToyRsaFamily family(6);
  for (int k = 0; k < 5; ++k) {
    const auto i = family.generate(rng).index;
    for (auto d : ToyRsaFamily::domain(i)) {
      ++prg_checked;
      if (!(prg_iterated(i, d, 12) == iterate_then_map(i, d, 12))) ++prg_bad;
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = default_doubling_prg(n);
    for (std::size_t in_len = 0; in_len <= 6; ++in_len) {
      for (std::size_t out_len : {n, 2 * n}) {
        const auto prf = make_ggm_prf(g, in_len, out_len);
        for (std::uint64_t key = 0; key < (1ULL << n); ++key) {
          for (std::uint64_t x = 0; x < (1ULL << in_len); ++x) {
            const auto kb = BitString::from_uint(key, n);
            const auto xb = BitString::from_uint(x, in_len);
            ++prf_checked;
            if (!(prf(kb, xb) == ggm_reference(g, kb, xb, out_len))) ++prf_bad;
          }
        }
      }
    }
  }
  // Frozen outputs of the independent script in tests/data.
  std::ifstream in(std::string(QENC_TEST_DATA_DIR) + "/ggm_vectors.json");
  if (in.good()) {
    const auto v = nlohmann::json::parse(in);
    for (const auto& entry : v) {
      const auto n = entry["seed_len"].get<std::size_t>();
      const auto in_len = entry["in_len"].get<std::size_t>();
      const auto prf = make_ggm_prf(default_doubling_prg(n), in_len, entry["out_len"].get<std::size_t>());
      for (const auto& [k, row] : entry["prf"].items()) {
        for (std::uint64_t x = 0; x < (1ULL << in_len); ++x) {
          ++frozen;
          if (prf(BitString::from_uint(std::stoull(k), n), BitString::from_uint(x, in_len)).to_string() !=
              row[x].get<std::string>()) {
            ++frozen_bad;
          }
        }
      }
    }
  }
  return {prg_bad == 0 && prf_bad == 0 && frozen > 0 && frozen_bad == 0,
          "PRG " + std::to_string(prg_checked) + " seeds, GGM " + std::to_string(prf_checked) +
              " evaluations, " + std::to_string(frozen) + " frozen vectors; " +
              std::to_string(prg_bad + prf_bad + frozen_bad) + " mismatches"};
}

// 5 -------------------------------------------------------------------------
Outcome towp_inversion() {
  CounterRng rng(505);
  const ToyRsaFamily family(12);
  std::size_t checked = 0, bad = 0;
  for (int k = 0; k < 5; ++k) {
    const auto kp = family.generate(rng);
    for (auto x : ToyRsaFamily::domain(kp.index)) {
      ++checked;
      if (ToyRsaFamily::invert(kp.trapdoor, ToyRsaFamily::evaluate(kp.index, x)) != x) ++bad;
    }
  }
  return {bad == 0 && checked > 0,
          "5 keypairs at a 12-bit modulus, " + std::to_string(checked) + " points, " + std::to_string(bad) +
              " failures"};
}

// 6 -------------------------------------------------------------------------
Outcome broken_schemes() {
  const auto ones = roles::message_generator("ones");
  const auto measure = roles::distinguisher("measure-m");
  auto id = make_scheme("identity", 1);
  const auto ind = run_ind(*id, ones, measure, {}, exact_config());
  const auto prime = run_ind_prime(*id, ones, measure, {}, exact_config());
  auto weak = make_scheme("prf-ske-const", 1);
  const auto cpa = run_ind(*weak, ones, roles::distinguisher("pad-reuse"),
                           options_for(OraclePolicy::cpa(), KeyMode::enumerate), sample_config(1000, 6));
  return {ind.exact && ind.advantage == 1.0 && prime.p == 1.0 && cpa.advantage >= 0.9 && cpa.ci_halfwidth <= 0.05,
          "identity IND " + fmt(ind.advantage) + ", IND' " + fmt(prime.p) + "; constant-PRF CPA " +
              fmt(cpa.advantage) + " +- " + fmt(cpa.ci_halfwidth) + " (1000 trials)"};
}

// 7 -------------------------------------------------------------------------
Outcome ideal_null() {
  struct Target {
    const char* id;
    KeyMode mode;
  };
  const Target targets[] = {{"prf-ske-ideal", KeyMode::enumerate}, {"towp-pke-ideal", KeyMode::fixed}};
  const auto copy = roles::adversary("copy-m");
  const auto sim = roles::simulator("reduction", copy);
  const auto compare = roles::sem_distinguisher("compare-f");
  double worst = 0.0;
  int runs = 0;
  const auto note = [&](double a) {
    worst = std::max(worst, std::abs(a));
    ++runs;
  };
  for (const auto& t : targets) {
    for (int q = 1; q <= 2; ++q) {
      auto s = make_scheme(t.id, q);
      for (const auto& [game, policy] : std::vector<std::pair<std::string, OraclePolicy>>{
               {"ind", OraclePolicy::none()}, {"ind-cpa", OraclePolicy::cpa()}, {"ind-cca1", OraclePolicy::cca1()}}) {
        (void)game;
        const auto o = options_for(policy, t.mode);
        for (const auto* mid : {"ones", "plus", "bell"}) {
          for (const auto* did : {"measure-m", "coin", "constant-1"}) {
            note(run_ind(*s, roles::message_generator(mid), roles::distinguisher(did), o, exact_config()).advantage);
          }
        }
      }
      const auto o = options_for(OraclePolicy::none(), t.mode);
      for (const auto* mid : {"ones", "plus", "bell"}) {
        for (const auto* did : {"measure-m", "coin", "constant-1"}) {
          note(run_ind_prime(*s, roles::message_generator(mid), roles::distinguisher(did), o, exact_config()).p - 0.5);
        }
      }
      for (const auto* mid : {"copy-one", "copy-random", "ghz-copy"}) {
        note(run_sem(*s, roles::message_generator(mid), copy, sim, compare, o, exact_config()).advantage);
      }
      for (const auto* mid : {"copy-one", "copy-random"}) {
        note(run_sem2(*s, roles::message_generator(mid), copy, sim, o, exact_config()).advantage);
      }
      for (const auto* pid : {"measured-copy", "measured-zero"}) {
        note(run_sem3(*s, roles::message_function_pair(pid, q), copy, sim, o, exact_config()).advantage);
      }
    }
  }
  // Oracle adversaries that wait for a repeated tag are reported, not counted.
  auto ideal = make_scheme("prf-ske-ideal", 1);
  const auto collision = run_ind(*ideal, roles::message_generator("ones"), roles::distinguisher("pad-reuse"),
                                 options_for(OraclePolicy::cpa(), KeyMode::enumerate), exact_config());
  return {worst <= 1e-12 && runs > 0,
          std::to_string(runs) + " exact runs over 7 games, max |advantage| " + fmt(worst) +
              "; tag-collision CPA adversary at 1 qubit: " + fmt(collision.advantage)};
}

// 8 -------------------------------------------------------------------------
Outcome reductions() {
  const auto ones = roles::message_generator("ones");
  const auto pad_reuse = roles::distinguisher("pad-reuse");

  // (a)
  const PrfSke weak(2, 2, PrfSke::Pad::constant_zero);
  const auto a = run_cca1_to_prf(weak, ones, pad_reuse, sample_config(1000, 81));
  const bool ok_a = a.prf.advantage >= 0.4;

  // (b)
  bool ok_b = true;
  double b_sem = 0.0;
  const auto copy = roles::adversary("copy-m");
  for (int q = 1; q <= 2; ++q) {
    auto s = make_scheme("prf-ske", q);
    for (const auto* mid : {"copy-random", "copy-one", "ghz-copy"}) {
      const auto r = run_ind_to_sem(*s, roles::message_generator(mid), copy, roles::sem_distinguisher("compare-f"),
                                    {}, sample_config(1000, 82 + static_cast<std::uint64_t>(q)));
      ok_b = ok_b && r.within_bound;
      b_sem = std::max(b_sem, r.sem.advantage);
    }
  }

  // (c)
  double c_err = 0.0;
  for (const auto* sid : {"identity", "qotp", "prf-ske", "prf-ske-const", "prf-ske-ideal"}) {
    auto s = make_scheme(sid, 1);
    const auto o = options_for(OraclePolicy::cpa(), KeyMode::enumerate);
    for (const auto* mid : {"ones", "plus", "bell", "mixed"}) {
      for (const auto* did : {"measure-m", "constant-1", "constant-0", "pad-reuse"}) {
        const auto m = roles::message_generator(mid);
        const auto d = roles::distinguisher(did);
        const auto built = reduction_sem_to_ind(m, d);
        c_err = std::max(c_err, sem_to_ind_identity_check(*s, m, d, roles::simulator("zero", built.adv), o,
                                                          exact_config()).max_error);
        c_err = std::max(c_err, ind_prime_identity_check(*s, m, d, o, exact_config()).max_error);
      }
    }
  }
  const bool ok_c = c_err <= 1e-12;

  // (d)
  const PaddedPair pair{tensor(DensityMatrix::basis(BitString::zeros(1), "A"),
                               DensityMatrix::basis(BitString::zeros(1), "B")),
                        DensityMatrix::basis(BitString::ones(1), "A"), "A"};
  const StateDistinguisher reads_zero{"reads-zero", [](const DensityMatrix& st, RandomSource& coins) {
                                        return measure_computational(st, "A", coins).outcome.all_zero() ? 1 : 0;
                                      }};
  const auto d = run_qotp_to_prg(reads_zero, pair, default_doubling_prg(1), exact_config());
  const bool ok_d = std::abs(d.p_uniform - 0.5) <= 1e-12;

  return {ok_a && ok_b && ok_c && ok_d,
          std::string("(a) PRF advantage ") + fmt(a.prf.advantage) + (ok_a ? "" : " FAIL") +
              "; (b) SEM <= IND + CI " + (ok_b ? "holds" : "FAILS") + ", max SEM " + fmt(b_sem) +
              "; (c) identity error " + fmt(c_err) + "; (d) uniform-pad success " + fmt(d.p_uniform)};
}

// 9 -------------------------------------------------------------------------
std::string run_binary(const std::string& args, int& status) {
  std::string out;
  FILE* p = popen(args.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  status = pclose(p);
  return out;
}

Outcome determinism() {
  std::vector<std::function<cli::Report()>> runs;
  cli::ExperimentConfig sem;
  sem.game = "sem";
  sem.scheme = "towp-pke";
  sem.trials = 300;
  sem.seed = 99;
  cli::ExperimentConfig red;
  red.reduction = "cca1-to-prf";
  red.scheme = "prf-ske-const";
  red.adversary = "pad-reuse";
  red.qubits = 2;
  red.seed = 5;
  cli::ExperimentConfig cor;
  cor.scheme = "towp-pke";
  cor.keys = 4;
  cli::ExperimentConfig mix;
  mix.qubits = 2;
  runs.emplace_back([=] { return cli::cmd_game(sem); });
  runs.emplace_back([=] { return cli::cmd_reduce(red); });
  runs.emplace_back([=] { return cli::cmd_correctness(cor); });
  runs.emplace_back([=] { return cli::cmd_qotp_mix(mix); });
  runs.emplace_back([=] { return cli::cmd_list(mix); });
  int same = 0;
  for (const auto& r : runs) same += r().json.dump() == r().json.dump() ? 1 : 0;

  int binary_same = 0, binary_total = 0;
#ifdef QENC_CLI_PATH
  const std::string exe = QENC_CLI_PATH;
  for (const std::string args : {" game --game ind-cpa --scheme prf-ske --adversary pad-reuse --trials 300 --seed 42",
                                 " reduce --reduction ind-to-sem --scheme prf-ske --trials 200 --seed 8",
                                 " game --game sem3 --scheme towp-pke-ideal --exact --seed 3",
                                 " correctness --scheme prf-ske --keys 3 --seed 4", " qotp-mix --qubits 3"}) {
    int s1 = 0, s2 = 0;
    const auto a = run_binary(exe + args, s1);
    const auto b = run_binary(exe + args, s2);
    ++binary_total;
    if (!a.empty() && a == b && s1 == 0 && s2 == 0) ++binary_same;
  }
#endif
  return {same == static_cast<int>(runs.size()) && binary_same == binary_total && binary_total > 0,
          std::to_string(same) + "/" + std::to_string(runs.size()) + " in-process commands and " +
              std::to_string(binary_same) + "/" + std::to_string(binary_total) +
              " binary invocations byte-identical on repeat"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 = no runtime bound
    Outcome (*run)();
  };
  const Criterion all[] = {
      {1, "one-time pad mixing", 5.0, qotp_mixing},
      {2, "scheme correctness (Choi)", 30.0, scheme_correctness},
      {3, "public-key pad identity", 10.0, pad_identity},
      {4, "primitive oracle equivalence", 10.0, primitive_oracles},
      {5, "trapdoor inversion", 0.0, towp_inversion},
      {6, "broken-scheme detection", 0.0, broken_schemes},
      {7, "ideal pads give zero advantage", 0.0, ideal_null},
      {8, "reduction pipelines", 0.0, reductions},
      {9, "CLI determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_s == 0.0 || secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << o.detail << " ("
         << fmt(secs) << " s" << (c.budget_s > 0 ? ", limit " + fmt(c.budget_s) + " s" : "") << ")";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
