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

#include "qenc/cli/commands.hpp"
#include "qenc/io/serialize.hpp"
#include "support.hpp"

using namespace qenc;
using qenc::io::Json;
using Catch::Matchers::WithinAbs;

TEST_CASE("states and ciphertexts survive a JSON round trip", "[io]") {
  CounterRng rng(17);
  const auto s = tensor(random_state(1, rng, "M"), random_state(1, rng, "E"));
  const auto back = io::state_from_json(Json::parse(io::to_json(s).dump()));
  CHECK(back.layout() == s.layout());
  CHECK(qenc::testing::max_abs_diff(back.matrix(), s.matrix()) == 0.0);

  const Ciphertext ct{BitString::from_string("0110"), s, "M"};
  const auto j = io::to_json(ct);
  CHECK(j.at("tag") == "0110");
  CHECK(j.at("payload").at("matrix").at(0).at(0).size() == 2);
  const auto ct2 = io::ciphertext_from_json(j);
  CHECK(ct2.tag == ct.tag);
  CHECK(ct2.target == "M");

  Json bad = io::to_json(s);
  bad["matrix"][0].erase(0);
  CHECK_THROWS_AS(io::state_from_json(bad), DimensionMismatch);
}

TEST_CASE("matrices serialize row-major as [re, im] pairs", "[io]") {
  Matrix m(2, 2);
  m << Complex(0.5, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(0.5, 0);
  const auto s = DensityMatrix::from_matrix(m, Layout{{"A", 1}});
  const auto j = io::to_json(s).at("matrix");
  CHECK(j.dump() == "[[[0.5,0.0],[0.0,-0.5]],[[0.0,0.5],[0.5,0.0]]]");
}

TEST_CASE("results flatten to CSV", "[io]") {
  Json rows = Json::array();
  rows.push_back(Json{{"game", "ind"}, {"roles", {{"message", "ones"}}}, {"p", 0.5}, {"list", {1, 2}}});
  rows.push_back(Json{{"game", "a,b"}, {"p", 1}, {"extra", true}});
  CHECK(io::results_csv(rows) == "game,roles.message,p,extra\nind,ones,0.5,\n\"a,b\",,1,true\n");
  CHECK(io::results_csv(Json::array()) == "\n");
}

namespace {

cli::ExperimentConfig base() {
  cli::ExperimentConfig c;
  c.seed = 3;
  return c;
}

}  // namespace

TEST_CASE("every report has the fixed envelope", "[cli]") {
  auto c = base();
  for (const auto& r : {cli::cmd_list(c), cli::cmd_qotp_mix(c), cli::cmd_game(c)}) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : r.json.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schema_version", "command", "config", "results", "pass"});
    CHECK(r.json.at("schema_version") == io::kSchemaVersion);
    CHECK(r.json.at("results").is_array());
  }
}

TEST_CASE("qotp-mix command", "[cli]") {
  auto c = base();
  c.qubits = 3;
  const auto r = cli::cmd_qotp_mix(c);
  CHECK(r.pass);
  int averaged = 0;
  for (const auto& row : r.json.at("results")) {
    if (row.at("kind") == "average") {
      ++averaged;
      CHECK(row.at("distance").get<double>() <= 1e-10);
    } else {
      CHECK_THAT(row.at("distance").get<double>(), WithinAbs(0.5, 1e-12));
    }
  }
  CHECK(averaged >= 20);

  c.battery = "empty";
  const auto e = cli::cmd_qotp_mix(c);
  CHECK(e.pass);
  CHECK(e.json.at("results").empty());

  c.battery = "standard";
  c.qubits = 4;
  CHECK_THROWS_AS(cli::cmd_qotp_mix(c), DimensionMismatch);
}

TEST_CASE("correctness command", "[cli]") {
  auto c = base();
  c.qubits = 2;
  c.keys = 5;
  for (const auto& id : {"prf-ske", "towp-pke"}) {
    c.scheme = id;
    const auto r = cli::cmd_correctness(c);
    CHECK(r.pass);
    for (const auto& row : r.json.at("results")) CHECK(row.at("choi_distance").get<double>() <= 1e-10);
  }
  c.qubits = 1;
  c.scheme = "prf-ske";
  c.corrupt = true;
  const auto bad = cli::cmd_correctness(c);
  CHECK_FALSE(bad.pass);
  for (const auto& row : bad.json.at("results")) CHECK(row.at("choi_distance").get<double>() >= 0.5);

  c.scheme = "nope";
  CHECK_THROWS_AS(cli::cmd_correctness(c), UnknownIdentifier);
}

TEST_CASE("game command", "[cli]") {
  auto c = base();
  c.scheme = "identity";
  c.exact = true;
  const auto r = cli::cmd_game(c);
  const auto& row = r.json.at("results").at(0);
  CHECK(row.at("advantage") == 1.0);
  CHECK(row.at("mode") == "exact");
  CHECK(row.at("roles").at("distinguisher") == "measure-m");

  c.game = "ind-prime";
  CHECK(cli::cmd_game(c).json.at("results").at(0).at("p") == 1.0);

  for (const auto& g : cli::game_ids()) {
    c.game = g;
    c.scheme = "prf-ske-ideal";
    c.adversary = g == "ind-cpa" || g == "ind-cca1" ? "pad-reuse" : "measure";
    INFO(g);
    CHECK_NOTHROW(cli::cmd_game(c));
  }

  c.game = "nope";
  CHECK_THROWS_AS(cli::cmd_game(c), UnknownIdentifier);
  c.game = "ind-cpa";
  c.oracle = "none";
  CHECK_THROWS_AS(cli::cmd_game(c), ModeError);
  c.oracle.clear();
  c.key_mode = "sometimes";
  CHECK_THROWS_AS(cli::cmd_game(c), UnknownIdentifier);
  c.key_mode.clear();
  c.qubits = 4;
  CHECK_THROWS_AS(cli::cmd_game(c), DomainError);
}

TEST_CASE("reduce command", "[cli]") {
  auto c = base();
  c.reduction = "cca1-to-prf";
  c.scheme = "prf-ske-const";
  c.adversary = "pad-reuse";
  c.qubits = 2;  // at one qubit pad collisions cap the advantage at 3/8
  const auto cca = cli::cmd_reduce(c);
  CHECK(cca.json.at("results").at(1).at("advantage").get<double>() >= 0.4);

  c.scheme = "towp-pke";
  CHECK_THROWS_AS(cli::cmd_reduce(c), ModeError);

  c.reduction = "sem-to-ind";
  c.qubits = 1;
  c.scheme = "prf-ske";
  c.adversary = "measure";
  const auto eps = cli::cmd_reduce(c);
  CHECK(eps.pass);
  CHECK(eps.json.at("results").at(0).at("max_error").get<double>() <= 1e-12);

  c.reduction = "ind-to-sem";
  CHECK(cli::cmd_reduce(c).pass);

  c.reduction = "qotp-to-prg";
  c.exact = true;
  const auto prg = cli::cmd_reduce(c);
  CHECK(prg.pass);
  CHECK(prg.json.at("results").at(0).at("p_uniform") == 0.5);
  c.prg = "constant";
  CHECK(cli::cmd_reduce(c).json.at("results").at(0).at("advantage").get<double>() >= 0.4);

  c.reduction = "sem3-from-ind-prime";
  c.scheme = "identity";
  CHECK(cli::cmd_reduce(c).pass);

  c.reduction = "nope";
  CHECK_THROWS_AS(cli::cmd_reduce(c), UnknownIdentifier);
}

TEST_CASE("commands are deterministic for a seed", "[cli]") {
  auto c = base();
  c.game = "sem";
  c.scheme = "towp-pke";
  c.trials = 200;
  CHECK(cli::cmd_game(c).json.dump() == cli::cmd_game(c).json.dump());
  c.seed = 4;
  const auto other = cli::cmd_game(c).json.dump();
  c.seed = 3;
  CHECK(other != cli::cmd_game(c).json.dump());
}
