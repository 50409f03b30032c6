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

// qenc: run correctness checks, pad mixing, security games and reductions.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qenc/cli/commands.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void add_common(CLI::App* app, qenc::cli::ExperimentConfig& c) {
  app->add_option("--scheme", c.scheme, "scheme id (see `qenc list`)");
  app->add_option("--n", c.n, "key bits or modulus bits; 0 for the scheme default")->check(CLI::NonNegativeNumber);
  app->add_option("--qubits", c.qubits, "plaintext qubits")->check(CLI::Range(1, 8));
  app->add_option("--seed", c.seed, "64-bit seed");
}

void add_estimation(CLI::App* app, qenc::cli::ExperimentConfig& c) {
  app->add_option("--trials", c.trials, "trials per arm in sampling mode")->check(CLI::PositiveNumber);
  app->add_flag("--exact", c.exact, "enumerate every branch instead of sampling");
}

void add_roles(CLI::App* app, qenc::cli::ExperimentConfig& c) {
  app->add_option("--adversary", c.adversary, "role bundle: measure, pad-reuse, coin, constant");
  app->add_option("--message", c.message, "message generator override");
  app->add_option("--distinguisher", c.distinguisher, "IND distinguisher override");
  app->add_option("--simulator", c.simulator, "SEM simulator override");
  app->add_option("--sem-distinguisher", c.sem_distinguisher, "SEM distinguisher override");
  app->add_option("--pair", c.pair, "SEM3 message/function pair override");
  app->add_option("--oracle", c.oracle, "oracle policy for games without a fixed one: none, cpa, cca1");
  app->add_option("--key-mode", c.key_mode, "enumerate or fixed");
}

void add_expectations(CLI::App* app, qenc::cli::ExperimentConfig& c) {
  app->add_option("--expect-min", c.expect_min, "fail unless the advantage is at least this");
  app->add_option("--expect-max", c.expect_max, "fail unless the advantage is at most this");
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qenc::cli;
  CLI::App app{"Quantum encryption lab: schemes, security games and reductions at toy sizes."};
  app.require_subcommand(1);
  ExperimentConfig config;
  std::string out_path;
  std::string csv_path;
  app.add_option("--out", out_path, "write JSON here instead of stdout");
  app.add_option("--csv", csv_path, "also write the results as CSV");

  std::function<Report(const ExperimentConfig&)> command;
  std::string command_name;
  const auto bind = [&](CLI::App* sub, std::function<Report(const ExperimentConfig&)> fn) {
    sub->callback([&, sub, fn] {
      command = fn;
      command_name = sub->get_name();
    });
    sub->add_option("--out", out_path, "write JSON here instead of stdout");
    sub->add_option("--csv", csv_path, "also write the results as CSV");
  };

  auto* correctness = app.add_subcommand("correctness", "Choi distance of Dec∘Enc from the identity");
  add_common(correctness, config);
  correctness->add_option("--keys", config.keys, "keys to check")->check(CLI::PositiveNumber);
  correctness->add_flag("--corrupt", config.corrupt, "skip the decryption step (must fail)");
  add_expectations(correctness, config);
  bind(correctness, cmd_correctness);

  auto* mix = app.add_subcommand("qotp-mix", "key-averaged one-time pad on a state battery");
  add_common(mix, config);
  mix->add_option("--battery", config.battery, "standard or empty");
  bind(mix, cmd_qotp_mix);

  auto* game = app.add_subcommand("game", "run one security game");
  add_common(game, config);
  add_estimation(game, config);
  add_roles(game, config);
  add_expectations(game, config);
  game->add_option("--game", config.game, "ind, ind-prime, ind-cpa, ind-cca1, sem, sem2, sem3");
  bind(game, cmd_game);

  auto* reduce = app.add_subcommand("reduce", "run a reduction pipeline");
  add_common(reduce, config);
  add_estimation(reduce, config);
  add_roles(reduce, config);
  add_expectations(reduce, config);
  reduce->add_option("--reduction", config.reduction,
                     "ind-to-sem, sem-to-ind, cca1-to-prf, qotp-to-prg, sem3-from-ind-prime");
  reduce->add_option("--prg", config.prg, "generator for qotp-to-prg: doubling or constant");
  bind(reduce, cmd_reduce);

  auto* list = app.add_subcommand("list", "registered schemes, games, roles and reductions");
  bind(list, cmd_list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Report report;
  try {
    report = command(config);
  } catch (const qenc::Error& e) {
    std::cerr << "qenc " << command_name << ": " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string text = report.json.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else if (!write_file(out_path, text)) {
    std::cerr << "qenc: cannot write " << out_path << '\n';
    return kExitUsage;
  }
  if (!csv_path.empty() && !write_file(csv_path, qenc::io::results_csv(report.json.at("results")))) {
    std::cerr << "qenc: cannot write " << csv_path << '\n';
    return kExitUsage;
  }
  return report.pass ? kExitPass : kExitFail;
}
