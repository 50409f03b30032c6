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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"
#include "qenc/estimate.hpp"
#include "qenc/games/oracles.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/random.hpp"
#include "qenc/schemes/scheme.hpp"

namespace qenc {

/// Register names used by every game.
inline const std::string kRegM = "M";
inline const std::string kRegE = "E";
inline const std::string kRegF = "F";
inline const std::string kRegOut = "OUT";

/// What a role sees besides its main input. `pk` is set in public-key mode
/// only; symmetric mode hands out a blank input.
struct GameContext {
  RandomSource& coins;
  std::optional<BitString> pk;
  int message_qubits;
  OracleHandle& oracle;
  const EncryptionScheme& scheme;
};

/// A role implementation with a registry name.
template <class Fn>
struct Named {
  std::string id;
  Fn fn;
};

struct MessageOutput {
  DensityMatrix state;                   // registers M[, E][, F]
  std::optional<BitString> transcript;   // measurement results, for SEM3
};

using MessageGenerator = Named<std::function<MessageOutput(GameContext&)>>;
/// Guesses a bit from a ciphertext whose payload carries M and E.
using Distinguisher = Named<std::function<int(const Ciphertext&, GameContext&)>>;
/// Maps a ciphertext to a state containing OUT (and F when F is quantum).
using Adversary = Named<std::function<DensityMatrix(const Ciphertext&, GameContext&)>>;
/// Maps the side registers (E, and F when quantum) to a state containing OUT.
using Simulator = Named<std::function<DensityMatrix(const DensityMatrix&, GameContext&)>>;
/// Outputs a bit from a bare state, e.g. OUT together with F.
using StateDistinguisher = Named<std::function<int(const DensityMatrix&, RandomSource&)>>;
using SemDistinguisher = StateDistinguisher;

/// SEM3 generator together with the classical function f_pk it is paired
/// with; f reads exactly input_len transcript bits.
struct MessageFunctionPair {
  std::string id;
  MessageGenerator gen;
  std::function<BitString(const std::optional<BitString>& pk, const BitString& x)> f;
  std::size_t input_len = 0;
};

enum class KeyMode {
  /// Every trial draws its own key; exact mode enumerates the key space.
  enumerate,
  /// Every trial uses one key derived from the config seed; results are
  /// conditioned on that key.
  fixed,
};

inline std::string to_string(KeyMode m) { return m == KeyMode::enumerate ? "enumerate" : "fixed"; }

struct GameOptions {
  OraclePolicy policy = OraclePolicy::none();
  KeyMode key_mode = KeyMode::enumerate;
  std::size_t budget = kDefaultOracleBudget;
};

namespace detail {

inline constexpr std::uint64_t kFixedKeyStream = 0x4B4559;

// Per-trial key material and the two oracle handles.
struct Session {
  std::unique_ptr<KeyedScheme> keyed;
  std::optional<BitString> pk;
  OracleHandle pre;
  OracleHandle post;

  Session(const EncryptionScheme& scheme, const GameOptions& options, std::uint64_t seed,
          RandomSource& coins)
      : keyed(make_key(scheme, options, seed, coins)),
        pk(scheme.flavor() == Flavor::public_key ? keyed->public_key() : std::nullopt),
        pre(keyed.get(), options.policy.pre(), coins, options.budget),
        post(keyed.get(), options.policy.post(), coins, options.budget) {}

  static std::unique_ptr<KeyedScheme> make_key(const EncryptionScheme& scheme,
                                               const GameOptions& options, std::uint64_t seed,
                                               RandomSource& coins) {
    if (options.key_mode == KeyMode::enumerate) return scheme.keygen(coins);
    CounterRng key_coins = CounterRng(seed).split(kFixedKeyStream);
    return scheme.keygen(key_coins, coins);
  }
};

// Checks the generator's layout and brings it to M, E[, F] order, adding a
// one-qubit |0⟩ environment when the generator has none.
inline DensityMatrix normalize_message(const DensityMatrix& state, int qubits, bool keep_f) {
  for (const auto& r : state.layout()) {
    if (r.name != kRegM && r.name != kRegE && r.name != kRegF) {
      throw ModeError("message generator emitted unexpected register '" + r.name + "'");
    }
  }
  if (!state.has(kRegM)) throw ModeError("message generator emitted no M register");
  if (state.reg(kRegM).qubits != qubits) {
    throw DimensionMismatch("M has " + std::to_string(state.reg(kRegM).qubits) +
                            " qubits, scheme expects " + std::to_string(qubits));
  }
  DensityMatrix out = state;
  if (!keep_f && out.has(kRegF)) out = partial_trace(out, kRegF);
  if (!out.has(kRegE)) out = tensor(out, DensityMatrix::basis(BitString::zeros(1), kRegE));
  std::vector<std::string> order{kRegM, kRegE};
  if (out.has(kRegF)) order.push_back(kRegF);
  return permute_registers(out, order);
}

inline bool is_one(int bit) { return bit == 1; }

}  // namespace detail

}  // namespace qenc
