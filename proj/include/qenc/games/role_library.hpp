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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"
#include "qenc/games/reductions.hpp"
#include "qenc/games/roles.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/quantum/distance.hpp"
#include "qenc/quantum/measure.hpp"

namespace qenc::roles {

namespace detail {

inline std::size_t width(const GameContext& ctx) { return static_cast<std::size_t>(ctx.message_qubits); }

inline DensityMatrix uniform_pure(int qubits, const std::string& name) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << qubits);
  return DensityMatrix::pure(Vector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d))),
                             Layout{{name, qubits}});
}

// OUT = |value⟩ next to whatever the payload carried besides M.
inline DensityMatrix out_with_rest(const BitString& value, const DensityMatrix& rest) {
  return tensor(DensityMatrix::basis(value, kRegOut), rest);
}

inline DensityMatrix payload_rest(const Ciphertext& ct) { return partial_trace(ct.payload, ct.target); }

inline BitString measure_m(const Ciphertext& ct, RandomSource& coins) {
  return measure_computational(ct.payload, ct.target, coins).outcome;
}

}  // namespace detail

// --- message generators ------------------------------------------------------

inline std::vector<MessageGenerator> message_generators() {
  using detail::width;
  return {
      {"zero", [](GameContext& c) {
         return MessageOutput{DensityMatrix::basis(BitString::zeros(width(c)), kRegM), std::nullopt};
       }},
      {"ones", [](GameContext& c) {
         return MessageOutput{DensityMatrix::basis(BitString::ones(width(c)), kRegM), std::nullopt};
       }},
      {"plus", [](GameContext& c) {
         return MessageOutput{detail::uniform_pure(c.message_qubits, kRegM), std::nullopt};
       }},
      {"bell", [](GameContext& c) {
         return MessageOutput{max_entangled(c.message_qubits, kRegM, kRegE), std::nullopt};
       }},
      {"mixed", [](GameContext& c) {
         return MessageOutput{DensityMatrix::maximally_mixed(c.message_qubits, kRegM), std::nullopt};
       }},
      {"copy-one", [](GameContext& c) {
         const auto x = BitString::ones(width(c));
         return MessageOutput{tensor(DensityMatrix::basis(x, kRegM), DensityMatrix::basis(x, kRegF)),
                              std::nullopt};
       }},
      {"copy-random", [](GameContext& c) {
         const auto x = c.coins.bits(width(c));
         return MessageOutput{tensor(DensityMatrix::basis(x, kRegM), DensityMatrix::basis(x, kRegF)), x};
       }},
      {"ghz-copy", [](GameContext& c) {
         // Σ_x |x⟩_M |x⟩_F; F is entangled with M and not classical.
         return MessageOutput{max_entangled(c.message_qubits, kRegM, kRegF), std::nullopt};
       }},
  };
}

/// measured-copy: x from measuring |+^q⟩, M = |x⟩, f(x) = x.
inline std::vector<MessageFunctionPair> message_function_pairs(int qubits) {
  MessageGenerator gen{"measured-copy", [](GameContext& c) {
                         const auto plus = detail::uniform_pure(c.message_qubits, kRegM);
                         auto m = measure_computational(plus, kRegM, c.coins);
                         return MessageOutput{std::move(m.post_state), std::move(m.outcome)};
                       }};
  MessageFunctionPair copy{"measured-copy", gen,
                           [](const std::optional<BitString>&, const BitString& x) { return x; },
                           static_cast<std::size_t>(qubits)};
  MessageFunctionPair zero{"measured-zero", gen,
                           [](const std::optional<BitString>&, const BitString& x) {
                             return BitString::zeros(x.size());
                           },
                           static_cast<std::size_t>(qubits)};
  return {copy, zero};
}

// --- IND distinguishers --------------------------------------------------------

inline std::vector<Distinguisher> distinguishers() {
  return {
      {"measure-m", [](const Ciphertext& ct, GameContext& c) {
         return detail::measure_m(ct, c.coins).all_zero() ? 0 : 1;
       }},
      {"constant-1", [](const Ciphertext&, GameContext&) { return 1; }},
      {"constant-0", [](const Ciphertext&, GameContext&) { return 0; }},
      {"coin", [](const Ciphertext&, GameContext& c) { return c.coins.bit(); }},
      // Encrypts |0^q⟩ to learn a pad a′, then checks whether the challenge
      // decodes to a nonzero message under the same pad.
      {"pad-reuse", [](const Ciphertext& ct, GameContext& c) {
         const auto probe = c.oracle.encrypt(
             DensityMatrix::basis(BitString::zeros(detail::width(c)), kRegM), kRegM);
         const auto a = detail::measure_m(probe, c.coins);
         const auto z = detail::measure_m(ct, c.coins);
         return (z ^ a).all_zero() ? 0 : 1;
       }},
  };
}

// --- SEM adversaries and simulators -------------------------------------------

inline std::vector<Adversary> adversaries() {
  return {
      {"copy-m", [](const Ciphertext& ct, GameContext& c) {
         auto m = measure_and_discard(ct.payload, ct.target, c.coins);
         return detail::out_with_rest(m.outcome, m.post_state);
       }},
      {"constant", [](const Ciphertext& ct, GameContext& c) {
         return detail::out_with_rest(BitString::zeros(detail::width(c)), detail::payload_rest(ct));
       }},
      {"coin", [](const Ciphertext& ct, GameContext& c) {
         return detail::out_with_rest(c.coins.bits(detail::width(c)), detail::payload_rest(ct));
       }},
  };
}

/// Stand-alone simulators. The reduction simulator depends on the adversary
/// and is built with reduction_ind_to_sem.
inline std::vector<Simulator> simulators() {
  return {
      {"zero", [](const DensityMatrix& rest, GameContext& c) {
         return detail::out_with_rest(BitString::zeros(detail::width(c)), rest);
       }},
      {"coin", [](const DensityMatrix& rest, GameContext& c) {
         return detail::out_with_rest(c.coins.bits(detail::width(c)), rest);
       }},
  };
}

inline std::vector<SemDistinguisher> sem_distinguishers() {
  return {
      compare_f_distinguisher(),
      {"constant-1", [](const DensityMatrix&, RandomSource&) { return 1; }},
  };
}

// --- lookup --------------------------------------------------------------------

template <class T>
T find_role(const std::vector<T>& all, const std::string& id, const std::string& kind) {
  for (const auto& r : all) {
    if (r.id == id) return r;
  }
  throw UnknownIdentifier("unknown " + kind + " '" + id + "'");
}

template <class T>
std::vector<std::string> role_ids(const std::vector<T>& all) {
  std::vector<std::string> ids;
  for (const auto& r : all) ids.push_back(r.id);
  return ids;
}

inline MessageGenerator message_generator(const std::string& id) {
  return find_role(message_generators(), id, "message generator");
}
inline Distinguisher distinguisher(const std::string& id) {
  return find_role(distinguishers(), id, "distinguisher");
}
inline Adversary adversary(const std::string& id) { return find_role(adversaries(), id, "adversary"); }
inline SemDistinguisher sem_distinguisher(const std::string& id) {
  return find_role(sem_distinguishers(), id, "SEM distinguisher");
}
inline MessageFunctionPair message_function_pair(const std::string& id, int qubits) {
  return find_role(message_function_pairs(qubits), id, "message/function pair");
}

/// Simulator by id; "reduction" wraps `adv`.
inline Simulator simulator(const std::string& id, const Adversary& adv) {
  if (id == "reduction") return reduction_ind_to_sem(adv);
  return find_role(simulators(), id, "simulator");
}

inline std::vector<std::string> simulator_ids() {
  auto ids = role_ids(simulators());
  ids.insert(ids.begin(), "reduction");
  return ids;
}

// --- bundles -------------------------------------------------------------------

/// Default roles for every game, selected by one name on the command line.
struct Bundle {
  std::string id;
  std::string description;
  std::string message;            // IND family
  std::string distinguisher;
  std::string sem_message;        // SEM and SEM2
  std::string adversary;
  std::string simulator;
  std::string sem_distinguisher;
  std::string pair;               // SEM3
};

inline std::vector<Bundle> bundles() {
  return {
      {"measure", "measure the challenge register; copy it for SEM games", "ones", "measure-m",
       "copy-random", "copy-m", "reduction", "compare-f", "measured-copy"},
      {"pad-reuse", "learn a pad from the encryption oracle and reuse it", "ones", "pad-reuse",
       "copy-random", "copy-m", "reduction", "compare-f", "measured-copy"},
      {"coin", "fair coin guesses", "ones", "coin", "copy-random", "coin", "coin", "compare-f",
       "measured-copy"},
      {"constant", "ignore the ciphertext", "ones", "constant-1", "copy-random", "constant", "zero",
       "compare-f", "measured-copy"},
  };
}

inline Bundle bundle(const std::string& id) { return find_role(bundles(), id, "adversary bundle"); }

}  // namespace qenc::roles
