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

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qenc/errors.hpp"
#include "qenc/schemes/prf_ske.hpp"
#include "qenc/schemes/reference.hpp"
#include "qenc/schemes/scheme.hpp"
#include "qenc/schemes/towp_pke.hpp"

namespace qenc {

struct SchemeInfo {
  std::string id;
  std::string description;
};

inline const std::vector<SchemeInfo>& scheme_catalog() {
  static const std::vector<SchemeInfo> catalog{
      {"prf-ske", "symmetric, GGM PRF pads, tag r"},
      {"prf-ske-const", "symmetric, constant-zero PRF (broken)"},
      {"prf-ske-ideal", "symmetric, lazily sampled random-function pads"},
      {"towp-pke", "public key, toy RSA trapdoor permutation with hard-core PRG"},
      {"towp-pke-ideal", "public key, uniform pads in place of G(d)"},
      {"qotp", "symmetric one-time pad with a uniform Pauli key"},
      {"identity", "no encryption (broken)"},
  };
  return catalog;
}

/// Builds a registered scheme. `security` is the PRF key length for the
/// symmetric PRF schemes and the modulus size for the public ones; zero
/// picks the default (q key bits, or max(6, 2q+2) modulus bits).
inline std::unique_ptr<EncryptionScheme> make_scheme(const std::string& id, int qubits,
                                                     int security = 0) {
  if (id == "prf-ske" || id == "prf-ske-const" || id == "prf-ske-ideal") {
    const auto pad = id == "prf-ske"         ? PrfSke::Pad::ggm
                     : id == "prf-ske-const" ? PrfSke::Pad::constant_zero
                                             : PrfSke::Pad::random_function;
    return std::make_unique<PrfSke>(qubits, security > 0 ? security : qubits, pad);
  }
  if (id == "towp-pke") return std::make_unique<TowpPke>(qubits, security, false);
  if (id == "towp-pke-ideal") return std::make_unique<TowpPke>(qubits, security, true);
  if (id == "qotp") return std::make_unique<QotpScheme>(qubits);
  if (id == "identity") return std::make_unique<IdentityScheme>(qubits);
  throw UnknownIdentifier("unknown scheme '" + id + "'");
}

}  // namespace qenc
