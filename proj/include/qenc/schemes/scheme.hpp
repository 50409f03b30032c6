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
#include <optional>
#include <string>
#include <utility>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/random.hpp"

namespace qenc {

enum class Flavor { symmetric, public_key };

inline std::string to_string(Flavor f) { return f == Flavor::symmetric ? "symmetric" : "public"; }

/// Classical tag plus the encrypted state. `payload` is the full joint state
/// handed to encrypt, with register `target` encrypted in place and any side
/// registers left untouched.
struct Ciphertext {
  BitString tag;
  DensityMatrix payload;
  std::string target;
};

/// |tag⟩⟨tag|_T ⊗ payload, for roles that want the tag as a register.
inline DensityMatrix embed_tag(const Ciphertext& ct, const std::string& tag_register = "T") {
  if (ct.tag.empty()) return ct.payload;
  return tensor(DensityMatrix::basis(ct.tag, tag_register), ct.payload);
}

inline void check_plaintext(const DensityMatrix& state, const std::string& target, int qubits) {
  if (state.reg(target).qubits != qubits) {
    throw DimensionMismatch("register '" + target + "' has " +
                            std::to_string(state.reg(target).qubits) + " qubits, scheme expects " +
                            std::to_string(qubits));
  }
}

/// A scheme after key generation: holds the key material and any lazily
/// sampled oracle state. Not thread-safe; one instance per game run.
class KeyedScheme {
 public:
  virtual ~KeyedScheme() = default;

  virtual Ciphertext encrypt(const DensityMatrix& state, const std::string& target,
                             RandomSource& coins) = 0;
  virtual DensityMatrix decrypt(const Ciphertext& ct) = 0;

  /// Encoded public key, empty for symmetric schemes.
  virtual std::optional<BitString> public_key() const { return std::nullopt; }
};

class EncryptionScheme {
 public:
  virtual ~EncryptionScheme() = default;

  virtual std::string id() const = 0;
  virtual Flavor flavor() const = 0;
  virtual int plaintext_qubits() const = 0;
  /// Key length for symmetric schemes, modulus size for public ones.
  virtual int security_parameter() const = 0;

  /// Draws key material from `key_coins`. Ideal variants that sample their
  /// oracles lazily draw those from `session`, which must outlive the result.
  virtual std::unique_ptr<KeyedScheme> keygen(RandomSource& key_coins,
                                              RandomSource& session) const = 0;

  std::unique_ptr<KeyedScheme> keygen(RandomSource& coins) const { return keygen(coins, coins); }

  /// Encryption from the encoded public key alone.
  virtual Ciphertext encrypt_public(const BitString& /*pk*/, const DensityMatrix& /*state*/,
                                    const std::string& /*target*/, RandomSource& /*coins*/) const {
    throw ModeError("scheme '" + id() + "' has no public encryption");
  }
};

}  // namespace qenc
