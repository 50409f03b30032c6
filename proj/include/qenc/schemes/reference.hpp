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

#include "qenc/bits.hpp"
#include "qenc/quantum/pauli.hpp"
#include "qenc/schemes/scheme.hpp"

namespace qenc {

/// Quantum one-time pad: the key is a uniform 2q-bit Pauli key. Secure for
/// a single encryption; reusing the key under an encryption oracle is not.
class QotpScheme final : public EncryptionScheme {
 public:
  using EncryptionScheme::keygen;

  explicit QotpScheme(int qubits) : qubits_(qubits) {
    if (qubits < 1) throw DomainError("plaintext needs at least one qubit");
  }

  std::string id() const override { return "qotp"; }
  Flavor flavor() const override { return Flavor::symmetric; }
  int plaintext_qubits() const override { return qubits_; }
  int security_parameter() const override { return 2 * qubits_; }

  std::unique_ptr<KeyedScheme> keygen(RandomSource& key_coins, RandomSource&) const override {
    return std::make_unique<Keyed>(key_coins.bits(static_cast<std::size_t>(2 * qubits_)), qubits_);
  }

 private:
  class Keyed final : public KeyedScheme {
   public:
    Keyed(PauliKey key, int qubits) : key_(std::move(key)), qubits_(qubits) {}
    Ciphertext encrypt(const DensityMatrix& state, const std::string& target, RandomSource&) override {
      check_plaintext(state, target, qubits_);
      return Ciphertext{BitString(), apply_pauli(key_, state, target), target};
    }
    DensityMatrix decrypt(const Ciphertext& ct) override {
      check_plaintext(ct.payload, ct.target, qubits_);
      return apply_pauli(key_, ct.payload, ct.target);
    }

   private:
    PauliKey key_;
    int qubits_;
  };

  int qubits_;
};

/// Leaves the plaintext untouched. Correct and completely insecure.
class IdentityScheme final : public EncryptionScheme {
 public:
  using EncryptionScheme::keygen;

  explicit IdentityScheme(int qubits) : qubits_(qubits) {
    if (qubits < 1) throw DomainError("plaintext needs at least one qubit");
  }

  std::string id() const override { return "identity"; }
  Flavor flavor() const override { return Flavor::symmetric; }
  int plaintext_qubits() const override { return qubits_; }
  int security_parameter() const override { return 0; }

  std::unique_ptr<KeyedScheme> keygen(RandomSource&, RandomSource&) const override {
    return std::make_unique<Keyed>(qubits_);
  }

 private:
  class Keyed final : public KeyedScheme {
   public:
    explicit Keyed(int qubits) : qubits_(qubits) {}
    Ciphertext encrypt(const DensityMatrix& state, const std::string& target, RandomSource&) override {
      check_plaintext(state, target, qubits_);
      return Ciphertext{BitString(), state, target};
    }
    DensityMatrix decrypt(const Ciphertext& ct) override { return ct.payload; }

   private:
    int qubits_;
  };

  int qubits_;
};

}  // namespace qenc
