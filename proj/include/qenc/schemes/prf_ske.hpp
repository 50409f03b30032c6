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
#include <string>
#include <utility>

#include "qenc/bits.hpp"
#include "qenc/classical/prf.hpp"
#include "qenc/classical/prg.hpp"
#include "qenc/errors.hpp"
#include "qenc/quantum/pauli.hpp"
#include "qenc/schemes/scheme.hpp"

namespace qenc {

/// The PRF scheme under a fixed pad function φ: Enc draws r ∈ {0,1}^{2q} and
/// outputs (r, P_{φ(r)} ρ P_{φ(r)}); Dec reads r and undoes the pad.
class PadFunctionKeyed final : public KeyedScheme {
 public:
  PadFunctionKeyed(FunctionOracle pad, int qubits) : pad_(std::move(pad)), qubits_(qubits) {}

  Ciphertext encrypt(const DensityMatrix& state, const std::string& target,
                     RandomSource& coins) override {
    check_plaintext(state, target, qubits_);
    BitString r = coins.bits(static_cast<std::size_t>(2 * qubits_));
    auto payload = apply_pauli(pad_(r), state, target);
    return Ciphertext{std::move(r), std::move(payload), target};
  }

  DensityMatrix decrypt(const Ciphertext& ct) override {
    if (ct.tag.size() != static_cast<std::size_t>(2 * qubits_)) {
      throw InvalidCiphertext("tag must have " + std::to_string(2 * qubits_) + " bits");
    }
    check_plaintext(ct.payload, ct.target, qubits_);
    return apply_pauli(pad_(ct.tag), ct.payload, ct.target);
  }

 private:
  FunctionOracle pad_;
  int qubits_;
};

/// Symmetric scheme from a PRF f: {0,1}^n × {0,1}^{2q} → {0,1}^{2q}.
///
/// Three pad sources are available: the GGM construction, the constant-zero
/// function (broken), and a lazily sampled random function (ideal).
class PrfSke final : public EncryptionScheme {
 public:
  using EncryptionScheme::keygen;

  enum class Pad { ggm, constant_zero, random_function };

  PrfSke(int qubits, int key_bits, Pad pad = Pad::ggm)
      : qubits_(qubits), key_bits_(key_bits), pad_(pad) {
    if (qubits < 1) throw DomainError("plaintext needs at least one qubit");
    if (key_bits < qubits || static_cast<std::size_t>(key_bits) > kMaxDoublingSeed) {
      throw DomainError("key length must be between the plaintext size and 12 bits");
    }
    const auto q2 = static_cast<std::size_t>(2 * qubits);
    const auto n = static_cast<std::size_t>(key_bits);
    prf_ = pad == Pad::constant_zero ? constant_prf(n, q2, q2)
                                     : make_ggm_prf(default_doubling_prg(n), q2, q2);
  }

  std::string id() const override {
    switch (pad_) {
      case Pad::ggm: return "prf-ske";
      case Pad::constant_zero: return "prf-ske-const";
      case Pad::random_function: return "prf-ske-ideal";
    }
    return "prf-ske";
  }
  Flavor flavor() const override { return Flavor::symmetric; }
  int plaintext_qubits() const override { return qubits_; }
  int security_parameter() const override { return key_bits_; }
  const PrfSpec& prf() const { return prf_; }

  std::unique_ptr<KeyedScheme> keygen(RandomSource& key_coins,
                                      RandomSource& session) const override {
    if (pad_ == Pad::random_function) {
      auto g = std::make_shared<RandomFunctionOracle>(2 * qubits_, 2 * qubits_, session);
      return with_pad([g](const BitString& r) { return (*g)(r); });
    }
    BitString k = key_coins.bits(static_cast<std::size_t>(key_bits_));
    return with_pad([prf = prf_, k = std::move(k)](const BitString& r) { return prf(k, r); });
  }

  /// Keyed instance for an arbitrary pad function, e.g. a PRF oracle.
  std::unique_ptr<KeyedScheme> with_pad(FunctionOracle pad) const {
    return std::make_unique<PadFunctionKeyed>(std::move(pad), qubits_);
  }

 private:
  int qubits_;
  int key_bits_;
  Pad pad_;
  PrfSpec prf_;
};

}  // namespace qenc
