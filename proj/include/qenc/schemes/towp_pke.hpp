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

#include <algorithm>
#include <memory>
#include <string>
#include <utility>

#include "qenc/bits.hpp"
#include "qenc/classical/prf.hpp"
#include "qenc/classical/prg.hpp"
#include "qenc/classical/towp.hpp"
#include "qenc/errors.hpp"
#include "qenc/quantum/pauli.hpp"
#include "qenc/schemes/scheme.hpp"

namespace qenc {

/// Public-key scheme over the toy RSA family: Enc samples d ∈ D_i and outputs
/// (f_i^{2q}(d), P_r ρ P_r) with r = prg_iterated(i, d, 2q). Dec recovers
/// u_j = b(I^j(s)) from the tag s and the trapdoor.
///
/// The ideal variant replaces G(d) with R(d) for a lazily sampled uniform
/// function R shared by Enc and Dec of one keyed instance.
class TowpPke final : public EncryptionScheme {
 public:
  using EncryptionScheme::keygen;

  TowpPke(int qubits, int modulus_bits = 0, bool ideal = false)
      : qubits_(qubits),
        family_(modulus_bits > 0 ? modulus_bits : default_modulus_bits(qubits)),
        ideal_(ideal) {
    if (qubits < 1) throw DomainError("plaintext needs at least one qubit");
  }

  static int default_modulus_bits(int qubits) {
    return std::max(ToyRsaFamily::kMinBits, 2 * qubits + 2);
  }

  std::string id() const override { return ideal_ ? "towp-pke-ideal" : "towp-pke"; }
  Flavor flavor() const override { return Flavor::public_key; }
  int plaintext_qubits() const override { return qubits_; }
  int security_parameter() const override { return family_.modulus_bits(); }
  const ToyRsaFamily& family() const { return family_; }

  std::unique_ptr<KeyedScheme> keygen(RandomSource& key_coins,
                                      RandomSource& session) const override {
    return keyed(family_.generate(key_coins), session);
  }

  /// Keyed instance for an explicit keypair.
  std::unique_ptr<KeyedScheme> keyed(RsaKeypair kp, RandomSource& session) const {
    std::shared_ptr<RandomFunctionOracle> pad;
    if (ideal_) {
      pad = std::make_shared<RandomFunctionOracle>(family_.modulus_bits(), 2 * qubits_, session);
    }
    return std::make_unique<Keyed>(kp, qubits_, std::move(pad));
  }

  Ciphertext encrypt_public(const BitString& pk, const DensityMatrix& state,
                            const std::string& target, RandomSource& coins) const override {
    const RsaIndex index = RsaIndex::decode(pk);
    if (index.modulus_bits != family_.modulus_bits()) {
      throw MalformedKey("public key has the wrong modulus size");
    }
    check_plaintext(state, target, qubits_);
    const std::uint64_t d = ToyRsaFamily::sample(index, coins);
    // Without the keyed instance's R, the ideal pad is a fresh uniform string.
    const BitString r = ideal_ ? coins.bits(static_cast<std::size_t>(2 * qubits_))
                               : prg_iterated(index, d, static_cast<std::size_t>(2 * qubits_));
    return Ciphertext{tag_for(index, d, qubits_), apply_pauli(r, state, target), target};
  }

  /// s = f_i^{2q}(d), written with the modulus width.
  static BitString tag_for(const RsaIndex& index, std::uint64_t d, int qubits) {
    return BitString::from_uint(ToyRsaFamily::iterate(index, d, static_cast<std::size_t>(2 * qubits)),
                                static_cast<std::size_t>(index.modulus_bits));
  }

  /// Decryption pad u with u_j = b(I^j(s)); equals prg_iterated(i, d, 2q)
  /// whenever s = f_i^{2q}(d).
  static BitString decryption_pad(const RsaIndex& index, const RsaTrapdoor& t, std::uint64_t s,
                                  int qubits) {
    BitString u(static_cast<std::size_t>(2 * qubits));
    std::uint64_t x = s;
    for (std::size_t j = 1; j <= u.size(); ++j) {
      x = ToyRsaFamily::invert(t, x);
      u.set(j - 1, ToyRsaFamily::hardcore(index, x));
    }
    return u;
  }

 private:
  class Keyed final : public KeyedScheme {
   public:
    Keyed(RsaKeypair kp, int qubits, std::shared_ptr<RandomFunctionOracle> pad)
        : kp_(kp), qubits_(qubits), pad_(std::move(pad)) {}

    Ciphertext encrypt(const DensityMatrix& state, const std::string& target,
                       RandomSource& coins) override {
      check_plaintext(state, target, qubits_);
      const std::uint64_t d = ToyRsaFamily::sample(kp_.index, coins);
      const BitString r = pad_ ? (*pad_)(encode(d))
                               : prg_iterated(kp_.index, d, static_cast<std::size_t>(2 * qubits_));
      return Ciphertext{tag_for(kp_.index, d, qubits_), apply_pauli(r, state, target), target};
    }

    DensityMatrix decrypt(const Ciphertext& ct) override {
      if (ct.tag.size() != static_cast<std::size_t>(kp_.index.modulus_bits)) {
        throw InvalidCiphertext("tag has the wrong width");
      }
      const std::uint64_t s = ct.tag.to_uint();
      if (!ToyRsaFamily::in_domain(kp_.index, s)) throw InvalidCiphertext("tag is outside the domain");
      check_plaintext(ct.payload, ct.target, qubits_);
      BitString u;
      if (pad_) {
        const std::uint64_t d = invert_iterate(s);
        u = (*pad_)(encode(d));
      } else {
        u = decryption_pad(kp_.index, kp_.trapdoor, s, qubits_);
      }
      return apply_pauli(u, ct.payload, ct.target);
    }

    std::optional<BitString> public_key() const override { return kp_.index.encode(); }

   private:
    BitString encode(std::uint64_t d) const {
      return BitString::from_uint(d, static_cast<std::size_t>(kp_.index.modulus_bits));
    }
    std::uint64_t invert_iterate(std::uint64_t s) const {
      for (int j = 0; j < 2 * qubits_; ++j) s = ToyRsaFamily::invert(kp_.trapdoor, s);
      return s;
    }

    RsaKeypair kp_;
    int qubits_;
    std::shared_ptr<RandomFunctionOracle> pad_;
  };

  int qubits_;
  ToyRsaFamily family_;
  bool ideal_;
};

}  // namespace qenc
