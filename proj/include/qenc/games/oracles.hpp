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

#include <cstddef>
#include <string>

#include "qenc/errors.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/random.hpp"
#include "qenc/schemes/scheme.hpp"

namespace qenc {

/// Oracle calls allowed per role per run.
inline constexpr std::size_t kDefaultOracleBudget = 64;

enum class Access { none, enc, enc_dec };

inline std::string to_string(Access a) {
  switch (a) {
    case Access::none: return "none";
    case Access::enc: return "enc";
    case Access::enc_dec: return "enc+dec";
  }
  return "none";
}

/// Oracle grants before the challenge (message generator) and after it
/// (distinguisher, adversary, simulator). Decryption is never granted after
/// the challenge.
class OraclePolicy {
 public:
  OraclePolicy(std::string name, Access pre, Access post)
      : name_(std::move(name)), pre_(pre), post_(post) {
    if (post == Access::enc_dec) {
      throw PolicyViolation("decryption oracle cannot be granted after the challenge");
    }
  }

  static OraclePolicy none() { return {"none", Access::none, Access::none}; }
  static OraclePolicy cpa() { return {"cpa", Access::enc, Access::enc}; }
  static OraclePolicy cca1() { return {"cca1", Access::enc_dec, Access::enc}; }

  const std::string& name() const { return name_; }
  Access pre() const { return pre_; }
  Access post() const { return post_; }

 private:
  std::string name_;
  Access pre_;
  Access post_;
};

/// Classical-input oracle access to Enc and Dec of one keyed scheme,
/// restricted by a grant and a call budget.
class OracleHandle {
 public:
  OracleHandle(KeyedScheme* keyed, Access access, RandomSource& coins,
               std::size_t budget = kDefaultOracleBudget)
      : keyed_(keyed), access_(access), coins_(&coins), budget_(budget) {}

  bool can_encrypt() const { return keyed_ != nullptr && access_ != Access::none; }
  bool can_decrypt() const { return keyed_ != nullptr && access_ == Access::enc_dec; }
  std::size_t calls() const { return calls_; }

  Ciphertext encrypt(const DensityMatrix& state, const std::string& target) {
    if (!can_encrypt()) throw PolicyViolation("encryption oracle not granted");
    spend();
    return keyed_->encrypt(state, target, *coins_);
  }

  DensityMatrix decrypt(const Ciphertext& ct) {
    if (!can_decrypt()) throw PolicyViolation("decryption oracle not granted");
    spend();
    return keyed_->decrypt(ct);
  }

 private:
  void spend() {
    if (calls_ >= budget_) throw BudgetExhausted("oracle budget of " + std::to_string(budget_) + " calls used up");
    ++calls_;
  }

  KeyedScheme* keyed_;
  Access access_;
  RandomSource* coins_;
  std::size_t budget_;
  std::size_t calls_ = 0;
};

}  // namespace qenc
