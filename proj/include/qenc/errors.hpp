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

#include <stdexcept>
#include <string>

namespace qenc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedKey : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownRegister : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

/// A classical input lies outside the domain of a permutation or predicate.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidCiphertext : public Error {
 public:
  using Error::Error;
};

/// An oracle was called outside the grants of the active policy.
class PolicyViolation : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A role drew different randomness on replay of the same branch.
class NondeterministicRole : public Error {
 public:
  using Error::Error;
};

/// A game was driven with roles or generators that do not fit its mode.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// A scheme, role, game or reduction name that is not registered.
class UnknownIdentifier : public Error {
 public:
  using Error::Error;
};

}  // namespace qenc
