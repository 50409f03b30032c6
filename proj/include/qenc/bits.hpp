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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qenc/errors.hpp"

namespace qenc {

/// Fixed-length string over {0,1}. Index 0 is the leftmost (first written)
/// bit; integer conversions treat it as the most significant bit.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length) : bits_(length, 0) {}

  static BitString from_string(std::string_view text) {
    BitString out;
    out.bits_.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') {
        throw Error("bit string may contain only '0' and '1': " +
                    std::string(text));
      }
      out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
  }

  static BitString from_uint(std::uint64_t value, std::size_t width) {
    if (width < 64 && (value >> width) != 0) {
      throw Error("value does not fit in " + std::to_string(width) + " bits");
    }
    BitString out(width);
    for (std::size_t i = 0; i < width; ++i) {
      out.bits_[width - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1U);
    }
    return out;
  }

  static BitString zeros(std::size_t length) { return BitString(length); }
  static BitString ones(std::size_t length) {
    BitString out(length);
    for (auto& b : out.bits_) b = 1;
    return out;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  int operator[](std::size_t i) const { return bits_.at(i); }
  void set(std::size_t i, int value) {
    bits_.at(i) = static_cast<std::uint8_t>(value != 0);
  }
  void push_back(int value) {
    bits_.push_back(static_cast<std::uint8_t>(value != 0));
  }

  std::uint64_t to_uint() const {
    if (bits_.size() > 64) throw Error("bit string longer than 64 bits");
    std::uint64_t v = 0;
    for (auto b : bits_) v = (v << 1) | b;
    return v;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  BitString slice(std::size_t pos, std::size_t length) const {
    if (pos + length > bits_.size()) throw Error("bit string slice out of range");
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                     bits_.begin() + static_cast<std::ptrdiff_t>(pos + length));
    return out;
  }

  BitString concat(const BitString& tail) const {
    BitString out = *this;
    out.bits_.insert(out.bits_.end(), tail.bits_.begin(), tail.bits_.end());
    return out;
  }

  BitString operator^(const BitString& other) const {
    if (other.size() != size()) throw Error("xor of bit strings of unequal length");
    BitString out(size());
    for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i] ^ other.bits_[i];
    return out;
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto b : bits_) n += b;
    return n;
  }
  bool all_zero() const { return popcount() == 0; }

  bool operator==(const BitString&) const = default;
  // Shorter strings order first so maps iterate outcomes in numeric order.
  std::strong_ordering operator<=>(const BitString& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return bits_ <=> other.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace qenc
