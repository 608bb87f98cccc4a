// Copyright 2026 The blindlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace blindlab {

/// Fixed-length bit string, index 0 leftmost. Ordered by (length, lexicographic).
class BitString {
 public:
  BitString() = default;

  /// Throws std::invalid_argument on characters other than '0' and '1'.
  static BitString from_string(std::string_view bits);
  static BitString zeros(std::size_t n) { return BitString(std::string(n, '0')); }
  static BitString ones(std::size_t n) { return BitString(std::string(n, '1')); }
  /// Big-endian binary of `value` in `n` bits.
  static BitString from_index(std::uint64_t value, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] == '1'; }
  void set(std::size_t i, bool b) { bits_[i] = b ? '1' : '0'; }

  const std::string& to_string() const { return bits_; }
  std::uint64_t to_index() const;
  bool parity() const;
  std::size_t weight() const;

  BitString prefix(std::size_t n) const { return BitString(bits_.substr(0, n)); }
  BitString concat(const BitString& o) const { return BitString(bits_ + o.bits_); }

  /// Throws std::invalid_argument on length mismatch.
  friend BitString operator^(const BitString& a, const BitString& b);

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  explicit BitString(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

}  // namespace blindlab
