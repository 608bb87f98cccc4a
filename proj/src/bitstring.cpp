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

#include "blindlab/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace blindlab {

BitString BitString::from_string(std::string_view bits) {
  if (!std::all_of(bits.begin(), bits.end(), [](char c) { return c == '0' || c == '1'; })) {
    throw std::invalid_argument("bit string '" + std::string(bits) + "' must contain only 0 and 1");
  }
  return BitString(std::string(bits));
}

BitString BitString::from_index(std::uint64_t value, std::size_t n) {
  if (n < 64 && (value >> n) != 0) throw std::invalid_argument("value does not fit in bit string length");
  std::string s(n, '0');
  for (std::size_t i = 0; i < n && i < 64; ++i) {
    if ((value >> i) & 1) s[n - 1 - i] = '1';
  }
  return BitString(std::move(s));
}

std::uint64_t BitString::to_index() const {
  if (bits_.size() > 64) throw std::out_of_range("bit string longer than 64 bits");
  std::uint64_t v = 0;
  for (char c : bits_) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

bool BitString::parity() const { return weight() % 2 == 1; }

std::size_t BitString::weight() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1')); }

BitString operator^(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("xor of bit strings with different lengths");
  std::string out(a.size(), '0');
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a.bits_[i] != b.bits_[i]) ? '1' : '0';
  return BitString(std::move(out));
}

}  // namespace blindlab
