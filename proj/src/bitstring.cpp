// Copyright 2026 The AIF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aif/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace aif {

BitString BitString::from_string(std::string_view text) {
  BitString out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString out;
  out.reserve(bytes.size() * 8);
  for (std::uint8_t b : bytes) {
    for (int j = 7; j >= 0; --j) out.push_back((b >> j) & 1u);
  }
  return out;
}

void BitString::append(const BitString& other) {
  reserve(size_ + other.size_);
  for (std::size_t i = 0; i < other.size_; ++i) push_back(other.bit(i));
}

void BitString::append_bits_msb(std::uint64_t value, unsigned width) {
  for (unsigned j = width; j-- > 0;) push_back((value >> j) & 1u);
}

std::size_t BitString::common_run(std::size_t a, std::size_t b,
                                  std::size_t max_len) const {
  std::size_t i = 0;
  while (i + 64 <= max_len) {
    const std::uint64_t x = window(a + i) ^ window(b + i);
    if (x != 0) return i + static_cast<std::size_t>(std::countr_zero(x));
    i += 64;
  }
  if (i < max_len) {
    const std::uint64_t x = window(a + i) ^ window(b + i);
    const std::size_t tz = x != 0 ? static_cast<std::size_t>(std::countr_zero(x)) : 64;
    return i + std::min(tz, max_len - i);
  }
  return max_len;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out((size_ + 7) / 8, 0);
  for (std::size_t i = 0; i < size_; ++i) {
    if (bit(i)) out[i >> 3] |= static_cast<std::uint8_t>(0x80u >> (i & 7));
  }
  return out;
}

}  // namespace aif
