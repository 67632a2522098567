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

#ifndef AIF_BITSTRING_HPP_
#define AIF_BITSTRING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aif {

// Dynamically sized bit sequence. Bit i lives at bit (i & 63) of word
// i >> 6, least significant bit first; the textual form is a string of
// '0'/'1' characters, most significant (first appended) bit first.
// Unused high bits of the last word are kept zero so that equality can
// compare word storage directly.
class BitString {
 public:
  BitString() = default;

  // Parses a '0'/'1' string; throws std::invalid_argument on other input.
  static BitString from_string(std::string_view text);
  // Unpacks bytes into 8 bits each, most significant bit of each byte first.
  static BitString from_bytes(std::span<const std::uint8_t> bytes);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void push_back(bool b) {
    if ((size_ & 63) == 0) words_.push_back(0);
    if (b) words_.back() |= std::uint64_t{1} << (size_ & 63);
    ++size_;
  }

  void append(const BitString& other);
  // Appends the low `width` bits of `value`, most significant first.
  void append_bits_msb(std::uint64_t value, unsigned width);

  void reserve(std::size_t bits) { words_.reserve((bits + 63) / 64); }
  void clear() {
    words_.clear();
    size_ = 0;
  }

  // 64 bits starting at `pos` with bit `pos` in the least significant
  // position; reads past the end yield zero bits.
  std::uint64_t window(std::size_t pos) const {
    const std::size_t w = pos >> 6;
    const unsigned r = static_cast<unsigned>(pos & 63);
    const std::uint64_t lo = w < words_.size() ? words_[w] : 0;
    if (r == 0) return lo;
    const std::uint64_t hi = w + 1 < words_.size() ? words_[w + 1] : 0;
    return (lo >> r) | (hi << (64 - r));
  }

  // Length of the run of pairwise-equal bits starting at positions a and b,
  // capped at max_len. Both runs must stay inside the string.
  std::size_t common_run(std::size_t a, std::size_t b, std::size_t max_len) const;

  std::string to_string() const;
  // Packs to bytes, most significant bit of each byte first, zero padded.
  std::vector<std::uint8_t> to_bytes() const;

  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace aif

#endif  // AIF_BITSTRING_HPP_
