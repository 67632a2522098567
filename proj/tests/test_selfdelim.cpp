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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "aif/rng.hpp"
#include "aif/selfdelim.hpp"

using aif::BitString;
using aif::SplitMix64;
namespace sd = aif::selfdelim;
using sd::BigInt;

namespace {

// The worked 22-bit codeword for 1200.
constexpr const char* kGolden1200 = "1111001011100101100000";

BigInt random_big(SplitMix64& rng, unsigned max_bits) {
  BigInt v = 0;
  const unsigned words = (max_bits + 63) / 64;
  for (unsigned i = 0; i < words; ++i) {
    v <<= 64;
    v |= rng.next();
  }
  const unsigned extra = words * 64 - max_bits;
  v >>= extra;
  return v;
}

// Independent grammar walk: '1', a 2-bit field, then chunks whose lengths
// are given by the previous chunk's value, each starting with '1', until a
// '0' terminator.
void check_grammar(const BitString& code, const BigInt& n) {
  REQUIRE(code.size() >= 4);
  CHECK(code.bit(0) == true);
  CHECK(code.bit(code.size() - 1) == false);
  std::size_t cursor = 1;
  BigInt value = 0;
  for (int j = 0; j < 2; ++j) {
    value <<= 1;
    if (code.bit(cursor + j)) value |= 1;
  }
  CHECK(code.bit(cursor) == true);  // field is 10 or 11
  cursor += 2;
  while (code.bit(cursor)) {
    const std::size_t len = value.convert_to<std::size_t>();
    BigInt next = 0;
    for (std::size_t j = 0; j < len; ++j) {
      next <<= 1;
      if (code.bit(cursor + j)) next |= 1;
    }
    CHECK(next >= value);  // a chunk is at least as large as its bit length
    value = next;
    cursor += len;
  }
  CHECK(cursor + 1 == code.size());
  CHECK(value == n);
}

}  // namespace

TEST_CASE("golden codeword for 1200") {
  const BitString code = sd::encode_lgstar(BigInt(1200));
  CHECK(code.to_string() == kGolden1200);
  CHECK(code.size() == 22);
  CHECK(sd::lgstar_len(BigInt(1200)) == 22);

  const auto decoded = sd::decode_lgstar(BitString::from_string(kGolden1200));
  CHECK(decoded.value == 1200);
  CHECK(decoded.next == 22);

  CHECK(sd::encode_bitdup(BigInt(1200)).size() == 24);  // 2*11 + 2
}

TEST_CASE("reserved and small codewords") {
  CHECK(sd::encode_lgstar(BigInt(0)).to_string() == "00");
  CHECK(sd::encode_lgstar(BigInt(1)).to_string() == "01");
  CHECK(sd::encode_lgstar(BigInt(2)).to_string() == "1100");
  CHECK(sd::encode_lgstar(BigInt(5)).to_string() == "1111010");
  CHECK(sd::decode_lgstar(BitString::from_string("01")).value == 1);
  CHECK(sd::decode_lgstar(BitString::from_string("00")).value == 0);

  CHECK(sd::lgstar_len(BigInt(0)) == 2);
  CHECK(sd::lgstar_len(BigInt(2)) == 4);

  CHECK(sd::encode_bitdup(BigInt(1)).to_string() == "1101");
  CHECK(sd::encode_bitdup(BigInt(0)).to_string() == "01");
}

TEST_CASE("round-trip, exhaustive small range") {
  for (std::uint64_t n = 0; n <= (1u << 12); ++n) {
    const BigInt v(n);
    const BitString lg = sd::encode_lgstar(v);
    CHECK(sd::lgstar_len(v) == lg.size());
    CHECK(sd::lgstar_len_u64(n) == lg.size());
    const auto lg_back = sd::decode_lgstar(lg);
    REQUIRE(lg_back.value == v);
    REQUIRE(lg_back.next == lg.size());

    const BitString dup = sd::encode_bitdup(v);
    CHECK(dup.size() == 2 * sd::bit_length(v) + 2);
    const auto dup_back = sd::decode_bitdup(dup);
    REQUIRE(dup_back.value == v);
    REQUIRE(dup_back.next == dup.size());
  }
}

TEST_CASE("round-trip, random 256-bit integers") {
  SplitMix64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const BigInt v = random_big(rng, 256);
    REQUIRE(sd::decode_lgstar(sd::encode_lgstar(v)).value == v);
    REQUIRE(sd::decode_bitdup(sd::encode_bitdup(v)).value == v);
  }
}

TEST_CASE("prefix-freeness over 0..4095") {
  std::vector<std::string> codes;
  codes.reserve(4096);
  for (std::uint64_t n = 0; n < 4096; ++n) {
    codes.push_back(sd::encode_lgstar(BigInt(n)).to_string());
  }
  std::sort(codes.begin(), codes.end());
  for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
    // After sorting, any prefix pair must be adjacent.
    CHECK_FALSE(codes[i + 1].starts_with(codes[i]));
  }
}

TEST_CASE("stream composability") {
  SplitMix64 rng(11);
  std::vector<BigInt> values;
  BitString stream;
  for (int i = 0; i < 1000; ++i) {
    const BigInt v = random_big(rng, 1 + static_cast<unsigned>(rng.below(96)));
    values.push_back(v);
    stream.append(sd::encode_lgstar(v));
  }
  std::size_t cursor = 0;
  for (const BigInt& v : values) {
    const auto d = sd::decode_lgstar(stream, cursor);
    REQUIRE(d.value == v);
    cursor = d.next;
  }
  CHECK(cursor == stream.size());
}

TEST_CASE("codeword grammar") {
  SplitMix64 rng(13);
  for (std::uint64_t n = 2; n < 300; ++n) check_grammar(sd::encode_lgstar(BigInt(n)), BigInt(n));
  for (int i = 0; i < 200; ++i) {
    const BigInt v = random_big(rng, 200) + 2;
    check_grammar(sd::encode_lgstar(v), v);
  }
}

TEST_CASE("length bound versus bit duplication") {
  // lgstar_len(n) <= 2*bitlen(n) + 2 + c with a small measured constant.
  constexpr std::size_t kSlack = 4;
  for (std::uint64_t n = 0; n <= (1u << 14); ++n) {
    CHECK(sd::lgstar_len_u64(n) <= 2 * sd::bit_length_u64(n) + 2 + kSlack);
  }
  SplitMix64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const BigInt v = random_big(rng, 256);
    CHECK(sd::lgstar_len(v) <= 2 * sd::bit_length(v) + 2 + kSlack);
  }
}

TEST_CASE("truncated and malformed input") {
  const BitString golden = BitString::from_string(kGolden1200);
  for (std::size_t cut = 1; cut < golden.size(); ++cut) {
    BitString partial;
    for (std::size_t i = 0; i < cut; ++i) partial.push_back(golden.bit(i));
    CHECK_THROWS_AS(sd::decode_lgstar(partial), sd::DecodeError);
  }
  CHECK_THROWS_AS(sd::decode_bitdup(BitString::from_string("10")), sd::DecodeError);
  CHECK_THROWS_AS(sd::decode_bitdup(BitString::from_string("1100")), sd::DecodeError);
  CHECK_THROWS_AS(sd::decode_lgstar(BitString::from_string("1")), sd::DecodeError);
}

TEST_CASE("codec table") {
  const auto rows = sd::codec_table(256, 1);
  REQUIRE(rows.size() == 255);
  for (const auto& row : rows) {
    CHECK(row.dup_len == 2 * std::size_t{row.value_bits} + 2);
    // Codeword length for 2^L - 1 matches the materialized encoder.
    if (row.value_bits <= 64) {
      const BigInt v = (BigInt(1) << row.value_bits) - 1;
      CHECK(row.lgstar_len == sd::encode_lgstar(v).size());
    }
  }
  // The 11-bit row reproduces the worked comparison: 24 vs 22 bits.
  CHECK(rows[9].value_bits == 11);
  CHECK(rows[9].dup_len == 24);
  CHECK(rows[9].lgstar_len == 22);

  CHECK_THROWS_AS(sd::codec_table(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sd::codec_table(8, 0), std::invalid_argument);
}
