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

#include "aif/selfdelim.hpp"

namespace aif::selfdelim {

namespace {

void append_binary(BitString& out, const BigInt& v) {
  const unsigned long w = bit_length(v);
  for (unsigned long j = w; j-- > 0;) {
    out.push_back(boost::multiprecision::bit_test(v, static_cast<unsigned>(j)));
  }
}

void require(bool ok, const char* what, std::size_t offset) {
  if (!ok) throw DecodeError(what, offset);
}

}  // namespace

unsigned long bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(v) + 1;
}

BitString encode_lgstar(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("encode_lgstar requires n >= 0");
  BitString out;
  if (n < 2) {
    // Reserved short codewords; general codewords always start with '1'.
    out.push_back(false);
    out.push_back(n == 1);
    return out;
  }
  // Chain of chunks, built right to left: the value itself, then the bit
  // length of the chunk to the right, repeatedly, until a 2-bit chunk.
  std::vector<BigInt> chunks{n};
  while (bit_length(chunks.back()) > 2) {
    chunks.emplace_back(bit_length(chunks.back()));
  }
  out.push_back(true);
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
    append_binary(out, *it);
  }
  out.push_back(false);
  return out;
}

Decoded decode_lgstar(const BitString& bits, std::size_t cursor) {
  require(cursor < bits.size(), "truncated codeword", bits.size());
  if (!bits.bit(cursor)) {
    // '0' lead: one more bit selects the reserved value 0 or 1.
    require(cursor + 2 <= bits.size(), "truncated codeword", bits.size());
    return {BigInt(bits.bit(cursor + 1) ? 1 : 0), cursor + 2};
  }
  ++cursor;
  require(cursor + 2 <= bits.size(), "truncated codeword", bits.size());
  require(bits.bit(cursor), "malformed codeword: chunk must start with 1", cursor);
  BigInt v = BigInt(2) + (bits.bit(cursor + 1) ? 1 : 0);
  cursor += 2;
  for (;;) {
    require(cursor < bits.size(), "truncated codeword", bits.size());
    if (!bits.bit(cursor)) return {v, cursor + 1};
    // The pending value is the bit length of the next chunk, which begins
    // with the '1' just peeked.
    require(v <= BigInt(bits.size() - cursor), "truncated codeword", bits.size());
    const std::size_t len = v.convert_to<std::size_t>();
    BigInt next = 0;
    for (std::size_t j = 0; j < len; ++j) {
      next <<= 1;
      if (bits.bit(cursor + j)) next |= 1;
    }
    v = next;
    cursor += len;
  }
}

std::size_t lgstar_len(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("lgstar_len requires n >= 0");
  if (n < 2) return 2;
  if (n < 4) return 4;
  std::size_t total = 2 + bit_length(n);  // '1', binary(n), '0'
  std::uint64_t v = bit_length(n);        // value of the next chunk to the left
  while (v > 3) {
    total += bit_length_u64(v);
    v = bit_length_u64(v);
  }
  return total + 2;  // the final 2-bit chunk
}

std::size_t lgstar_len_u64(std::uint64_t n) {
  if (n < 2) return 2;
  if (n < 4) return 4;
  std::size_t total = 2 + bit_length_u64(n);
  std::uint64_t v = bit_length_u64(n);
  while (v > 3) {
    total += bit_length_u64(v);
    v = bit_length_u64(v);
  }
  return total + 2;
}

void append_lgstar(BitString& out, std::uint64_t n) {
  if (n < 2) {
    out.push_back(false);
    out.push_back(n == 1);
    return;
  }
  std::uint64_t chunks[8];
  int count = 0;
  chunks[count++] = n;
  while (bit_length_u64(chunks[count - 1]) > 2) {
    chunks[count] = bit_length_u64(chunks[count - 1]);
    ++count;
  }
  out.push_back(true);
  for (int i = count; i-- > 0;) {
    out.append_bits_msb(chunks[i], bit_length_u64(chunks[i]));
  }
  out.push_back(false);
}

std::uint64_t read_lgstar_u64(const BitString& bits, std::size_t& cursor) {
  Decoded d = decode_lgstar(bits, cursor);
  if (d.value > BigInt(UINT64_MAX)) {
    throw DecodeError("codeword value exceeds 64 bits", cursor);
  }
  cursor = d.next;
  return d.value.convert_to<std::uint64_t>();
}

BitString encode_bitdup(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("encode_bitdup requires n >= 0");
  BitString out;
  for (unsigned long j = bit_length(n); j-- > 0;) {
    const bool b = boost::multiprecision::bit_test(n, static_cast<unsigned>(j));
    out.push_back(b);
    out.push_back(b);
  }
  out.push_back(false);
  out.push_back(true);
  return out;
}

Decoded decode_bitdup(const BitString& bits, std::size_t cursor) {
  BigInt v = 0;
  for (;;) {
    require(cursor + 2 <= bits.size(), "truncated codeword", bits.size());
    const bool a = bits.bit(cursor);
    const bool b = bits.bit(cursor + 1);
    cursor += 2;
    if (a == b) {
      v <<= 1;
      if (a) v |= 1;
      continue;
    }
    require(!a && b, "malformed codeword: bit pair 10", cursor - 2);
    return {v, cursor};
  }
}

BitString encode(const BigInt& n, Scheme scheme) {
  return scheme == Scheme::lgstar ? encode_lgstar(n) : encode_bitdup(n);
}

Decoded decode(const BitString& bits, Scheme scheme, std::size_t cursor) {
  return scheme == Scheme::lgstar ? decode_lgstar(bits, cursor)
                                  : decode_bitdup(bits, cursor);
}

std::vector<CodecTableRow> codec_table(unsigned max_bits, unsigned step) {
  if (max_bits < 2) throw std::invalid_argument("codec_table requires max_bits >= 2");
  if (step < 1) throw std::invalid_argument("codec_table requires step >= 1");
  std::vector<CodecTableRow> rows;
  for (unsigned long long bits = 2; bits <= max_bits; bits += step) {
    // Representative value 2^bits - 1, the largest of that bit length.
    const BigInt value = (BigInt(1) << bits) - 1;
    rows.push_back({static_cast<unsigned>(bits), 2 * static_cast<std::size_t>(bits) + 2,
                    lgstar_len(value)});
  }
  return rows;
}

}  // namespace aif::selfdelim
