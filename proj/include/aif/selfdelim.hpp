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

#ifndef AIF_SELFDELIM_HPP_
#define AIF_SELFDELIM_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aif/bitstring.hpp"

// Self-delimiting (prefix-free) integer codes over nonnegative integers of
// arbitrary precision.
//
// The recursive length-of-length code ("lgstar") writes, for n >= 2,
//
//   '1' || c_k || ... || c_1 || binary(n) || '0'
//
// where binary(n) is the plain binary form of n, c_1 = binary(bitlen(n)),
// and each further c_{i+1} = binary(bitlen(c_i's value)) until a 2-bit
// chunk is reached. A decoder reads the leading '1', takes the 2-bit field
// as a value v, and then repeats: if the next bit is '1', the next v bits
// (including that bit) are the next value; if it is '0', v is the result.
// Every chunk of a valid codeword starts with '1', so the terminating '0'
// is unambiguous. The values 0 and 1 get the reserved codewords "00" and
// "01", which no general codeword can collide with.
//
// The bit-duplication baseline writes every bit of binary(n) twice and
// terminates with "01", costing exactly 2*bitlen(n) + 2 bits.
//
// Bit lengths follow the convention bitlen(v) = ceil(log2(v + 1)), i.e.
// bitlen(0) = 0 and bitlen(1200) = 11.

namespace aif::selfdelim {

using BigInt = boost::multiprecision::cpp_int;

enum class Scheme { lgstar, bitdup };

// Thrown when a stream ends inside a codeword or violates the code grammar;
// `offset` is the bit position that was reached.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at bit offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct Decoded {
  BigInt value;
  std::size_t next;  // cursor just past the codeword
};

// bitlen(v) = ceil(log2(v + 1)); 0 for v = 0.
unsigned long bit_length(const BigInt& v);
constexpr unsigned bit_length_u64(std::uint64_t v) {
  unsigned n = 0;
  while (v != 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

BitString encode_lgstar(const BigInt& n);
Decoded decode_lgstar(const BitString& bits, std::size_t cursor = 0);
std::size_t lgstar_len(const BigInt& n);
std::size_t lgstar_len_u64(std::uint64_t n);

// Appends the lgstar codeword for n to out; used by bit-level codecs that
// embed self-delimiting lengths.
void append_lgstar(BitString& out, std::uint64_t n);
// Reads one u64-ranged lgstar codeword; throws DecodeError on overflow.
std::uint64_t read_lgstar_u64(const BitString& bits, std::size_t& cursor);

BitString encode_bitdup(const BigInt& n);
Decoded decode_bitdup(const BitString& bits, std::size_t cursor = 0);

BitString encode(const BigInt& n, Scheme scheme);
Decoded decode(const BitString& bits, Scheme scheme, std::size_t cursor = 0);

struct CodecTableRow {
  unsigned value_bits;     // bit length of the sampled value (2^L - 1)
  std::size_t dup_len;     // always 2*L + 2
  std::size_t lgstar_len;  // length of the recursive code
};

// One row per sampled bit length L = 2, 2+step, ..., <= max_bits.
std::vector<CodecTableRow> codec_table(unsigned max_bits, unsigned step);

}  // namespace aif::selfdelim

#endif  // AIF_SELFDELIM_HPP_
