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

#include "aif/complexity.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace aif::complexity {

namespace {

constexpr std::uint8_t kEscape = 0xFE;
constexpr std::uint8_t kSentinelTag = 0x01;  // 0xFE 0x01 cannot occur in escaped data

void append_escaped(std::vector<std::uint8_t>& out, std::span<const std::uint8_t> data) {
  for (std::uint8_t b : data) {
    out.push_back(b);
    if (b == kEscape) out.push_back(b);
  }
}

void append_sentinel(std::vector<std::uint8_t>& out) {
  out.push_back(kEscape);
  out.push_back(kSentinelTag);
}

void append_u64_le(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

double compressed_bits(std::span<const std::uint8_t> buf, const compress::Backend& b) {
  return static_cast<double>(b.compress(BitString::from_bytes(buf)).size());
}

// Bit-sequence inputs travel as [bit count || packed bits] so the byte
// packing stays faithful to the exact bit length.
std::vector<std::uint8_t> bits_as_bytes(const BitString& x) {
  std::vector<std::uint8_t> out;
  append_u64_le(out, x.size());
  const auto packed = x.to_bytes();
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::plain:
      return "plain";
    case Kind::conditional:
      return "conditional";
    case Kind::fe_bound:
      return "fe_bound";
  }
  return "plain";
}

ComplexityEstimate estimate_k(std::span<const std::uint8_t> x,
                              const compress::Backend& backend) {
  std::vector<std::uint8_t> buf;
  buf.reserve(x.size() + x.size() / 128 + 2);
  append_escaped(buf, x);
  return {compressed_bits(buf, backend), std::string(backend.name()), Kind::plain, true};
}

ComplexityEstimate estimate_k(const BitString& x, const compress::Backend& backend) {
  return estimate_k(bits_as_bytes(x), backend);
}

ComplexityEstimate estimate_k_conditional(std::span<const std::uint8_t> x,
                                          std::span<const std::uint8_t> context,
                                          const compress::Backend& backend) {
  std::vector<std::uint8_t> joint;
  joint.reserve(x.size() + context.size() + 16);
  append_escaped(joint, context);
  append_sentinel(joint);
  append_escaped(joint, x);
  const double joint_bits = compressed_bits(joint, backend);
  const double context_bits = estimate_k(context, backend).bits;
  return {std::max(0.0, joint_bits - context_bits), std::string(backend.name()),
          Kind::conditional, true};
}

ComplexityEstimate estimate_k_conditional(const BitString& x, const BitString& context,
                                          const compress::Backend& backend) {
  return estimate_k_conditional(bits_as_bytes(x), bits_as_bytes(context), backend);
}

std::vector<std::uint8_t> serialize_column(const data::Dataset& dataset, Column column,
                                           std::size_t first, std::size_t count) {
  if (first + count > dataset.size()) {
    throw std::invalid_argument("serialize_column: range exceeds dataset");
  }
  const bool is_x = column == Column::x;
  const data::ValueKind kind = is_x ? dataset.x_kind : dataset.y_kind;
  std::vector<std::uint8_t> out;
  if (kind == data::ValueKind::real) {
    const auto& col = is_x ? dataset.x_real : dataset.y_real;
    out.reserve(8 + 8 * count);
    append_u64_le(out, count);
    for (std::size_t i = first; i < first + count; ++i) {
      append_u64_le(out, std::bit_cast<std::uint64_t>(col[i]));
    }
  } else {
    const auto& col = is_x ? dataset.x_bits : dataset.y_bits;
    BitString all;
    for (std::size_t i = first; i < first + count; ++i) all.append(col[i]);
    out = bits_as_bytes(all);
  }
  return out;
}

ComplexityEstimate fe_bound(const data::Dataset& dataset,
                            const compress::Backend& backend) {
  dataset.validate();
  if (dataset.split_n < 1) {
    throw std::invalid_argument("fe_bound: dataset has an empty training split");
  }
  const auto y = serialize_column(dataset, Column::y, 0, dataset.split_n);
  const auto x = serialize_column(dataset, Column::x, 0, dataset.split_n);
  ComplexityEstimate est = estimate_k_conditional(y, x, backend);
  est.kind = Kind::fe_bound;
  return est;
}

}  // namespace aif::complexity
