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

#ifndef AIF_COMPLEXITY_HPP_
#define AIF_COMPLEXITY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aif/bitstring.hpp"
#include "aif/compress.hpp"
#include "aif/dataset.hpp"

// Computable upper bounds on description length, in the minimum description
// length spirit: the compressed size of x is an upper bound on the shortest
// description of x relative to the chosen backend. Estimates are upper
// bounds only — no lower-bound semantics anywhere — and the additive
// machine constant relating different reference machines is unknowable, so
// it is surfaced as a flag on every estimate rather than as a number.
//
// The conditional estimate uses the difference form
//
//   K(x | y)  ~  max(0, C(y || SEP || x) - C(y))
//
// where SEP is an escape-coded sentinel that cannot collide with data
// bytes: 0xFE in data is doubled, and the sentinel is the impossible pair
// 0xFE 0x01. Inputs are escape-coded identically whether they appear alone
// or inside a joint buffer, so the context's contribution cancels exactly
// for prefix-causal backends.

namespace aif::complexity {

enum class Kind { plain, conditional, fe_bound };

std::string_view kind_name(Kind kind);

struct ComplexityEstimate {
  double bits = 0;
  std::string backend;
  Kind kind = Kind::plain;
  // The additive constant of machine invariance is not modeled; estimates
  // are comparable only within one backend.
  bool machine_constant_unmodeled = true;
};

ComplexityEstimate estimate_k(std::span<const std::uint8_t> x,
                              const compress::Backend& backend);
ComplexityEstimate estimate_k(const BitString& x, const compress::Backend& backend);

ComplexityEstimate estimate_k_conditional(std::span<const std::uint8_t> x,
                                          std::span<const std::uint8_t> context,
                                          const compress::Backend& backend);
ComplexityEstimate estimate_k_conditional(const BitString& x, const BitString& context,
                                          const compress::Backend& backend);

// Upper bound on forecast ergodicity: the conditional estimate of the
// training outputs given the training inputs, K(Y_N | X_N). Throws
// std::invalid_argument when the training split is empty.
ComplexityEstimate fe_bound(const data::Dataset& dataset,
                            const compress::Backend& backend);

// Canonical byte serialization of one dataset column over records
// [first, first + count): reals as 8-byte little-endian IEEE words behind a
// record count, binary values as concatenated packed bits behind a bit
// count.
enum class Column { x, y };
std::vector<std::uint8_t> serialize_column(const data::Dataset& dataset, Column column,
                                           std::size_t first, std::size_t count);

}  // namespace aif::complexity

#endif  // AIF_COMPLEXITY_HPP_
