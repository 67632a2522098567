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

#ifndef AIF_DATASET_HPP_
#define AIF_DATASET_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aif/bitstring.hpp"

// Paired input/output records with a train/future split. Records 1..N (the
// first split_n records) are the training data; records N+1..M are the
// future. Each side is uniformly binary (bit strings) or real (binary64).
//
// Wire format (JSONL): line 1 is {"meta": {...}} carrying value_kind and
// split_N; every following line is one record {"x": "...", "y": "..."}.
// Binary values are '0'/'1' strings; reals are shortest-form decimal
// numerals that round-trip binary64 exactly.

namespace aif::data {

enum class ValueKind { binary, real };

using Value = std::variant<double, BitString>;

ValueKind kind_of(const Value& v);

struct Dataset {
  ValueKind x_kind = ValueKind::real;
  ValueKind y_kind = ValueKind::real;
  std::vector<double> x_real, y_real;
  std::vector<BitString> x_bits, y_bits;
  std::size_t split_n = 0;
  // Extra metadata carried through the wire format (seed, generator, ...).
  std::map<std::string, std::string> meta;

  std::size_t size() const {
    return x_kind == ValueKind::real ? x_real.size() : x_bits.size();
  }
  std::size_t future_count() const { return size() - split_n; }

  Value x_value(std::size_t i) const;
  Value y_value(std::size_t i) const;

  // Throws std::invalid_argument when column sizes disagree or split_n
  // exceeds the record count.
  void validate() const;
};

// A read-only contiguous range of records, used to hand predictors exactly
// the training split.
struct DatasetView {
  const Dataset* dataset = nullptr;
  std::size_t first = 0;
  std::size_t count = 0;

  std::size_t size() const { return count; }
  Value x(std::size_t i) const { return dataset->x_value(first + i); }
  Value y(std::size_t i) const { return dataset->y_value(first + i); }
};

DatasetView training_view(const Dataset& d);

// Shortest decimal form that parses back to the identical binary64.
std::string format_real(double v);
// Strict parse of a full token; throws std::invalid_argument otherwise.
double parse_real(std::string_view text);

Dataset read_jsonl(std::istream& in, std::string_view source_name = "<stream>");
Dataset read_jsonl_file(const std::string& path);
void write_jsonl(const Dataset& d, std::ostream& out);
void write_jsonl_file(const Dataset& d, const std::string& path);

}  // namespace aif::data

#endif  // AIF_DATASET_HPP_
