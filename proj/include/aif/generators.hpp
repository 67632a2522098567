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

#ifndef AIF_GENERATORS_HPP_
#define AIF_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aif/bitstring.hpp"
#include "aif/dataset.hpp"

// Deterministic reference processes: the binary counting concatenation, the
// frac[(x + pi)^5] recurrence and its precision-truncated variant, finite
// Markov chains with output labelings, and exact dyadic expansions via the
// doubling map. Every stochastic choice runs through a seeded SplitMix64
// stream, so trajectories are reproducible bit for bit.

namespace aif::gen {

using Rational = boost::multiprecision::cpp_rational;

// Concatenation of the binary forms of 0, 1, ..., n without separators.
BitString champernowne(std::uint64_t n);

// One step of the recurrence y = frac[(x + pi)^5], evaluated in a fixed
// operation order (t = x + pi; t2 = t*t; t4 = t2*t2; t5 = t4*t;
// y = t5 - floor(t5)) so the binary64 stream is identical on every
// platform. Throws std::domain_error outside [0, 1).
double prng_step(double x);

// x_0 = seed, x_{m+1} = prng_step(x_m); returns count + 1 values.
std::vector<double> prng_values(double seed, std::size_t count);

// Rows (x_m, x_{m+1}) for m = 0..count-1; split_n defaults to count / 2.
data::Dataset prng_dataset(double seed, std::size_t count);
data::Dataset prng_dataset(double seed, std::size_t count, std::size_t split_n);

struct TruncationParams {
  unsigned full_bits = 16;     // server precision s
  unsigned min_bits = 8;       // lowest delivered precision s'
  std::uint64_t trigger_seed = 0;  // drives the per-step precision draw
};

// The precision-truncated service: the chain advances at full binary64
// precision, while each delivered output keeps only s'' of its s integer-
// scale bits, with s'' drawn uniformly from {min_bits..full_bits} by a
// seeded auxiliary stream. Outputs are reported on the integer scale
// floor(value * 2^s) with the dropped low bits zeroed, so every output is
// below the true integer value by less than 2^(s - s'').
data::Dataset prng_truncated(double seed, std::size_t count, const TruncationParams& p);
data::Dataset prng_truncated(double seed, std::size_t count, const TruncationParams& p,
                             std::size_t split_n);

enum class MarkovKind { absorbing, irreducible, general };

struct MarkovChainSpec {
  std::vector<std::string> states;                 // names, indexed 0..S-1
  std::vector<std::vector<double>> transition;     // row-stochastic
  std::vector<BitString> labels;                   // output f(state)
  std::vector<double> start;                       // initial distribution
  MarkovKind kind = MarkovKind::general;

  std::size_t state_count() const { return states.size(); }
  bool is_absorbing_state(std::size_t i) const;
  // Throws std::invalid_argument when any structural invariant fails:
  // shape mismatches, rows not summing to 1 within 1e-12, an absorbing
  // chain without reachable absorbing states, or an irreducible chain whose
  // graph is not strongly connected.
  void validate() const;
};

MarkovChainSpec markov_spec_from_json(const std::string& text);
std::string markov_spec_to_json(const MarkovChainSpec& spec);

struct MarkovTrajectory {
  std::vector<std::size_t> states;       // state index at records 1..steps
  data::Dataset dataset;                 // x = state index bits, y = label
  // First record index (1-based) at an absorbing state, when one was hit.
  std::optional<std::size_t> absorption_time;
};

MarkovTrajectory markov_simulate(const MarkovChainSpec& spec, std::size_t steps,
                                 std::uint64_t seed);
MarkovTrajectory markov_simulate(const MarkovChainSpec& spec, std::size_t steps,
                                 std::uint64_t seed, std::size_t split_n);

struct DyadicExpansion {
  Rational omega;
  std::vector<int> digits;               // d_1..d_n
  std::vector<Rational> partial_sums;    // sum of d_i / 2^i through each term
};

// Digits of omega in (0, 1] via the doubling map: d = 0 when the remainder
// is <= 1/2 (then it doubles), else 1 (then it doubles less one). All
// arithmetic is exact, which the boundary cases omega = k / 2^j require.
// Dyadic rationals therefore take the trailing-ones form, e.g. 1/2 ->
// 0, 1, 1, 1, ...
DyadicExpansion dyadic_digits(const Rational& omega, std::size_t n);

// Rows m = 1..n with x_m the first m digits as a bit string and y_m the
// m-term partial sum as a real. Requires n <= 52 so every partial sum is
// exactly representable in binary64.
data::Dataset dyadic_dataset(const Rational& omega, std::size_t n);
data::Dataset dyadic_dataset(const Rational& omega, std::size_t n, std::size_t split_n);

}  // namespace aif::gen

#endif  // AIF_GENERATORS_HPP_
