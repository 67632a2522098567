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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "aif/generators.hpp"
#include "aif/rng.hpp"
#include "aif/selfdelim.hpp"

using aif::BitString;
using aif::SplitMix64;
namespace gen = aif::gen;
using gen::Rational;

namespace {

// The counting concatenation through 20, as printed by the reference
// program.
constexpr const char* kCountingGolden =
    "011011100101110111100010011010101111001101111011111000010001100101001110100";

// Oracle for the fixed-order recurrence: every intermediate operation is
// computed in 113-bit precision and rounded back to binary64. A 113-bit
// product or sum of two doubles is exact, so each step is one correct
// rounding and the oracle reproduces the double stream bit for bit through
// an independent arithmetic path.
double oracle_step(double x) {
  using Wide = boost::multiprecision::cpp_bin_float_quad;
  const double t = static_cast<double>(Wide(x) + Wide(std::numbers::pi));
  const double t2 = static_cast<double>(Wide(t) * Wide(t));
  const double t4 = static_cast<double>(Wide(t2) * Wide(t2));
  const double t5 = static_cast<double>(Wide(t4) * Wide(t));
  const double fl = std::floor(t5);
  return static_cast<double>(Wide(t5) - Wide(fl));
}

}  // namespace

TEST_CASE("counting concatenation golden prefix") {
  CHECK(gen::champernowne(20).to_string() == kCountingGolden);
  CHECK(gen::champernowne(0).to_string() == "0");
  CHECK(gen::champernowne(1).to_string() == "01");
  CHECK(gen::champernowne(2).to_string() == "0110");
}

TEST_CASE("counting concatenation length formula") {
  // Brute-force sum of the per-number bit lengths.
  std::uint64_t expected = 0;
  for (std::uint64_t i = 0; i <= 10000; ++i) {
    expected += i == 0 ? 1 : aif::selfdelim::bit_length_u64(i);
    if (i == 100 || i == 1000 || i == 10000) {
      CHECK(gen::champernowne(i).size() == expected);
    }
  }
}

TEST_CASE("counting concatenation prefix property") {
  // Dense up to 2000, then strided through 10^4 against the full string.
  const BitString full = gen::champernowne(10000);
  const auto is_prefix = [&](std::uint64_t n) {
    const BitString cur = gen::champernowne(n);
    if (cur.size() > full.size()) return false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur.bit(i) != full.bit(i)) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n <= 2000; ++n) REQUIRE(is_prefix(n));
  for (std::uint64_t n = 2000; n <= 10000; n += 97) REQUIRE(is_prefix(n));
}

TEST_CASE("recurrence matches the high-precision oracle") {
  // First step from zero: the fractional part of pi^5 = 306.019684785...
  const double first = gen::prng_step(0.0);
  CHECK(std::fabs(first - 0.019684785281) < 1e-11);

  double x = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mine = gen::prng_step(x);
    const double oracle = oracle_step(x);
    REQUIRE(mine == oracle);  // bit-exact
    x = mine;
  }
}

TEST_CASE("recurrence frozen golden stream from seed 0") {
  // First ten chained values, produced by the per-operation 113-bit oracle
  // and rounded to binary64.
  const double golden[10] = {
      0x1.4283f940ccp-6,   0x1.74b8b2c194ap-1, 0x1.29c7653a604p-1,
      0x1.c942cfa11e8p-2,  0x1.8746ebf1fb8p-1, 0x1.f479a72f384p-1,
      0x1.8d9c740e9d8p-1,  0x1.dba9e1b45ap-2,  0x1.9e072e9c78cp-1,
      0x1.bf5b7e92bbp-1,
  };
  const auto values = gen::prng_values(0.0, 10);
  REQUIRE(values.size() == 11);
  for (int i = 0; i < 10; ++i) REQUIRE(values[i + 1] == golden[i]);
}

TEST_CASE("recurrence stays in range and is deterministic") {
  SplitMix64 seeds(21);
  for (int i = 0; i < 1000000; ++i) {
    const double x = seeds.uniform01();
    const double y = gen::prng_step(x);
    REQUIRE(y >= 0.0);
    REQUIRE(y < 1.0);
  }
  CHECK_THROWS_AS(gen::prng_step(-0.25), std::domain_error);
  CHECK_THROWS_AS(gen::prng_step(1.0), std::domain_error);

  const auto a = gen::prng_values(0.37, 50);
  const auto b = gen::prng_values(0.37, 50);
  CHECK(a == b);
}

TEST_CASE("recurrence dataset chains rows") {
  const auto d = gen::prng_dataset(0.0, 25, 10);
  REQUIRE(d.size() == 25);
  CHECK(d.split_n == 10);
  for (std::size_t m = 0; m + 1 < d.size(); ++m) {
    CHECK(d.y_real[m] == d.x_real[m + 1]);
    CHECK(d.y_real[m] == gen::prng_step(d.x_real[m]));
  }

  const auto singleton = gen::prng_dataset(0.5, 1, 0);
  REQUIRE(singleton.size() == 1);
  CHECK(singleton.y_real[0] == gen::prng_step(0.5));
  CHECK_THROWS_AS(gen::prng_dataset(0.5, 0), std::invalid_argument);
}

TEST_CASE("truncated service bounds the integer error") {
  gen::TruncationParams p;
  p.full_bits = 16;
  p.min_bits = 8;
  p.trigger_seed = 5;
  const auto d = gen::prng_truncated(0.0, 10000, p);
  const auto full = gen::prng_values(0.0, 10000);
  const double scale = std::ldexp(1.0, 16);
  double max_err = 0.0;
  for (std::size_t m = 0; m < d.size(); ++m) {
    REQUIRE(d.x_real[m] == full[m]);
    const double exact = std::floor(full[m + 1] * scale);
    const double err = exact - d.y_real[m];
    REQUIRE(err >= 0.0);
    REQUIRE(err < 256.0);  // 2^(16-8)
    max_err = std::max(max_err, err);
  }
  CHECK(max_err > 0.0);  // truncation actually happened
}

TEST_CASE("degenerate truncation reproduces the scaled stream") {
  gen::TruncationParams p;
  p.full_bits = 16;
  p.min_bits = 16;  // s'' is always s
  const auto d = gen::prng_truncated(0.25, 500, p);
  const auto full = gen::prng_values(0.25, 500);
  const double scale = std::ldexp(1.0, 16);
  for (std::size_t m = 0; m < d.size(); ++m) {
    REQUIRE(d.y_real[m] == std::floor(full[m + 1] * scale));
  }
}

TEST_CASE("truncation parameter validation") {
  CHECK_THROWS_AS(gen::prng_truncated(0.0, 10, {16, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(gen::prng_truncated(0.0, 10, {8, 16, 0}), std::invalid_argument);
  CHECK_THROWS_AS(gen::prng_truncated(0.0, 10, {53, 8, 0}), std::invalid_argument);
}

namespace {

gen::MarkovChainSpec absorbing_three_state() {
  gen::MarkovChainSpec spec;
  spec.states = {"A", "B", "C"};
  spec.transition = {{0.5, 0.4, 0.1}, {0.3, 0.5, 0.2}, {0.0, 0.0, 1.0}};
  spec.labels = {BitString::from_string("00"), BitString::from_string("01"),
                 BitString::from_string("11")};
  spec.start = {1.0, 0.0, 0.0};
  spec.kind = gen::MarkovKind::absorbing;
  return spec;
}

gen::MarkovChainSpec cycle_four_state() {
  gen::MarkovChainSpec spec;
  spec.states = {"s0", "s1", "s2", "s3"};
  spec.transition = {{0.1, 0.9, 0.0, 0.0},
                     {0.0, 0.1, 0.9, 0.0},
                     {0.0, 0.0, 0.1, 0.9},
                     {0.9, 0.0, 0.0, 0.1}};
  spec.labels = {BitString::from_string("00"), BitString::from_string("01"),
                 BitString::from_string("10"), BitString::from_string("11")};
  spec.start = {0.25, 0.25, 0.25, 0.25};
  spec.kind = gen::MarkovKind::irreducible;
  return spec;
}

}  // namespace

TEST_CASE("markov validation rejects broken specs") {
  auto bad_rows = absorbing_three_state();
  bad_rows.transition[0][0] = 0.6;  // row sums to 1.1
  CHECK_THROWS_AS(bad_rows.validate(), std::invalid_argument);

  auto no_absorbing = absorbing_three_state();
  no_absorbing.transition[2] = {0.5, 0.5, 0.0};
  CHECK_THROWS_AS(no_absorbing.validate(), std::invalid_argument);

  // A and B only talk to each other, so they cannot reach the absorbing C.
  auto unreachable = absorbing_three_state();
  unreachable.transition[0] = {0.5, 0.5, 0.0};
  unreachable.transition[1] = {0.5, 0.5, 0.0};
  CHECK_THROWS_AS(unreachable.validate(), std::invalid_argument);

  auto not_irreducible = cycle_four_state();
  not_irreducible.transition[3] = {0.0, 0.0, 0.0, 1.0};  // s3 becomes a sink
  CHECK_THROWS_AS(not_irreducible.validate(), std::invalid_argument);
}

TEST_CASE("markov absorbing trajectories freeze after absorption") {
  const auto spec = absorbing_three_state();
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto t = gen::markov_simulate(spec, 400, seed);
    REQUIRE(t.absorption_time.has_value());
    const std::size_t a = *t.absorption_time;
    for (std::size_t m = a; m <= t.states.size(); ++m) {
      REQUIRE(t.states[m - 1] == 2);
      REQUIRE(t.dataset.y_bits[m - 1] == spec.labels[2]);
    }
  }
}

TEST_CASE("markov deterministic chain follows the permutation orbit") {
  gen::MarkovChainSpec spec;
  spec.states = {"p0", "p1", "p2"};
  spec.transition = {{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}};
  spec.labels = {BitString::from_string("0"), BitString::from_string("1"),
                 BitString::from_string("10")};
  spec.start = {1.0, 0.0, 0.0};
  spec.kind = gen::MarkovKind::irreducible;
  const auto t = gen::markov_simulate(spec, 9, 123);
  for (std::size_t m = 0; m < 9; ++m) REQUIRE(t.states[m] == m % 3);
}

TEST_CASE("markov irreducible chains cover every state") {
  const auto spec = cycle_four_state();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = gen::markov_simulate(spec, 10000, seed);
    std::set<std::size_t> seen(t.states.begin(), t.states.end());
    REQUIRE(seen.size() == 4);
  }
}

TEST_CASE("markov trajectories are reproducible") {
  const auto spec = cycle_four_state();
  const auto a = gen::markov_simulate(spec, 200, 42);
  const auto b = gen::markov_simulate(spec, 200, 42);
  CHECK(a.states == b.states);
  CHECK(a.dataset.x_bits == b.dataset.x_bits);
}

TEST_CASE("markov spec JSON round-trip") {
  const auto spec = absorbing_three_state();
  const auto back = gen::markov_spec_from_json(gen::markov_spec_to_json(spec));
  CHECK(back.states == spec.states);
  CHECK(back.transition == spec.transition);
  CHECK(back.labels == spec.labels);
  CHECK(back.start == spec.start);
  CHECK(back.kind == spec.kind);
}

TEST_CASE("dyadic digits at the boundaries") {
  // 1/2 doubles to 1 and then stays, so the tail is all ones.
  const auto half = gen::dyadic_digits(Rational(1, 2), 6);
  CHECK(half.digits == std::vector<int>{0, 1, 1, 1, 1, 1});

  const auto three_quarters = gen::dyadic_digits(Rational(3, 4), 5);
  CHECK(three_quarters.digits == std::vector<int>{1, 0, 1, 1, 1});

  const auto one = gen::dyadic_digits(Rational(1), 4);
  CHECK(one.digits == std::vector<int>{1, 1, 1, 1});

  CHECK_THROWS_AS(gen::dyadic_digits(Rational(0), 4), std::domain_error);
  CHECK_THROWS_AS(gen::dyadic_digits(Rational(3, 2), 4), std::domain_error);
}

TEST_CASE("dyadic bracketing inequality, exact arithmetic") {
  const auto check_omega = [](const Rational& omega, std::size_t n) {
    const auto e = gen::dyadic_digits(omega, n);
    Rational pow = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      pow /= 2;  // 2^-i
      REQUIRE(e.partial_sums[i - 1] < omega);
      REQUIRE(omega <= e.partial_sums[i - 1] + pow);
    }
  };
  for (const auto& omega :
       {Rational(1, 2), Rational(1, 4), Rational(3, 4), Rational(1)}) {
    check_omega(omega, 64);
  }
  SplitMix64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t den = rng.below((std::uint64_t{1} << 32) - 2) + 2;
    const std::uint64_t num = rng.below(den) + 1;  // in (0, 1]
    check_omega(Rational(num, den), 64);
  }
}

TEST_CASE("dyadic dataset ladder") {
  // omega = 0.01011 in binary = 11/32; the worked ladder gives
  // y_4 = 0.0101 = 5/16.
  const auto d = gen::dyadic_dataset(Rational(11, 32), 8, 4);
  REQUIRE(d.size() == 8);
  CHECK(d.x_bits[0].to_string() == "0");
  CHECK(d.x_bits[1].to_string() == "01");
  CHECK(d.x_bits[2].to_string() == "010");
  CHECK(d.x_bits[3].to_string() == "0101");
  CHECK(d.y_real[0] == 0.0);
  CHECK(d.y_real[1] == 0.25);
  CHECK(d.y_real[2] == 0.25);
  CHECK(d.y_real[3] == 0.3125);

  // y_m equals the partial sum by definition.
  const auto e = gen::dyadic_digits(Rational(11, 32), 8);
  for (std::size_t m = 0; m < 8; ++m) {
    CHECK(d.y_real[m] == e.partial_sums[m].convert_to<double>());
  }
}
