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

#include "aif/generators.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "aif/rng.hpp"
#include "aif/selfdelim.hpp"

namespace aif::gen {

namespace {

constexpr double kRowSumTolerance = 1e-12;
constexpr double kAbsorbingSelfLoop = 1.0 - 1e-12;

unsigned state_index_width(std::size_t state_count) {
  unsigned w = 1;
  while ((std::size_t{1} << w) < state_count) ++w;
  return w;
}

BitString state_index_bits(std::size_t index, unsigned width) {
  BitString b;
  b.append_bits_msb(index, width);
  return b;
}

// Reachability over edges with positive probability.
std::vector<bool> reachable_from(const std::vector<std::vector<double>>& t,
                                 const std::vector<std::size_t>& sources,
                                 bool reverse_edges) {
  const std::size_t n = t.size();
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      const double p = reverse_edges ? t[v][u] : t[u][v];
      if (p > 0.0 && !seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

std::size_t sample_index(const std::vector<double>& weights, double u) {
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0.0) last_positive = i;
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    cum += weights[i];
    if (u < cum) return i;
  }
  return last_positive;  // guards the u ~ 1 edge under rounding
}

}  // namespace

BitString champernowne(std::uint64_t n) {
  BitString out;
  for (std::uint64_t i = 0; i <= n; ++i) {
    const unsigned w = i == 0 ? 1 : selfdelim::bit_length_u64(i);
    out.append_bits_msb(i, w);
  }
  return out;
}

double prng_step(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw std::domain_error("prng_step requires x in [0, 1)");
  }
  const double t = x + std::numbers::pi;
  const double t2 = t * t;
  const double t4 = t2 * t2;
  const double t5 = t4 * t;
  return t5 - std::floor(t5);
}

std::vector<double> prng_values(double seed, std::size_t count) {
  std::vector<double> values;
  values.reserve(count + 1);
  values.push_back(seed);
  for (std::size_t i = 0; i < count; ++i) values.push_back(prng_step(values.back()));
  return values;
}

data::Dataset prng_dataset(double seed, std::size_t count) {
  return prng_dataset(seed, count, count / 2);
}

data::Dataset prng_dataset(double seed, std::size_t count, std::size_t split_n) {
  if (count < 1) throw std::invalid_argument("prng_dataset requires count >= 1");
  const auto values = prng_values(seed, count);
  data::Dataset d;
  d.x_kind = d.y_kind = data::ValueKind::real;
  d.x_real.assign(values.begin(), values.end() - 1);
  d.y_real.assign(values.begin() + 1, values.end());
  d.split_n = split_n;
  d.meta["generator"] = "prng";
  d.meta["seed_value"] = data::format_real(seed);
  d.validate();
  return d;
}

data::Dataset prng_truncated(double seed, std::size_t count, const TruncationParams& p) {
  return prng_truncated(seed, count, p, count / 2);
}

data::Dataset prng_truncated(double seed, std::size_t count, const TruncationParams& p,
                             std::size_t split_n) {
  if (count < 1) throw std::invalid_argument("prng_truncated requires count >= 1");
  if (p.min_bits < 1 || p.min_bits > p.full_bits || p.full_bits > 52) {
    throw std::invalid_argument("prng_truncated requires 1 <= min_bits <= full_bits <= 52");
  }
  SplitMix64 trigger(p.trigger_seed);
  const double scale = std::ldexp(1.0, static_cast<int>(p.full_bits));

  data::Dataset d;
  d.x_kind = d.y_kind = data::ValueKind::real;
  d.x_real.reserve(count);
  d.y_real.reserve(count);
  double x = seed;
  for (std::size_t m = 0; m < count; ++m) {
    const double next = prng_step(x);
    const unsigned kept =
        p.min_bits + static_cast<unsigned>(trigger.below(p.full_bits - p.min_bits + 1));
    // Keep the top `kept` of the s integer-scale bits, zeroing the rest.
    const double kept_scale = std::ldexp(1.0, static_cast<int>(kept));
    const double truncated =
        std::floor(next * kept_scale) * (scale / kept_scale);
    d.x_real.push_back(x);
    d.y_real.push_back(truncated);
    x = next;
  }
  d.split_n = split_n;
  d.meta["generator"] = "prng_truncated";
  d.meta["seed_value"] = data::format_real(seed);
  d.meta["full_bits"] = std::to_string(p.full_bits);
  d.meta["min_bits"] = std::to_string(p.min_bits);
  d.meta["trigger_seed"] = std::to_string(p.trigger_seed);
  d.validate();
  return d;
}

bool MarkovChainSpec::is_absorbing_state(std::size_t i) const {
  return transition[i][i] >= kAbsorbingSelfLoop;
}

void MarkovChainSpec::validate() const {
  const std::size_t n = states.size();
  if (n == 0) throw std::invalid_argument("markov: empty state set");
  if (transition.size() != n || labels.size() != n || start.size() != n) {
    throw std::invalid_argument("markov: transition/labels/start size mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (transition[i].size() != n) {
      throw std::invalid_argument("markov: transition row " + std::to_string(i) +
                                  " has wrong width");
    }
    double sum = 0.0;
    for (double p : transition[i]) {
      if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("markov: probability out of range in row " +
                                    std::to_string(i));
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw std::invalid_argument("markov: row " + std::to_string(i) +
                                  " sums to " + data::format_real(sum));
    }
  }
  double start_sum = 0.0;
  for (double p : start) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("markov: bad start probability");
    start_sum += p;
  }
  if (std::abs(start_sum - 1.0) > kRowSumTolerance) {
    throw std::invalid_argument("markov: start distribution sums to " +
                                data::format_real(start_sum));
  }

  if (kind == MarkovKind::absorbing) {
    std::vector<std::size_t> absorbing;
    for (std::size_t i = 0; i < n; ++i) {
      if (is_absorbing_state(i)) absorbing.push_back(i);
    }
    if (absorbing.empty()) {
      throw std::invalid_argument("markov: absorbing chain has no absorbing state");
    }
    const auto can_reach = reachable_from(transition, absorbing, /*reverse_edges=*/true);
    for (std::size_t i = 0; i < n; ++i) {
      if (!can_reach[i]) {
        throw std::invalid_argument("markov: state " + states[i] +
                                    " cannot reach an absorbing state");
      }
    }
  } else if (kind == MarkovKind::irreducible) {
    const auto fwd = reachable_from(transition, {0}, false);
    const auto bwd = reachable_from(transition, {0}, true);
    for (std::size_t i = 0; i < n; ++i) {
      if (!fwd[i] || !bwd[i]) {
        throw std::invalid_argument("markov: transition graph is not strongly connected");
      }
    }
  }
}

MarkovChainSpec markov_spec_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MarkovChainSpec spec;
  if (j.contains("states") && j["states"].is_array()) {
    for (const auto& s : j["states"]) spec.states.push_back(s.get<std::string>());
  } else if (j.contains("states")) {
    const auto n = j["states"].get<std::size_t>();
    for (std::size_t i = 0; i < n; ++i) spec.states.push_back("s" + std::to_string(i));
  }
  spec.transition = j.at("transition").get<std::vector<std::vector<double>>>();
  for (const auto& label : j.at("labels")) {
    spec.labels.push_back(BitString::from_string(label.get<std::string>()));
  }
  spec.start = j.at("start").get<std::vector<double>>();
  const std::string kind = j.value("kind", "general");
  if (kind == "absorbing") {
    spec.kind = MarkovKind::absorbing;
  } else if (kind == "irreducible") {
    spec.kind = MarkovKind::irreducible;
  } else if (kind == "general") {
    spec.kind = MarkovKind::general;
  } else {
    throw std::invalid_argument("markov: unknown kind '" + kind + "'");
  }
  spec.validate();
  return spec;
}

std::string markov_spec_to_json(const MarkovChainSpec& spec) {
  nlohmann::json j;
  j["states"] = spec.states;
  j["transition"] = spec.transition;
  std::vector<std::string> labels;
  for (const auto& l : spec.labels) labels.push_back(l.to_string());
  j["labels"] = labels;
  j["start"] = spec.start;
  switch (spec.kind) {
    case MarkovKind::absorbing:
      j["kind"] = "absorbing";
      break;
    case MarkovKind::irreducible:
      j["kind"] = "irreducible";
      break;
    case MarkovKind::general:
      j["kind"] = "general";
      break;
  }
  return j.dump();
}

MarkovTrajectory markov_simulate(const MarkovChainSpec& spec, std::size_t steps,
                                 std::uint64_t seed) {
  return markov_simulate(spec, steps, seed, steps / 2);
}

MarkovTrajectory markov_simulate(const MarkovChainSpec& spec, std::size_t steps,
                                 std::uint64_t seed, std::size_t split_n) {
  spec.validate();
  if (steps < 1) throw std::invalid_argument("markov_simulate requires steps >= 1");
  SplitMix64 rng(seed);
  const unsigned width = state_index_width(spec.state_count());

  MarkovTrajectory out;
  out.states.reserve(steps);
  out.dataset.x_kind = out.dataset.y_kind = data::ValueKind::binary;
  out.dataset.x_bits.reserve(steps);
  out.dataset.y_bits.reserve(steps);

  std::size_t state = sample_index(spec.start, rng.uniform01());
  for (std::size_t m = 1; m <= steps; ++m) {
    out.states.push_back(state);
    out.dataset.x_bits.push_back(state_index_bits(state, width));
    out.dataset.y_bits.push_back(spec.labels[state]);
    if (!out.absorption_time && spec.is_absorbing_state(state)) {
      out.absorption_time = m;
    }
    state = sample_index(spec.transition[state], rng.uniform01());
  }
  out.dataset.split_n = split_n;
  out.dataset.meta["generator"] = "markov";
  out.dataset.meta["seed"] = std::to_string(seed);
  if (out.absorption_time) {
    out.dataset.meta["absorption_time"] = std::to_string(*out.absorption_time);
  }
  out.dataset.validate();
  return out;
}

DyadicExpansion dyadic_digits(const Rational& omega, std::size_t n) {
  if (!(omega > 0 && omega <= 1)) {
    throw std::domain_error("dyadic_digits requires omega in (0, 1]");
  }
  DyadicExpansion out;
  out.omega = omega;
  out.digits.reserve(n);
  out.partial_sums.reserve(n);
  const Rational half(1, 2);
  Rational rem = omega;
  Rational sum = 0;
  Rational weight = half;
  for (std::size_t i = 1; i <= n; ++i) {
    const int d = rem <= half ? 0 : 1;
    rem *= 2;
    if (d == 1) rem -= 1;
    out.digits.push_back(d);
    if (d == 1) sum += weight;
    out.partial_sums.push_back(sum);
    weight /= 2;
  }
  return out;
}

data::Dataset dyadic_dataset(const Rational& omega, std::size_t n) {
  return dyadic_dataset(omega, n, n / 2);
}

data::Dataset dyadic_dataset(const Rational& omega, std::size_t n, std::size_t split_n) {
  if (n < 1 || n > 52) {
    throw std::invalid_argument("dyadic_dataset requires 1 <= n <= 52");
  }
  const DyadicExpansion e = dyadic_digits(omega, n);
  data::Dataset d;
  d.x_kind = data::ValueKind::binary;
  d.y_kind = data::ValueKind::real;
  BitString prefix;
  for (std::size_t m = 0; m < n; ++m) {
    prefix.push_back(e.digits[m] == 1);
    d.x_bits.push_back(prefix);
    // Exact for n <= 52: the partial sum is a dyadic rational k / 2^m.
    d.y_real.push_back(static_cast<double>(e.partial_sums[m].convert_to<double>()));
  }
  d.split_n = split_n;
  d.meta["generator"] = "dyadic";
  d.validate();
  return d;
}

}  // namespace aif::gen
