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

#include "aif/forecast.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "aif/generators.hpp"
#include "aif/selfdelim.hpp"

namespace aif::forecast {

namespace {

using data::Value;
using data::ValueKind;

bool is_exact_zero(double e) { return e == 0.0; }

bool within_ball(double e, double radius, Metric metric) {
  switch (metric) {
    case Metric::absolute:
      return e < radius;  // open ball
    case Metric::hamming:
      return e <= radius;  // closed ball
    case Metric::exact:
      return e == 0.0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Built-in predictors.
// ---------------------------------------------------------------------------

class ExactPrngPredictor final : public Predictor {
 public:
  explicit ExactPrngPredictor(unsigned scale_bits) : scale_bits_(scale_bits) {}
  std::string_view name() const override { return "exact_prng"; }
  void fit(data::DatasetView) override {}
  std::optional<Value> predict(const Value& x) const override {
    const double* v = std::get_if<double>(&x);
    if (v == nullptr || !(*v >= 0.0 && *v < 1.0)) return std::nullopt;
    const double y = gen::prng_step(*v);
    if (scale_bits_ == 0) return y;
    return std::floor(y * std::ldexp(1.0, static_cast<int>(scale_bits_)));
  }

 private:
  unsigned scale_bits_;
};

class LookupPredictor final : public Predictor {
 public:
  std::string_view name() const override { return "lookup"; }
  void fit(data::DatasetView train) override {
    table_.clear();
    table_.reserve(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
      // First-seen pairs win; later conflicting duplicates are ignored.
      table_.emplace(key_of(train.x(i)), train.y(i));
    }
  }
  std::optional<Value> predict(const Value& x) const override {
    const auto it = table_.find(key_of(x));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

 private:
  static std::string key_of(const Value& v) {
    if (const double* d = std::get_if<double>(&v)) return "r:" + data::format_real(*d);
    return "b:" + std::get<BitString>(v).to_string();
  }
  std::unordered_map<std::string, Value> table_;
};

class Knn1Predictor final : public Predictor {
 public:
  explicit Knn1Predictor(Metric metric) : metric_(metric) {}
  std::string_view name() const override { return "knn1"; }
  void fit(data::DatasetView train) override {
    xs_.clear();
    ys_.clear();
    xs_.reserve(train.size());
    ys_.reserve(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
      xs_.push_back(train.x(i));
      ys_.push_back(train.y(i));
    }
  }
  std::optional<Value> predict(const Value& x) const override {
    double best = kInfiniteError;
    std::size_t best_index = xs_.size();
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      double dist;
      if (metric_ == Metric::exact) {
        dist = x == xs_[i] ? 0.0 : kInfiniteError;
        if (dist == kInfiniteError) continue;
      } else if (const double* q = std::get_if<double>(&x)) {
        if (metric_ != Metric::absolute) continue;
        const double* c = std::get_if<double>(&xs_[i]);
        if (c == nullptr) continue;
        dist = std::fabs(*q - *c);
      } else {
        if (metric_ != Metric::hamming) continue;
        const BitString& qb = std::get<BitString>(x);
        const BitString* c = std::get_if<BitString>(&xs_[i]);
        if (c == nullptr || c->size() != qb.size()) continue;
        dist = hamming_distance(qb, *c);
      }
      if (dist < best) {  // strict keeps the smallest index on ties
        best = dist;
        best_index = i;
      }
    }
    if (best_index == xs_.size()) return std::nullopt;
    return ys_[best_index];
  }

 private:
  static double hamming_distance(const BitString& a, const BitString& b) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.size(); i += 64) {
      std::uint64_t x = a.window(i) ^ b.window(i);
      if (a.size() - i < 64) x &= (~std::uint64_t{0}) >> (64 - (a.size() - i));
      count += static_cast<std::size_t>(std::popcount(x));
    }
    return static_cast<double>(count);
  }
  Metric metric_;
  std::vector<Value> xs_, ys_;
};

class ConstantPredictor final : public Predictor {
 public:
  std::string_view name() const override { return "constant"; }
  void fit(data::DatasetView train) override {
    if (train.size() == 0) {
      value_.reset();
      return;
    }
    if (std::holds_alternative<double>(train.y(0))) {
      double sum = 0.0;
      for (std::size_t i = 0; i < train.size(); ++i) sum += std::get<double>(train.y(i));
      value_ = sum / static_cast<double>(train.size());
    } else {
      // Majority output; ties resolve to the first-seen candidate.
      std::unordered_map<std::string, std::size_t> counts;
      std::vector<std::string> order;
      for (std::size_t i = 0; i < train.size(); ++i) {
        const std::string key = std::get<BitString>(train.y(i)).to_string();
        if (counts.emplace(key, 0).second) order.push_back(key);
        ++counts[key];
      }
      const std::string* best = nullptr;
      std::size_t best_count = 0;
      for (const auto& key : order) {
        if (counts[key] > best_count) {
          best_count = counts[key];
          best = &key;
        }
      }
      value_ = BitString::from_string(*best);
    }
  }
  std::optional<Value> predict(const Value&) const override { return value_; }

 private:
  std::optional<Value> value_;
};

double record_error(const data::Dataset& d, std::size_t i, const Predictor& predictor,
                    Metric metric) noexcept {
  try {
    const auto y_star = predictor.predict(d.x_value(i));
    if (!y_star) return kInfiniteError;
    return error(d.y_value(i), *y_star, metric);
  } catch (...) {
    // Per-record failures (kind or length mismatches included) count as
    // imprecise rather than aborting the evaluation.
    return kInfiniteError;
  }
}

}  // namespace

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::absolute:
      return "absolute";
    case Metric::hamming:
      return "hamming";
    case Metric::exact:
      return "exact";
  }
  return "absolute";
}

Metric metric_from_name(std::string_view name) {
  if (name == "abs" || name == "absolute") return Metric::absolute;
  if (name == "hamming") return Metric::hamming;
  if (name == "exact") return Metric::exact;
  throw std::invalid_argument("unknown metric: " + std::string(name));
}

double error(const Value& y, const Value& y_star, Metric metric) {
  if (data::kind_of(y) != data::kind_of(y_star)) {
    throw std::invalid_argument("error: value kinds differ");
  }
  switch (metric) {
    case Metric::absolute: {
      const double* a = std::get_if<double>(&y);
      if (a == nullptr) {
        throw std::invalid_argument("error: absolute metric requires real values");
      }
      return std::fabs(*a - std::get<double>(y_star));
    }
    case Metric::hamming: {
      const BitString* a = std::get_if<BitString>(&y);
      if (a == nullptr) {
        throw std::invalid_argument("error: hamming metric requires binary values");
      }
      const BitString& b = std::get<BitString>(y_star);
      if (a->size() != b.size()) {
        throw std::invalid_argument("error: hamming metric requires equal lengths");
      }
      std::size_t count = 0;
      for (std::size_t i = 0; i < a->size(); ++i) count += a->bit(i) != b.bit(i);
      return static_cast<double>(count);
    }
    case Metric::exact:
      return y == y_star ? 0.0 : kInfiniteError;
  }
  throw std::invalid_argument("error: unknown metric");
}

std::unique_ptr<Predictor> make_predictor(std::string_view name,
                                          const PredictorOptions& options) {
  if (name == "exact_prng") return std::make_unique<ExactPrngPredictor>(options.scale_bits);
  if (name == "lookup") return std::make_unique<LookupPredictor>();
  if (name == "knn1" || name == "knn-1") return std::make_unique<Knn1Predictor>(options.metric);
  if (name == "constant") return std::make_unique<ConstantPredictor>();
  throw std::invalid_argument("unknown predictor: " + std::string(name));
}

std::vector<std::string_view> predictor_names() {
  return {"exact_prng", "lookup", "knn1", "constant"};
}

std::vector<double> evaluate_range(const data::Dataset& d, Predictor& predictor,
                                   Metric metric, std::size_t train_count,
                                   std::size_t eval_first, std::size_t eval_count,
                                   Execution exec) {
  d.validate();
  if (eval_first + eval_count > d.size() || train_count > d.size()) {
    throw std::invalid_argument("evaluate_range: indices exceed dataset");
  }
  predictor.fit(data::DatasetView{&d, 0, train_count});

  std::vector<double> errors(eval_count);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < eval_count; ++i) {
      errors[i] = record_error(d, eval_first + i, predictor, metric);
    }
  } else {
    const auto count = static_cast<std::int64_t>(eval_count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
      errors[static_cast<std::size_t>(i)] =
          record_error(d, eval_first + static_cast<std::size_t>(i), predictor, metric);
    }
  }
  return errors;
}

std::vector<double> evaluate(const data::Dataset& d, Predictor& predictor, Metric metric,
                             Execution exec) {
  if (d.future_count() == 0) {
    throw std::invalid_argument("evaluate: dataset has no future records");
  }
  return evaluate_range(d, predictor, metric, d.split_n, d.split_n, d.future_count(),
                        exec);
}

LocusCurve locus_from_errors(std::span<const double> errors,
                             std::span<const double> epsilons) {
  if (epsilons.empty()) throw std::invalid_argument("locus: empty epsilon grid");
  if (!std::is_sorted(epsilons.begin(), epsilons.end())) {
    throw std::invalid_argument("locus: epsilon grid must be sorted ascending");
  }
  std::vector<double> sorted(errors.begin(), errors.end());
  std::sort(sorted.begin(), sorted.end());
  LocusCurve curve;
  curve.points.reserve(epsilons.size());
  const double n = static_cast<double>(sorted.size());
  for (double eps : epsilons) {
    const auto below =
        std::lower_bound(sorted.begin(), sorted.end(), eps) - sorted.begin();
    curve.points.emplace_back(eps, n == 0 ? 1.0 : static_cast<double>(below) / n);
  }
  return curve;
}

LocusCurve locus(const data::Dataset& d, Predictor& predictor, Metric metric,
                 std::span<const double> epsilons, Execution exec) {
  const auto errors = evaluate(d, predictor, metric, exec);
  LocusCurve curve = locus_from_errors(errors, epsilons);
  curve.split_n = d.split_n;
  curve.predictor = std::string(predictor.name());
  return curve;
}

std::string_view class_name(ForecastClass c) {
  switch (c) {
    case ForecastClass::oracle:
      return "OF";
    case ForecastClass::precise:
      return "PF";
    case ForecastClass::probabilistic:
      return "PrF";
    case ForecastClass::trivial:
      return "trivial";
  }
  return "trivial";
}

ForecastReport classify_from_outcomes(const std::vector<bool>& within,
                                      const std::vector<bool>& exact_hit,
                                      std::size_t split_n) {
  ForecastReport report;
  report.split_n = split_n;
  if (within.empty()) {
    report.cls = ForecastClass::trivial;
    report.fraction = 1.0;
    return report;
  }
  std::size_t inside = 0;
  bool all_exact = true;
  for (std::size_t i = 0; i < within.size(); ++i) {
    inside += within[i];
    all_exact = all_exact && exact_hit[i];
  }
  report.fraction = static_cast<double>(inside) / static_cast<double>(within.size());
  if (all_exact) {
    report.cls = ForecastClass::oracle;
  } else if (inside == within.size()) {
    report.cls = ForecastClass::precise;
  } else {
    report.cls = ForecastClass::probabilistic;
  }
  return report;
}

ForecastReport classify_from_errors(std::span<const double> errors,
                                    const PrecisionSpec& precision, std::size_t split_n) {
  std::vector<bool> within(errors.size());
  std::vector<bool> exact_hit(errors.size());
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const std::size_t record_m = split_n + 1 + i;
    within[i] = within_ball(errors[i], precision.radius_for(record_m), precision.metric);
    exact_hit[i] = is_exact_zero(errors[i]);
  }
  ForecastReport report = classify_from_outcomes(within, exact_hit, split_n);
  report.precision = precision;
  report.errors.assign(errors.begin(), errors.end());
  return report;
}

ForecastReport classify(const data::Dataset& d, Predictor& predictor,
                        const PrecisionSpec& precision, Execution exec) {
  d.validate();
  if (d.future_count() == 0) {
    ForecastReport report;
    report.cls = ForecastClass::trivial;
    report.precision = precision;
    report.split_n = d.split_n;
    return report;
  }
  const auto errors = evaluate(d, predictor, precision.metric, exec);
  return classify_from_errors(errors, precision, d.split_n);
}

MinimalSplitResult find_minimal_n(const data::Dataset& d, const PredictorFactory& family,
                                  const PrecisionSpec& precision, std::size_t horizon,
                                  Goal goal) {
  d.validate();
  const std::size_t h = std::min(horizon, d.size());
  if (h == 0) throw std::invalid_argument("find_minimal_n: empty horizon");
  for (std::size_t n = 1; n + 1 <= h; ++n) {
    auto predictor = family();
    const auto errors =
        evaluate_range(d, *predictor, precision.metric, n, n, h - n, Execution::parallel);
    const auto report = classify_from_errors(errors, precision, n);
    const bool ok = goal == Goal::oracle
                        ? report.cls == ForecastClass::oracle
                        : (report.cls == ForecastClass::oracle ||
                           report.cls == ForecastClass::precise);
    if (ok) return {true, n, false};
  }
  // Every split with a nonempty future failed; N = M holds only trivially.
  return {false, h, true};
}

BoundCheckResult error_complexity_bound_check(std::span<const double> errors,
                                              double epsilon, double resolution) {
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("error_complexity_bound_check: resolution must be > 0");
  }
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw std::invalid_argument("error_complexity_bound_check: epsilon must be finite");
  }
  using selfdelim::BigInt;
  const auto quantize = [&](double v) { return BigInt(std::floor(v / resolution)); };
  const BigInt q_eps = quantize(epsilon);
  const std::size_t eps_len = selfdelim::lgstar_len(q_eps);
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const double e = errors[i];
    if (!std::isfinite(e) || e < 0.0) {
      throw std::invalid_argument("error_complexity_bound_check: non-finite error at index " +
                                  std::to_string(i));
    }
    const BigInt q = quantize(e);
    if (q > q_eps) return {false, i};
    // One extra bit covers the sign of the deviation.
    if (selfdelim::lgstar_len(q) > eps_len + 1) return {false, i};
  }
  return {true, std::nullopt};
}

}  // namespace aif::forecast
