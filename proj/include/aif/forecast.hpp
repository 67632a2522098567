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

#ifndef AIF_FORECAST_HPP_
#define AIF_FORECAST_HPP_

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "aif/dataset.hpp"

// Executable forecastability checks. A predictor is fitted on the training
// split only, its errors are measured on the future split, and the verdict
// falls out of the error vector:
//
//   oracle         every future error is exactly zero
//   precise        every future error is inside the precision ball
//   probabilistic  a fraction P of future errors is inside the ball
//   trivial        the future split is empty
//
// Ball conventions follow the metric: absolute uses the open ball
// (error < epsilon), Hamming uses the closed ball (error <= h), and exact
// means the singleton {y}. The locus always uses the strict form, making it
// the empirical CDF of the error magnitudes.
//
// Evaluation over future records runs either as a plain serial loop (the
// reference) or as an OpenMP loop writing each record's error by index;
// both produce bitwise identical vectors.

namespace aif::forecast {

inline constexpr double kInfiniteError = std::numeric_limits<double>::infinity();

enum class Metric { absolute, hamming, exact };

std::string_view metric_name(Metric m);
Metric metric_from_name(std::string_view name);

struct PrecisionSpec {
  Metric metric = Metric::absolute;
  double radius = 0.0;
  // Optional per-record radii; entry m-1 applies to record m (1-based).
  std::vector<double> schedule;

  double radius_for(std::size_t record_m) const {
    if (schedule.empty()) return radius;
    return schedule.at(record_m - 1);
  }
};

// Distance between an output and a prediction. Throws std::invalid_argument
// on kind mismatch and on unequal lengths under the Hamming metric. The
// exact metric returns 0 for identical values and +inf otherwise.
double error(const data::Value& y, const data::Value& y_star, Metric metric);

class Predictor {
 public:
  virtual ~Predictor() = default;
  virtual std::string_view name() const = 0;
  // Receives exactly the training split; must not retain the view past fit.
  virtual void fit(data::DatasetView train) = 0;
  // Deterministic after fit; nullopt reports a prediction failure, which
  // evaluation records as an infinite error.
  virtual std::optional<data::Value> predict(const data::Value& x) const = 0;
};

struct PredictorOptions {
  Metric metric = Metric::absolute;  // distance used by nearest-neighbor search
  unsigned scale_bits = 0;           // exact_prng: report floor(y * 2^scale_bits)
};

// Built-ins: "exact_prng" (the closed-form recurrence), "lookup"
// (exact-match table; unseen inputs fail), "knn1" (nearest training input
// under the active metric, ties to the smallest index), "constant" (mean or
// majority of the training outputs).
std::unique_ptr<Predictor> make_predictor(std::string_view name,
                                          const PredictorOptions& options = {});
std::vector<std::string_view> predictor_names();

enum class Execution { serial, parallel };

// Fits on records [0, train_count) and returns errors for records
// [eval_first, eval_first + eval_count).
std::vector<double> evaluate_range(const data::Dataset& d, Predictor& predictor,
                                   Metric metric, std::size_t train_count,
                                   std::size_t eval_first, std::size_t eval_count,
                                   Execution exec);

// Errors for the future split, m in N+1..M.
std::vector<double> evaluate(const data::Dataset& d, Predictor& predictor, Metric metric,
                             Execution exec = Execution::parallel);

struct LocusCurve {
  std::vector<std::pair<double, double>> points;  // (epsilon, fraction)
  std::size_t split_n = 0;
  std::string predictor;
};

// Empirical fraction of future errors strictly below each epsilon; the
// grid must be sorted ascending and non-empty.
LocusCurve locus(const data::Dataset& d, Predictor& predictor, Metric metric,
                 std::span<const double> epsilons, Execution exec = Execution::parallel);
LocusCurve locus_from_errors(std::span<const double> errors,
                             std::span<const double> epsilons);

enum class ForecastClass { oracle, precise, probabilistic, trivial };

std::string_view class_name(ForecastClass c);

struct ForecastReport {
  ForecastClass cls = ForecastClass::trivial;
  PrecisionSpec precision;
  double fraction = 1.0;  // P, the precise fraction of the future split
  std::size_t split_n = 0;
  std::vector<double> errors;  // per future record, +inf for failures
};

ForecastReport classify(const data::Dataset& d, Predictor& predictor,
                        const PrecisionSpec& precision,
                        Execution exec = Execution::parallel);
ForecastReport classify_from_errors(std::span<const double> errors,
                                    const PrecisionSpec& precision, std::size_t split_n);
// Kind-agnostic core: callers that compare in exact arithmetic supply, per
// future record, whether the prediction was inside the ball and whether it
// was exactly right.
ForecastReport classify_from_outcomes(const std::vector<bool>& within,
                                      const std::vector<bool>& exact_hit,
                                      std::size_t split_n);

using PredictorFactory = std::function<std::unique_ptr<Predictor>()>;

enum class Goal { oracle, precise };

struct MinimalSplitResult {
  bool found = false;      // a split with a nonempty future achieved the goal
  std::size_t split_n = 0; // smallest such N, or the horizon when !found
  bool trivial = false;    // only the empty-future split N = M remains
};

// Scans N = 1..horizon-1 over the first `horizon` records, refitting a
// fresh predictor per split, and returns the smallest N whose future
// records all (goal oracle) or all-within-epsilon (goal precise) hold.
MinimalSplitResult find_minimal_n(const data::Dataset& d, const PredictorFactory& family,
                                  const PrecisionSpec& precision, std::size_t horizon,
                                  Goal goal = Goal::oracle);

struct BoundCheckResult {
  bool ok = true;
  std::optional<std::size_t> violating_index;
};

// Checks, after quantizing at `resolution`, that every error stays within
// epsilon and that its self-delimiting code is no longer than epsilon's
// plus one sign bit. Throws std::invalid_argument on non-finite errors.
BoundCheckResult error_complexity_bound_check(std::span<const double> errors,
                                              double epsilon,
                                              double resolution = 1.0 / 65536.0);

}  // namespace aif::forecast

#endif  // AIF_FORECAST_HPP_
