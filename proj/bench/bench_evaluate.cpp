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

// Times the serial reference evaluation against the OpenMP kernel on a
// nearest-neighbor workload and verifies that both produce bitwise
// identical error vectors.
//
//   bench_evaluate [train_count] [eval_count] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "aif/forecast.hpp"
#include "aif/generators.hpp"

namespace fc = aif::forecast;
namespace gen = aif::gen;

namespace {

double time_once(const aif::data::Dataset& d, fc::Execution exec,
                 std::vector<double>& errors) {
  auto predictor = fc::make_predictor("knn1");
  const auto start = std::chrono::steady_clock::now();
  errors = fc::evaluate(d, *predictor, fc::Metric::absolute, exec);
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

double best_of(const aif::data::Dataset& d, fc::Execution exec, int repeats,
               std::vector<double>& errors) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    std::vector<double> run_errors;
    const double ms = time_once(d, exec, run_errors);
    if (ms < best) best = ms;
    errors = std::move(run_errors);
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t train_count = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 50000;
  const std::size_t eval_count = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20000;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

  aif::data::Dataset d;
  d.x_kind = d.y_kind = aif::data::ValueKind::real;
  for (std::size_t i = 0; i < train_count; ++i) {
    const double x = (static_cast<double>(i) + 0.5) / static_cast<double>(train_count);
    d.x_real.push_back(x);
    d.y_real.push_back(gen::prng_step(x));
  }
  const auto chain = gen::prng_values(0.25, eval_count);
  for (std::size_t i = 0; i < eval_count; ++i) {
    d.x_real.push_back(chain[i]);
    d.y_real.push_back(chain[i + 1]);
  }
  d.split_n = train_count;

  std::printf("nearest-neighbor evaluation: %zu training x %zu future records\n",
              train_count, eval_count);
  std::printf("OpenMP max threads: %d\n", omp_get_max_threads());

  std::vector<double> serial_errors, parallel_errors;
  const double serial_ms = best_of(d, fc::Execution::serial, repeats, serial_errors);
  const double parallel_ms = best_of(d, fc::Execution::parallel, repeats, parallel_errors);

  if (serial_errors != parallel_errors) {
    std::printf("MISMATCH: serial and parallel error vectors differ\n");
    return 1;
  }

  std::printf("serial reference: %10.2f ms (best of %d)\n", serial_ms, repeats);
  std::printf("openmp kernel:    %10.2f ms (best of %d)\n", parallel_ms, repeats);
  std::printf("speedup:          %10.2fx\n", serial_ms / parallel_ms);
  std::printf("results identical: yes\n");
  return 0;
}
