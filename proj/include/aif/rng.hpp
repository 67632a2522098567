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

#ifndef AIF_RNG_HPP_
#define AIF_RNG_HPP_

#include <cstdint>

namespace aif {

// SplitMix64: the 64-bit seeding/auxiliary generator used everywhere a
// reproducible stream is needed (Markov sampling, precision triggers, test
// data). Fully specified here so every stream is bit-stable across
// platforms and toolchains.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random mantissa bits.
  constexpr double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). Modulo bias is below 2^-32 for the small bounds
  // used here.
  constexpr std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  constexpr bool flip() { return next() >> 63; }

 private:
  std::uint64_t state_;
};

}  // namespace aif

#endif  // AIF_RNG_HPP_
