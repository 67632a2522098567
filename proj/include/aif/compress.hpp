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

#ifndef AIF_COMPRESS_HPP_
#define AIF_COMPRESS_HPP_

#include <memory>
#include <string_view>
#include <vector>

#include "aif/bitstring.hpp"

// Lossless compression backends. Each backend maps a bit sequence to a bit
// sequence and back; compressed sizes are exact bit counts for the
// bit-native backends and 8x the byte count for the zlib backend. Every
// registered backend is round-trip checked once at registry construction.
//
// Backends:
//   lz     in-repo LZ77 over bit positions with an unbounded window;
//          match distances and lengths carry self-delimiting lgstar codes.
//          Fully deterministic and reproducible from this repository alone.
//   zlib   DEFLATE (level 9) from the system zlib; 32 KiB window.
//   rle    run lengths of alternating bits as lgstar codes; trivial
//          deterministic reference.
//   store  pass-through with a length header; calibration baseline.

namespace aif::compress {

class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string_view name() const = 0;
  virtual BitString compress(const BitString& input) const = 0;
  virtual BitString decompress(const BitString& compressed) const = 0;
};

// Looks up a backend by name; throws std::invalid_argument for unknown
// names. The returned reference is valid for the program lifetime and the
// backend is safe to use from multiple threads.
const Backend& get_backend(std::string_view name);

std::vector<std::string_view> backend_names();

}  // namespace aif::compress

#endif  // AIF_COMPRESS_HPP_
