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

#include "aif/compress.hpp"

#include <zlib.h>

#include <array>
#include <cstring>
#include <stdexcept>

#include "aif/selfdelim.hpp"

namespace aif::compress {

namespace {

using selfdelim::append_lgstar;
using selfdelim::lgstar_len_u64;
using selfdelim::read_lgstar_u64;

// ---------------------------------------------------------------------------
// lz: greedy LZ77 over bit positions, unbounded window.
//
// Stream layout: lgstar(total bits), then tokens until the total is covered.
//   '0' lgstar(len) <len raw bits>          literal run
//   '1' lgstar(dist) lgstar(len)            copy len bits from dist back
// Overlapping copies are allowed, so periodic data costs one short token.
// ---------------------------------------------------------------------------
class LzBackend final : public Backend {
 public:
  std::string_view name() const override { return "lz"; }

  BitString compress(const BitString& in) const override {
    BitString out;
    const std::size_t n = in.size();
    if (n >= UINT32_MAX) {
      throw std::invalid_argument("lz: input exceeds the 2^32-bit position space");
    }
    append_lgstar(out, n);
    if (n == 0) return out;

    constexpr unsigned kHashBits = 18;
    constexpr std::size_t kProbeBits = 32;   // bits hashed per position
    constexpr std::size_t kMinMatch = 24;    // shorter matches never pay
    constexpr int kMaxChain = 64;
    constexpr std::uint32_t kNoPos = UINT32_MAX;

    std::vector<std::uint32_t> head(std::size_t{1} << kHashBits, kNoPos);
    std::vector<std::uint32_t> prev(n, kNoPos);
    const auto hash_at = [&](std::size_t p) -> std::uint32_t {
      const std::uint64_t w = in.window(p) & 0xFFFFFFFFull;
      return static_cast<std::uint32_t>((w * 0x9E3779B97F4A7C15ull) >> (64 - kHashBits));
    };
    const auto insert = [&](std::size_t p) {
      if (p + kProbeBits <= n) {
        const std::uint32_t h = hash_at(p);
        prev[p] = head[h];
        head[h] = static_cast<std::uint32_t>(p);
      }
    };

    std::size_t pos = 0;
    std::size_t lit_start = 0;
    const auto flush_literals = [&](std::size_t end) {
      if (end == lit_start) return;
      out.push_back(false);
      append_lgstar(out, end - lit_start);
      for (std::size_t i = lit_start; i < end; ++i) out.push_back(in.bit(i));
    };

    while (pos < n) {
      std::size_t best_len = 0;
      std::size_t best_dist = 0;
      if (pos + kProbeBits <= n) {
        std::uint32_t cand = head[hash_at(pos)];
        for (int walk = 0; cand != kNoPos && walk < kMaxChain; ++walk) {
          const std::size_t len = in.common_run(cand, pos, n - pos);
          const std::size_t dist = pos - cand;
          if (len > best_len || (len == best_len && dist < best_dist)) {
            best_len = len;
            best_dist = dist;
          }
          cand = prev[cand];
        }
      }
      bool take = false;
      if (best_len >= kMinMatch) {
        const std::size_t cost =
            1 + lgstar_len_u64(best_dist) + lgstar_len_u64(best_len);
        take = cost < best_len;
      }
      if (take) {
        flush_literals(pos);
        out.push_back(true);
        append_lgstar(out, best_dist);
        append_lgstar(out, best_len);
        const std::size_t end = pos + best_len;
        for (; pos < end; ++pos) insert(pos);
        lit_start = pos;
      } else {
        insert(pos);
        ++pos;
      }
    }
    flush_literals(n);
    return out;
  }

  BitString decompress(const BitString& in) const override {
    std::size_t cursor = 0;
    const std::uint64_t total = read_lgstar_u64(in, cursor);
    BitString out;
    out.reserve(total);
    while (out.size() < total) {
      if (cursor >= in.size()) throw std::invalid_argument("lz: truncated stream");
      const bool is_match = in.bit(cursor++);
      if (is_match) {
        const std::uint64_t dist = read_lgstar_u64(in, cursor);
        const std::uint64_t len = read_lgstar_u64(in, cursor);
        if (dist == 0 || dist > out.size() || out.size() + len > total) {
          throw std::invalid_argument("lz: corrupt match token");
        }
        const std::size_t src = out.size() - dist;
        for (std::uint64_t i = 0; i < len; ++i) out.push_back(out.bit(src + i));
      } else {
        const std::uint64_t len = read_lgstar_u64(in, cursor);
        if (out.size() + len > total || cursor + len > in.size()) {
          throw std::invalid_argument("lz: corrupt literal token");
        }
        for (std::uint64_t i = 0; i < len; ++i) out.push_back(in.bit(cursor + i));
        cursor += len;
      }
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// rle: lgstar(total bits), first bit, then lgstar run lengths alternating.
// ---------------------------------------------------------------------------
class RleBackend final : public Backend {
 public:
  std::string_view name() const override { return "rle"; }

  BitString compress(const BitString& in) const override {
    BitString out;
    append_lgstar(out, in.size());
    if (in.empty()) return out;
    out.push_back(in.bit(0));
    bool cur = in.bit(0);
    std::size_t run = 1;
    for (std::size_t i = 1; i < in.size(); ++i) {
      if (in.bit(i) == cur) {
        ++run;
      } else {
        append_lgstar(out, run);
        cur = !cur;
        run = 1;
      }
    }
    append_lgstar(out, run);
    return out;
  }

  BitString decompress(const BitString& in) const override {
    std::size_t cursor = 0;
    const std::uint64_t total = read_lgstar_u64(in, cursor);
    BitString out;
    out.reserve(total);
    if (total == 0) return out;
    if (cursor >= in.size()) throw std::invalid_argument("rle: truncated stream");
    bool cur = in.bit(cursor++);
    while (out.size() < total) {
      const std::uint64_t run = read_lgstar_u64(in, cursor);
      if (run == 0 || out.size() + run > total) {
        throw std::invalid_argument("rle: corrupt run length");
      }
      for (std::uint64_t i = 0; i < run; ++i) out.push_back(cur);
      cur = !cur;
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// store: lgstar(total bits) followed by the raw bits.
// ---------------------------------------------------------------------------
class StoreBackend final : public Backend {
 public:
  std::string_view name() const override { return "store"; }

  BitString compress(const BitString& in) const override {
    BitString out;
    append_lgstar(out, in.size());
    out.append(in);
    return out;
  }

  BitString decompress(const BitString& in) const override {
    std::size_t cursor = 0;
    const std::uint64_t total = read_lgstar_u64(in, cursor);
    if (cursor + total > in.size()) throw std::invalid_argument("store: truncated stream");
    BitString out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(in.bit(cursor + i));
    return out;
  }
};

// ---------------------------------------------------------------------------
// zlib: DEFLATE over the byte packing [8-byte LE bit count || packed bits].
// ---------------------------------------------------------------------------
class ZlibBackend final : public Backend {
 public:
  std::string_view name() const override { return "zlib"; }

  BitString compress(const BitString& in) const override {
    std::vector<std::uint8_t> payload;
    const std::uint64_t nbits = in.size();
    for (int i = 0; i < 8; ++i) payload.push_back(static_cast<std::uint8_t>(nbits >> (8 * i)));
    const auto packed = in.to_bytes();
    payload.insert(payload.end(), packed.begin(), packed.end());

    uLongf bound = compressBound(static_cast<uLong>(payload.size()));
    std::vector<std::uint8_t> out(bound);
    const int rc = compress2(out.data(), &bound, payload.data(),
                             static_cast<uLong>(payload.size()), 9);
    if (rc != Z_OK) throw std::runtime_error("zlib: compress2 failed");
    out.resize(bound);
    return BitString::from_bytes(out);
  }

  BitString decompress(const BitString& in) const override {
    const auto bytes = in.to_bytes();
    std::vector<std::uint8_t> payload(1024);
    z_stream zs;
    std::memset(&zs, 0, sizeof(zs));
    if (inflateInit(&zs) != Z_OK) throw std::runtime_error("zlib: inflateInit failed");
    zs.next_in = const_cast<Bytef*>(bytes.data());
    zs.avail_in = static_cast<uInt>(bytes.size());
    std::size_t written = 0;
    int rc = Z_OK;
    do {
      if (written == payload.size()) payload.resize(payload.size() * 2);
      zs.next_out = payload.data() + written;
      zs.avail_out = static_cast<uInt>(payload.size() - written);
      rc = inflate(&zs, Z_NO_FLUSH);
      written = payload.size() - zs.avail_out;
      if (rc != Z_OK && rc != Z_STREAM_END) {
        inflateEnd(&zs);
        throw std::invalid_argument("zlib: corrupt stream");
      }
    } while (rc != Z_STREAM_END);
    inflateEnd(&zs);
    payload.resize(written);

    if (payload.size() < 8) throw std::invalid_argument("zlib: missing header");
    std::uint64_t nbits = 0;
    for (int i = 0; i < 8; ++i) nbits |= std::uint64_t{payload[i]} << (8 * i);
    if ((payload.size() - 8) * 8 < nbits) throw std::invalid_argument("zlib: short payload");
    BitString all = BitString::from_bytes(
        std::span<const std::uint8_t>(payload.data() + 8, payload.size() - 8));
    BitString out;
    out.reserve(nbits);
    for (std::uint64_t i = 0; i < nbits; ++i) out.push_back(all.bit(i));
    return out;
  }
};

// Deterministic calibration vectors for the registration self-check.
void make_calibration_vectors(BitString& periodic, BitString& noisy) {
  for (int i = 0; i < 4096; ++i) periodic.push_back((i / 3) % 2);
  std::uint64_t s = 0x9E3779B97F4A7C15ull;
  for (int i = 0; i < 4096; ++i) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    noisy.push_back(s & 1);
  }
}

std::vector<std::unique_ptr<Backend>> build_registry() {
  std::vector<std::unique_ptr<Backend>> backends;
  backends.push_back(std::make_unique<LzBackend>());
  backends.push_back(std::make_unique<ZlibBackend>());
  backends.push_back(std::make_unique<RleBackend>());
  backends.push_back(std::make_unique<StoreBackend>());

  // Registration-time losslessness check on a few shapes of input.
  std::vector<BitString> vectors;
  vectors.emplace_back();
  vectors.push_back(BitString::from_string("1"));
  vectors.push_back(BitString::from_string("0110100110010110"));
  BitString periodic, noisy;
  make_calibration_vectors(periodic, noisy);
  vectors.push_back(periodic);
  vectors.push_back(noisy);
  for (const auto& b : backends) {
    for (const auto& v : vectors) {
      if (b->decompress(b->compress(v)) != v) {
        throw std::logic_error(std::string("backend failed round-trip: ") +
                               std::string(b->name()));
      }
    }
  }
  return backends;
}

const std::vector<std::unique_ptr<Backend>>& registry() {
  static const auto backends = build_registry();
  return backends;
}

}  // namespace

const Backend& get_backend(std::string_view name) {
  for (const auto& b : registry()) {
    if (b->name() == name) return *b;
  }
  throw std::invalid_argument("unknown compressor backend: " + std::string(name));
}

std::vector<std::string_view> backend_names() {
  std::vector<std::string_view> names;
  for (const auto& b : registry()) names.push_back(b->name());
  return names;
}

}  // namespace aif::compress
