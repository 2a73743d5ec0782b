// include/augvox/rng.hpp

// Copyright 2026  The augvox authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string_view>

#include "augvox/common.hpp"

namespace augvox {

// Counter-free keyed randomness. Every stochastic decision in the pipeline is
// drawn from a stream keyed by (master_seed, item_key, epoch, purpose), so
// results do not depend on worker scheduling or iteration order.

namespace detail {

inline std::uint64_t splitmix_scramble(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a_bytes(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace detail

// SplitMix64 stream. Small state, full 64-bit output, passes BigCrush.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return detail::splitmix_scramble(state_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi). Returns lo when lo == hi.
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // Uniform integer in the inclusive range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    require(lo <= hi, "uniform_int: empty range [", lo, ", ", hi, "]");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
    const auto r = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * span) >> 64);
    return lo + static_cast<std::int64_t>(r);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

// Derives the seed of an independent stream from a structured key.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view item_key,
                                 std::int64_t epoch, std::string_view purpose) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = detail::fnv1a_bytes(h, &master_seed, sizeof(master_seed));
  h = detail::fnv1a_bytes(h, item_key.data(), item_key.size());
  h = detail::fnv1a_bytes(h, "\x1f", 1);
  h = detail::fnv1a_bytes(h, &epoch, sizeof(epoch));
  h = detail::fnv1a_bytes(h, purpose.data(), purpose.size());
  return detail::splitmix_scramble(h);
}

inline Rng make_stream(std::uint64_t master_seed, std::string_view item_key,
                       std::int64_t epoch, std::string_view purpose) {
  return Rng(derive_seed(master_seed, item_key, epoch, purpose));
}

}  // namespace augvox
