// tests/test_util.hpp

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

#include <cmath>
#include <cstdint>
#include <vector>

#include "augvox/audio/clip.hpp"
#include "augvox/rng.hpp"

namespace augvox::test {

inline constexpr double kPi = 3.14159265358979323846;

inline audio::AudioClip make_tone(double freq_hz, double duration_s, int rate,
                                  double amplitude = 0.5, double phase = 0.0) {
  audio::AudioClip clip;
  clip.sample_rate = rate;
  const auto n = static_cast<std::size_t>(std::llround(duration_s * rate));
  clip.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    clip.samples[i] =
        amplitude * std::sin(2.0 * kPi * freq_hz * static_cast<double>(i) / rate + phase);
  return clip;
}

inline std::vector<double> make_noise_signal(std::size_t n, std::uint64_t seed,
                                             double amplitude = 0.5) {
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = rng.uniform(-amplitude, amplitude);
  return out;
}

inline audio::AudioClip make_noise(std::size_t n, int rate, std::uint64_t seed,
                                   double amplitude = 0.5) {
  return audio::AudioClip{make_noise_signal(n, seed, amplitude), rate};
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace augvox::test
