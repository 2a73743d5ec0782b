// include/augvox/audio/clip.hpp

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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "augvox/common.hpp"

namespace augvox::audio {

// Mono sample buffer. Samples are nominally in [-1, 1]; intermediate
// processing may exceed that transiently, but anything returned to a caller
// has been rescaled back into range.
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 0;

  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

struct PreprocessConfig {
  int target_rate = 16000;
  double peak_target_dbfs = -1.0;
  double silence_threshold_dbfs = -40.0;
  double silence_pad_ms = 200.0;
};

inline void validate(const AudioClip& clip) {
  require(!clip.samples.empty(), "invalid clip: no samples");
  require(clip.sample_rate > 0, "invalid clip: sample_rate must be positive");
  for (double s : clip.samples)
    require(std::isfinite(s), "invalid clip: non-finite sample");
}

inline void validate(const PreprocessConfig& config) {
  require(config.target_rate > 0, "preprocess config: target_rate must be positive");
  require(config.peak_target_dbfs <= 0.0,
          "preprocess config: peak_target_dbfs must be <= 0");
  require(config.silence_pad_ms >= 0.0,
          "preprocess config: silence_pad_ms must be >= 0");
}

inline double rms(const std::vector<double>& samples) {
  require(!samples.empty(), "rms: empty input");
  double acc = 0.0;
  for (double s : samples) acc += s * s;
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

inline double rms(const AudioClip& clip) { return rms(clip.samples); }

inline double peak(const AudioClip& clip) {
  double p = 0.0;
  for (double s : clip.samples) p = std::max(p, std::abs(s));
  return p;
}

// Scales the clip by a single gain so its absolute peak lands on
// 10^(target_dbfs / 20). Shape-preserving by construction.
inline AudioClip peak_normalize(const AudioClip& clip, double target_dbfs) {
  validate(clip);
  const double p = peak(clip);
  require(p > 0.0, "silent input");
  const double gain = db_to_gain(target_dbfs) / p;
  AudioClip out{std::vector<double>(clip.samples.size()), clip.sample_rate};
  for (std::size_t i = 0; i < clip.samples.size(); ++i)
    out.samples[i] = clip.samples[i] * gain;
  return out;
}

// Rescales into [-1, 1] when the peak exceeds full scale. Returns the gain
// that was applied (1.0 when nothing had to change).
inline double rescale_into_range(AudioClip& clip) {
  const double p = peak(clip);
  if (p <= 1.0) return 1.0;
  const double gain = 1.0 / p;
  for (double& s : clip.samples) s *= gain;
  return gain;
}

}  // namespace augvox::audio
