// include/augvox/audio/vad.hpp

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
#include <cstdint>
#include <vector>

#include "augvox/audio/clip.hpp"
#include "augvox/common.hpp"

namespace augvox::audio {

// Energy-based leading/trailing silence removal.
//
// The signal is scanned in 20 ms frames advanced by a 10 ms hop; a frame is
// speech when its RMS level in dBFS reaches threshold_dbfs. The kept region
// spans from the first hot frame to the end of the last one, widened by
// pad_ms of context on each side and clamped to the signal.
//
// All cut points land on hop-grid multiples (the pad is rounded up to a whole
// number of hops), which makes the operation idempotent: running it twice
// returns the first result unchanged.
inline AudioClip trim_silence(const AudioClip& clip, double threshold_dbfs,
                              double pad_ms) {
  validate(clip);
  require(pad_ms >= 0.0, "trim_silence: pad must be nonnegative");

  const auto len = static_cast<std::int64_t>(clip.samples.size());
  const std::int64_t hop = clip.sample_rate / 100;  // 10 ms
  require(hop > 0, "trim_silence: sample rate below 100 Hz");
  const std::int64_t frame_len = 2 * hop;

  std::int64_t first_hot = -1;
  std::int64_t last_hot = -1;
  for (std::int64_t start = 0; start < len; start += hop) {
    const std::int64_t end = std::min(start + frame_len, len);
    double acc = 0.0;
    for (std::int64_t i = start; i < end; ++i) {
      const double s = clip.samples[static_cast<std::size_t>(i)];
      acc += s * s;
    }
    const double frame_rms = std::sqrt(acc / static_cast<double>(end - start));
    const double level = 20.0 * std::log10(std::max(frame_rms, 1e-300));
    if (level >= threshold_dbfs) {
      if (first_hot < 0) first_hot = start;
      last_hot = start;
    }
  }
  require(first_hot >= 0, "trim_silence: no speech detected");

  std::int64_t begin;
  std::int64_t end;
  if (pad_ms == 0.0) {
    begin = first_hot;
    end = std::min(len, last_hot + frame_len);
  } else {
    const double pad_samples_raw = pad_ms * clip.sample_rate / 1000.0;
    const std::int64_t pad =
        static_cast<std::int64_t>(std::ceil(pad_samples_raw / hop)) * hop;
    // Conservative estimates one hop inside the detected frames: content that
    // lit up a straddling frame is guaranteed covered by the pad itself.
    const std::int64_t onset_est = first_hot + hop;
    const std::int64_t offset_est = last_hot + hop;
    begin = std::max<std::int64_t>(0, onset_est - pad);
    end = std::min(len, offset_est + pad);
  }

  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.assign(clip.samples.begin() + begin, clip.samples.begin() + end);
  return out;
}

}  // namespace augvox::audio
