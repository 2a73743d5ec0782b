// include/augvox/augment/pitch.hpp

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
#include <cstdint>
#include <limits>
#include <vector>

#include "augvox/audio/clip.hpp"
#include "augvox/audio/resample.hpp"
#include "augvox/common.hpp"

namespace augvox::augment {

namespace pitch_detail {

// Waveform-similarity overlap-add time stretch to an exact output length.
//
// Frames of 50 ms advance by half a window in the output; each frame's source
// position starts from the linear time map and is then nudged within a
// quarter-window tolerance to the lag whose waveform best continues the
// previous frame (maximum normalized cross-correlation against the previous
// frame's natural continuation). A periodic Hann window at 50% overlap sums
// to unity, and the residual edge taper is divided out.
inline std::vector<double> wsola_stretch(const std::vector<double>& x,
                                         std::int64_t out_len, int rate) {
  const auto in_len = static_cast<std::int64_t>(x.size());
  std::int64_t win = std::llround(0.050 * rate);
  if (win % 2 != 0) ++win;
  const std::int64_t hop = win / 2;
  const std::int64_t tol = win / 4;

  // Inputs shorter than one window carry no structure to align; plain
  // band-limited resampling to the target length is the better tool.
  if (in_len <= win || out_len <= win) {
    return audio::resample_exact(
        x, static_cast<double>(out_len) / static_cast<double>(in_len), out_len);
  }

  std::vector<double> window(static_cast<std::size_t>(win));
  for (std::int64_t i = 0; i < win; ++i)
    window[static_cast<std::size_t>(i)] =
        0.5 - 0.5 * std::cos(2.0 * 3.14159265358979323846 *
                             static_cast<double>(i) / static_cast<double>(win));

  std::vector<double> acc(static_cast<std::size_t>(out_len + win), 0.0);
  std::vector<double> wsum(static_cast<std::size_t>(out_len + win), 0.0);

  const double time_map = static_cast<double>(in_len) / static_cast<double>(out_len);
  const std::int64_t max_start = in_len - win;
  std::int64_t prev_src = 0;

  for (std::int64_t k = 0;; ++k) {
    const std::int64_t out_pos = k * hop;
    if (out_pos >= out_len) break;
    std::int64_t ideal = std::llround(static_cast<double>(out_pos) * time_map);
    ideal = std::clamp<std::int64_t>(ideal, 0, max_start);

    std::int64_t src = ideal;
    if (k > 0) {
      // The continuation of the previous frame, i.e. what would follow if we
      // kept reading the source linearly. prev_src <= max_start guarantees
      // this whole segment is in bounds.
      const double* ref = x.data() + prev_src + hop;
      const std::int64_t lo = std::max<std::int64_t>(0, ideal - tol);
      const std::int64_t hi = std::min(max_start, ideal + tol);
      double best = -std::numeric_limits<double>::infinity();
      for (std::int64_t s = lo; s <= hi; ++s) {
        const double* cand = x.data() + s;
        double dot = 0.0, energy = 0.0;
        for (std::int64_t i = 0; i < hop; ++i) {
          dot += ref[i] * cand[i];
          energy += cand[i] * cand[i];
        }
        // The reference energy is constant over the search, so dropping it
        // from the normalization does not change the argmax.
        const double score = energy > 0.0 ? dot / std::sqrt(energy) : 0.0;
        if (score > best) {
          best = score;
          src = s;
        }
      }
    }

    for (std::int64_t i = 0; i < win; ++i) {
      const double w = window[static_cast<std::size_t>(i)];
      acc[static_cast<std::size_t>(out_pos + i)] +=
          x[static_cast<std::size_t>(src + i)] * w;
      wsum[static_cast<std::size_t>(out_pos + i)] += w;
    }
    prev_src = src;
  }

  std::vector<double> out(static_cast<std::size_t>(out_len));
  for (std::int64_t i = 0; i < out_len; ++i) {
    const double w = wsum[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] =
        w > 1e-9 ? acc[static_cast<std::size_t>(i)] / w : 0.0;
  }
  return out;
}

inline audio::AudioClip pitch_shift_raw(const audio::AudioClip& signal,
                                        int semitones) {
  audio::validate(signal);
  require(semitones >= -48 && semitones <= 48,
          "pitch_shift: semitones out of supported range");
  if (semitones == 0) return signal;

  const double factor = std::pow(2.0, semitones / 12.0);
  const auto n = static_cast<std::int64_t>(signal.samples.size());

  // Reading the source on a grid spaced `factor` samples apart compresses or
  // dilates time by that factor; played back at the original rate this moves
  // every frequency by exactly 2^(semitones/12).
  const auto mid_len = std::max<std::int64_t>(
      1, std::llround(static_cast<double>(n) / factor));
  const auto mid = audio::resample_exact(signal.samples, 1.0 / factor, mid_len);

  // Stretching back to the original sample count restores the duration while
  // leaving the local waveform, and with it the pitch, untouched.
  audio::AudioClip out;
  out.sample_rate = signal.sample_rate;
  out.samples = wsola_stretch(mid, n, signal.sample_rate);
  return out;
}

}  // namespace pitch_detail

// Shifts pitch by a whole number of semitones at constant duration: the
// output has exactly the input's sample count and rate.
inline audio::AudioClip pitch_shift(const audio::AudioClip& signal, int semitones) {
  auto out = pitch_detail::pitch_shift_raw(signal, semitones);
  audio::rescale_into_range(out);
  return out;
}

}  // namespace augvox::augment
