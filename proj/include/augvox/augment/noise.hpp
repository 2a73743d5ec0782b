// include/augvox/augment/noise.hpp

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
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "augvox/audio/clip.hpp"
#include "augvox/common.hpp"

namespace augvox::augment {

enum class NoiseKind { noise, music, speech };

struct SnrRange {
  double lo_db;
  double hi_db;
};

// Per-kind mixing levels. These are part of the method definition, not
// tunables: speech babble needs to stay quieter relative to the utterance
// than stationary noise does.
inline SnrRange snr_range_for(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::speech:
      return {13.0, 20.0};
    case NoiseKind::music:
      return {5.0, 15.0};
    case NoiseKind::noise:
      return {0.0, 15.0};
  }
  raise("unknown noise kind");
}

inline std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::noise:
      return "noise";
    case NoiseKind::music:
      return "music";
    case NoiseKind::speech:
      return "speech";
  }
  raise("unknown noise kind");
}

inline NoiseKind noise_kind_from_string(const std::string& s) {
  if (s == "noise") return NoiseKind::noise;
  if (s == "music") return NoiseKind::music;
  if (s == "speech") return NoiseKind::speech;
  raise("unknown noise kind \"", s, "\"");
}

namespace noise_detail {

// Shapes the noise to exactly the signal's length: shorter noise is tiled
// end-to-end, longer noise is cropped starting at offset_frac of the slack.
inline std::vector<double> fit_noise(const std::vector<double>& noise,
                                     std::size_t target_len, double offset_frac) {
  std::vector<double> out(target_len);
  if (noise.size() >= target_len) {
    const std::size_t slack = noise.size() - target_len;
    const auto offset = static_cast<std::size_t>(
        std::floor(offset_frac * static_cast<double>(slack + 1)));
    const std::size_t start = std::min(offset, slack);
    for (std::size_t i = 0; i < target_len; ++i) out[i] = noise[start + i];
  } else {
    for (std::size_t i = 0; i < target_len; ++i) out[i] = noise[i % noise.size()];
  }
  return out;
}

// signal + g * fitted_noise without any range handling. The gain is derived
// from the RMS of the fitted segment, so the SNR measured over the full
// output length hits the target exactly.
inline audio::AudioClip mix_at_snr_raw(const audio::AudioClip& signal,
                                       const audio::AudioClip& noise,
                                       double snr_db, double offset_frac) {
  audio::validate(signal);
  audio::validate(noise);
  require(signal.sample_rate == noise.sample_rate,
          "mix_at_snr: sample-rate mismatch (", signal.sample_rate, " vs ",
          noise.sample_rate, ")");
  require(offset_frac >= 0.0 && offset_frac <= 1.0,
          "mix_at_snr: offset_frac outside [0, 1]");

  const auto fitted = fit_noise(noise.samples, signal.samples.size(), offset_frac);
  const double noise_rms = audio::rms(fitted);
  require(noise_rms > 0.0, "silent noise source");
  const double signal_rms = audio::rms(signal);
  require(signal_rms > 0.0, "mix_at_snr: silent signal");

  const double g = signal_rms / noise_rms * db_to_gain(-snr_db);
  audio::AudioClip out;
  out.sample_rate = signal.sample_rate;
  out.samples.resize(signal.samples.size());
  for (std::size_t i = 0; i < out.samples.size(); ++i)
    out.samples[i] = signal.samples[i] + g * fitted[i];
  return out;
}

}  // namespace noise_detail

// Adds noise behind the signal at a calibrated signal-to-noise ratio.
// offset_frac positions the crop window when the noise is longer than the
// signal; callers drawing it from a seeded stream get deterministic mixes.
inline audio::AudioClip mix_at_snr(const audio::AudioClip& signal,
                                   const audio::AudioClip& noise, double snr_db,
                                   double offset_frac = 0.0) {
  auto out = noise_detail::mix_at_snr_raw(signal, noise, snr_db, offset_frac);
  audio::rescale_into_range(out);
  return out;
}

}  // namespace augvox::augment
