// include/augvox/augment/rir.hpp

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
#include <vector>

#include "augvox/audio/clip.hpp"
#include "augvox/common.hpp"
#include "augvox/dsp/fft.hpp"

namespace augvox::augment {

namespace rir_detail {

inline audio::AudioClip convolve_rir_raw(const audio::AudioClip& signal,
                                         const audio::AudioClip& rir) {
  audio::validate(signal);
  require(!rir.samples.empty(), "convolve_rir: empty impulse response");
  require(signal.sample_rate == rir.sample_rate,
          "convolve_rir: sample-rate mismatch (", signal.sample_rate, " vs ",
          rir.sample_rate, ")");

  double energy = 0.0;
  for (double s : rir.samples) energy += s * s;
  require(energy > 0.0, "convolve_rir: impulse response has zero energy");

  // Unit L2 norm keeps the reverberated signal on the input's loudness scale.
  const double inv_norm = 1.0 / std::sqrt(energy);
  std::vector<double> kernel(rir.samples.size());
  for (std::size_t i = 0; i < kernel.size(); ++i)
    kernel[i] = rir.samples[i] * inv_norm;

  auto full = dsp::fft_convolve(signal.samples, kernel);
  full.resize(signal.samples.size());

  audio::AudioClip out;
  out.sample_rate = signal.sample_rate;
  out.samples = std::move(full);
  return out;
}

}  // namespace rir_detail

// Reverberates the signal with a room impulse response. The tail beyond the
// input's length is dropped so durations stay stable across augmentation.
inline audio::AudioClip convolve_rir(const audio::AudioClip& signal,
                                     const audio::AudioClip& rir) {
  auto out = rir_detail::convolve_rir_raw(signal, rir);
  audio::rescale_into_range(out);
  return out;
}

}  // namespace augvox::augment
