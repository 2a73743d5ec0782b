// include/augvox/audio/preprocess.hpp

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

#include "augvox/audio/clip.hpp"
#include "augvox/audio/resample.hpp"
#include "augvox/audio/vad.hpp"
#include "augvox/common.hpp"

namespace augvox::audio {

// Standard conditioning chain applied to every clip before it enters a
// dataset: resample to the working rate, strip leading/trailing silence,
// normalize the peak level. Throws if the clip is empty, non-finite, or
// contains no frames above the silence threshold.
inline AudioClip preprocess(const AudioClip& clip, const PreprocessConfig& cfg) {
  validate(cfg);
  AudioClip out = resample(clip, cfg.target_rate);
  out = trim_silence(out, cfg.silence_threshold_dbfs, cfg.silence_pad_ms);
  out = peak_normalize(out, cfg.peak_target_dbfs);
  return out;
}

}  // namespace augvox::audio
