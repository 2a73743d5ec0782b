// include/augvox/synth/controls.hpp

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

#include <nlohmann/json.hpp>

#include "augvox/common.hpp"
#include "augvox/rng.hpp"

namespace augvox::synth {

// Synthesis diversity knobs passed to the TTS adapter. length_scale stretches
// phoneme durations (smaller = faster speech); the two temperatures control
// sampling variance in the acoustic and duration predictors.
struct SynthesisControls {
  double length_scale = 1.0;
  double temperature = 0.667;
  double duration_temperature = 0.667;
};

inline constexpr double kLengthScaleMin = 0.7;
inline constexpr double kLengthScaleMax = 2.0;
inline constexpr double kTemperatureMin = 0.0;
inline constexpr double kTemperatureMax = 0.667;

inline void validate(const SynthesisControls& c) {
  require(c.length_scale > 0.0, "controls: length_scale must be positive");
  require(c.temperature >= 0.0 && c.duration_temperature >= 0.0,
          "controls: temperatures must be nonnegative");
}

// Uniform draw over the supported control box, keyed so the same utterance
// always synthesizes with the same settings under one master seed. Draw
// order (L, T, T_dp) is part of the replay contract.
inline SynthesisControls sample_controls(std::string_view item_key,
                                         std::uint64_t master_seed) {
  Rng rng = make_stream(master_seed, item_key, 0, "controls");
  SynthesisControls c;
  c.length_scale = rng.uniform(kLengthScaleMin, kLengthScaleMax);
  c.temperature = rng.uniform(kTemperatureMin, kTemperatureMax);
  c.duration_temperature = rng.uniform(kTemperatureMin, kTemperatureMax);
  return c;
}

inline nlohmann::json to_json(const SynthesisControls& c) {
  return {{"L", c.length_scale},
          {"T", c.temperature},
          {"T_dp", c.duration_temperature}};
}

inline SynthesisControls controls_from_json(const nlohmann::json& j) {
  SynthesisControls c;
  c.length_scale = j.at("L").get<double>();
  c.temperature = j.at("T").get<double>();
  c.duration_temperature = j.at("T_dp").get<double>();
  validate(c);
  return c;
}

}  // namespace augvox::synth
