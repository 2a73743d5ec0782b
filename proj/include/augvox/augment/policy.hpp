// include/augvox/augment/policy.hpp

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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvox/audio/clip.hpp"
#include "augvox/audio/resample.hpp"
#include "augvox/audio/wav.hpp"
#include "augvox/augment/noise.hpp"
#include "augvox/augment/pitch.hpp"
#include "augvox/augment/rir.hpp"
#include "augvox/common.hpp"
#include "augvox/rng.hpp"
#include "augvox/util/fs.hpp"
#include "augvox/util/kvfile.hpp"

namespace augvox::augment {

// File-backed clip collections. Clips are identified by their index-relative
// path and loaded on use; banks stay cheap to share across workers.
struct NoiseSubset {
  NoiseKind kind = NoiseKind::noise;
  std::vector<std::string> ids;
  std::vector<std::filesystem::path> paths;
};

struct RirBank {
  std::vector<std::string> ids;
  std::vector<std::filesystem::path> paths;
};

struct AugmentationPolicy {
  double p_select = 0.25;
  int semitone_min = -4;
  int semitone_max = 4;
  std::array<NoiseSubset, 3> noise_subsets;  // indexed by NoiseKind
  RirBank rir_bank;
  std::uint64_t master_seed = 0;
};

inline void validate(const AugmentationPolicy& policy) {
  require(policy.p_select >= 0.0 && policy.p_select <= 1.0,
          "policy: p_select outside [0, 1]");
  require(policy.semitone_min <= policy.semitone_max,
          "policy: empty semitone range");
}

enum class AugKind { additive_noise, rir, pitch_shift };

// One transform drawn for one utterance. Every parameter the transform needs
// is fixed here at draw time, so applying an instance is pure.
struct AugInstance {
  AugKind kind = AugKind::additive_noise;
  NoiseKind noise_kind = NoiseKind::noise;
  std::string source_id;   // additive_noise: clip id within the subset
  double snr_db = 0.0;
  double offset_frac = 0.0;  // crop position for noise longer than the signal
  std::string filter_id;     // rir
  int semitones = 0;         // pitch_shift
};

struct AppliedAugmentations {
  std::vector<AugInstance> entries;
  std::optional<double> rescale_gain;
};

inline nlohmann::json to_json(const AugInstance& inst) {
  switch (inst.kind) {
    case AugKind::additive_noise:
      return {{"kind", "additive_noise"},
              {"noise_kind", to_string(inst.noise_kind)},
              {"source_id", inst.source_id},
              {"snr_db", inst.snr_db},
              {"offset_frac", inst.offset_frac}};
    case AugKind::rir:
      return {{"kind", "rir"}, {"filter_id", inst.filter_id}};
    case AugKind::pitch_shift:
      return {{"kind", "pitch_shift"}, {"semitones", inst.semitones}};
  }
  raise("unknown augmentation kind");
}

inline AugInstance aug_instance_from_json(const nlohmann::json& j) {
  AugInstance inst;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "additive_noise") {
    inst.kind = AugKind::additive_noise;
    inst.noise_kind = noise_kind_from_string(j.at("noise_kind").get<std::string>());
    inst.source_id = j.at("source_id").get<std::string>();
    inst.snr_db = j.at("snr_db").get<double>();
    inst.offset_frac = j.at("offset_frac").get<double>();
  } else if (kind == "rir") {
    inst.kind = AugKind::rir;
    inst.filter_id = j.at("filter_id").get<std::string>();
  } else if (kind == "pitch_shift") {
    inst.kind = AugKind::pitch_shift;
    inst.semitones = j.at("semitones").get<int>();
  } else {
    raise("unknown augmentation kind \"", kind, "\"");
  }
  return inst;
}

inline nlohmann::json to_json(const AppliedAugmentations& applied) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : applied.entries) entries.push_back(to_json(e));
  nlohmann::json j{{"entries", std::move(entries)}};
  if (applied.rescale_gain) j["rescale_gain"] = *applied.rescale_gain;
  return j;
}

inline AppliedAugmentations applied_augmentations_from_json(const nlohmann::json& j) {
  AppliedAugmentations applied;
  for (const auto& e : j.at("entries")) applied.entries.push_back(aug_instance_from_json(e));
  if (j.contains("rescale_gain")) applied.rescale_gain = j.at("rescale_gain").get<double>();
  return applied;
}

// ---------------------------------------------------------------------------
// Bank loading

namespace policy_detail {

inline std::vector<std::string> index_lines(const std::filesystem::path& index_path) {
  const std::string text = fsutil::read_text_file(index_path);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string raw = nl == std::string::npos ? text.substr(pos)
                                              : text.substr(pos, nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    const std::string line = kvfile::trim(raw);
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

inline const std::filesystem::path& lookup(const std::vector<std::string>& ids,
                                           const std::vector<std::filesystem::path>& paths,
                                           const std::string& id,
                                           const char* what) {
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return paths[i];
  raise("unknown ", what, " id \"", id, "\"");
}

inline audio::AudioClip load_resource(const std::filesystem::path& path, int rate) {
  return audio::resample(audio::load_wav(path), rate);
}

}  // namespace policy_detail

// Index format: one `relative/path.wav [kind]` per line, kind one of
// noise|music|speech (default noise). Paths resolve against the index file's
// directory.
inline std::array<NoiseSubset, 3> load_noise_bank(const std::filesystem::path& index_path) {
  std::array<NoiseSubset, 3> subsets;
  subsets[0].kind = NoiseKind::noise;
  subsets[1].kind = NoiseKind::music;
  subsets[2].kind = NoiseKind::speech;
  const auto root = index_path.parent_path();
  for (const auto& line : policy_detail::index_lines(index_path)) {
    const auto space = line.find_last_of(" \t");
    std::string rel = line;
    NoiseKind kind = NoiseKind::noise;
    if (space != std::string::npos) {
      const std::string tail = line.substr(space + 1);
      if (tail == "noise" || tail == "music" || tail == "speech") {
        kind = noise_kind_from_string(tail);
        rel = kvfile::trim(line.substr(0, space));
      }
    }
    auto& subset = subsets[static_cast<std::size_t>(kind)];
    subset.ids.push_back(rel);
    subset.paths.push_back(root / rel);
  }
  return subsets;
}

inline RirBank load_rir_bank(const std::filesystem::path& index_path) {
  RirBank bank;
  const auto root = index_path.parent_path();
  for (const auto& line : policy_detail::index_lines(index_path)) {
    bank.ids.push_back(line);
    bank.paths.push_back(root / line);
  }
  return bank;
}

// Policy file: `schema = 1` then p_select, semitone_min, semitone_max,
// master_seed, noise_index, rir_index. Index paths resolve against the policy
// file's directory; noise_index and rir_index may be omitted for policies
// that never draw the corresponding method.
inline AugmentationPolicy load_policy(const std::filesystem::path& path) {
  const std::string origin = path.string();
  const auto entries = kvfile::parse_kv_text(fsutil::read_text_file(path), origin);
  AugmentationPolicy policy;
  for (const auto& e : entries) {
    if (e.key == "p_select") {
      policy.p_select = kvfile::to_double(e, origin);
    } else if (e.key == "semitone_min") {
      policy.semitone_min = static_cast<int>(kvfile::to_int(e, origin));
    } else if (e.key == "semitone_max") {
      policy.semitone_max = static_cast<int>(kvfile::to_int(e, origin));
    } else if (e.key == "master_seed") {
      policy.master_seed = kvfile::to_uint(e, origin);
    } else if (e.key == "noise_index") {
      policy.noise_subsets = load_noise_bank(path.parent_path() / e.value);
    } else if (e.key == "rir_index") {
      policy.rir_bank = load_rir_bank(path.parent_path() / e.value);
    } else {
      raise(origin, ":", e.line, ": unknown policy key `", e.key, "`");
    }
  }
  validate(policy);
  return policy;
}

// ---------------------------------------------------------------------------
// Drawing and applying plans

// Draws the per-item transform list. Categories are decided in the fixed
// order additive_noise, rir, pitch_shift by independent Bernoulli(p_select)
// trials on a stream keyed by (master_seed, item_key, epoch); the same triple
// always yields the same plan regardless of call order or thread.
//
// Draw order within a category is part of the replay contract: noise draws
// subset, SNR, source clip, then crop offset; pitch redraws until the
// semitone is nonzero.
inline std::vector<AugInstance> draw_plan(const AugmentationPolicy& policy,
                                          const std::string& item_key,
                                          std::int64_t epoch) {
  validate(policy);
  Rng rng = make_stream(policy.master_seed, item_key, epoch, "augment");
  std::vector<AugInstance> plan;

  if (rng.bernoulli(policy.p_select)) {
    const auto& subset =
        policy.noise_subsets[static_cast<std::size_t>(rng.uniform_int(0, 2))];
    require(!subset.ids.empty(), "draw_plan: noise subset \"",
            to_string(subset.kind), "\" is empty");
    AugInstance inst;
    inst.kind = AugKind::additive_noise;
    inst.noise_kind = subset.kind;
    const SnrRange range = snr_range_for(subset.kind);
    inst.snr_db = rng.uniform(range.lo_db, range.hi_db);
    inst.source_id = subset.ids[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(subset.ids.size()) - 1))];
    inst.offset_frac = rng.uniform();
    plan.push_back(std::move(inst));
  }

  if (rng.bernoulli(policy.p_select)) {
    require(!policy.rir_bank.ids.empty(), "draw_plan: RIR bank is empty");
    AugInstance inst;
    inst.kind = AugKind::rir;
    inst.filter_id = policy.rir_bank.ids[static_cast<std::size_t>(rng.uniform_int(
        0, static_cast<std::int64_t>(policy.rir_bank.ids.size()) - 1))];
    plan.push_back(std::move(inst));
  }

  if (rng.bernoulli(policy.p_select)) {
    require(policy.semitone_min != 0 || policy.semitone_max != 0,
            "draw_plan: semitone range contains only 0");
    AugInstance inst;
    inst.kind = AugKind::pitch_shift;
    do {
      inst.semitones =
          static_cast<int>(rng.uniform_int(policy.semitone_min, policy.semitone_max));
    } while (inst.semitones == 0);
    plan.push_back(std::move(inst));
  }

  return plan;
}

// Applies a plan in order. The intermediate transforms run without range
// clamping; one final rescale covers the whole chain and is the only gain the
// record needs to carry (every transform in the chain is homogeneous in
// amplitude, so deferring the rescale is exact).
inline std::pair<audio::AudioClip, AppliedAugmentations> apply_plan(
    const audio::AudioClip& signal, const std::vector<AugInstance>& plan,
    const AugmentationPolicy& policy) {
  audio::AudioClip cur = signal;
  AppliedAugmentations record;
  for (const auto& inst : plan) {
    switch (inst.kind) {
      case AugKind::additive_noise: {
        const auto& subset =
            policy.noise_subsets[static_cast<std::size_t>(inst.noise_kind)];
        const auto& path = policy_detail::lookup(subset.ids, subset.paths,
                                                 inst.source_id, "noise clip");
        const auto noise = policy_detail::load_resource(path, cur.sample_rate);
        cur = noise_detail::mix_at_snr_raw(cur, noise, inst.snr_db, inst.offset_frac);
        break;
      }
      case AugKind::rir: {
        const auto& path = policy_detail::lookup(
            policy.rir_bank.ids, policy.rir_bank.paths, inst.filter_id, "RIR filter");
        const auto rir = policy_detail::load_resource(path, cur.sample_rate);
        cur = rir_detail::convolve_rir_raw(cur, rir);
        break;
      }
      case AugKind::pitch_shift:
        cur = pitch_detail::pitch_shift_raw(cur, inst.semitones);
        break;
    }
    record.entries.push_back(inst);
  }
  const double gain = audio::rescale_into_range(cur);
  if (gain != 1.0) record.rescale_gain = gain;
  return {std::move(cur), std::move(record)};
}

}  // namespace augvox::augment
