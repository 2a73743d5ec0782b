// include/augvox/corpus/recipe.hpp

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
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "augvox/audio/wav.hpp"
#include "augvox/augment/policy.hpp"
#include "augvox/common.hpp"
#include "augvox/corpus/manifest.hpp"
#include "augvox/corpus/preprocess.hpp"
#include "augvox/util/fs.hpp"
#include "augvox/util/kvfile.hpp"
#include "augvox/util/parallel.hpp"

namespace augvox::corpus {

struct RecipeComponent {
  std::filesystem::path manifest_path;
  bool include = true;
};

// Declarative dataset composition: which manifests to merge and, optionally,
// which augmentation policy to run over the merged result.
struct ExperimentRecipe {
  std::string name;
  std::vector<RecipeComponent> components;
  std::optional<std::filesystem::path> augmentation;
};

inline void validate(const ExperimentRecipe& recipe) {
  require(!recipe.name.empty(), "recipe: missing name");
  require(!recipe.components.empty(), "recipe: no components");
}

// Recipe file: `schema = 1`, a `name`, one `component = <path> [off]` line per
// manifest (a trailing `off` keeps the line as documentation without merging
// it), and at most one `augmentation = <policy path>`. Paths resolve against
// the recipe file's directory.
inline ExperimentRecipe load_recipe(const std::filesystem::path& path) {
  const std::string origin = path.string();
  const auto dir = path.parent_path();
  const auto entries = kvfile::parse_kv_text(fsutil::read_text_file(path), origin);
  ExperimentRecipe recipe;
  for (const auto& e : entries) {
    if (e.key == "name") {
      recipe.name = e.value;
    } else if (e.key == "component") {
      RecipeComponent comp;
      std::string rel = e.value;
      const auto space = rel.find_last_of(" \t");
      if (space != std::string::npos) {
        const std::string tail = kvfile::trim(rel.substr(space + 1));
        if (tail == "off" || tail == "on") {
          comp.include = tail == "on";
          rel = kvfile::trim(rel.substr(0, space));
        }
      }
      require(!rel.empty(), origin, ":", e.line, ": component with empty path");
      comp.manifest_path = dir / rel;
      recipe.components.push_back(std::move(comp));
    } else if (e.key == "augmentation") {
      require(!recipe.augmentation, origin, ":", e.line,
              ": augmentation given twice");
      recipe.augmentation = dir / e.value;
    } else {
      raise(origin, ":", e.line, ": unknown recipe key `", e.key, "`");
    }
  }
  validate(recipe);
  return recipe;
}

// Builds the dataset a recipe describes for one training epoch. Components
// merge in file order; without a policy the result is that merge untouched.
// With a policy, each utterance's transform plan is drawn from
// (policy seed, utterance id, epoch), applied, and the resulting audio is
// written under out_dir/audio with the plan recorded in provenance, so two
// runs with identical inputs produce byte-identical trees. The merged
// manifest is written to out_dir/manifest.jsonl either way. seed_override,
// when set, replaces the policy file's master_seed.
inline Manifest materialize_recipe(const ExperimentRecipe& recipe,
                                   std::int64_t epoch,
                                   const std::filesystem::path& out_dir,
                                   int workers = 1,
                                   std::optional<std::uint64_t> seed_override =
                                       std::nullopt) {
  namespace fs = std::filesystem;
  validate(recipe);

  std::vector<Manifest> components;
  for (const auto& comp : recipe.components) {
    if (!comp.include) continue;
    components.push_back(load_manifest_jsonl(comp.manifest_path));
  }
  require(!components.empty(), "recipe \"", recipe.name,
          "\": every component is off");
  Manifest merged = merge(components, recipe.name);

  fs::create_directories(out_dir);
  if (recipe.augmentation) {
    augment::AugmentationPolicy policy =
        augment::load_policy(*recipe.augmentation);
    if (seed_override) policy.master_seed = *seed_override;
    fs::create_directories(out_dir / "audio");
    const auto stems = assign_stems(merged);

    parallel::for_ordered(
        merged.utterances.size(), workers,
        [&](std::size_t i) -> Utterance {
          Utterance utt = merged.utterances[i];
          const auto plan = augment::draw_plan(policy, utt.id, epoch);
          const audio::AudioClip clip = audio::load_wav(utt.audio_path);
          auto [augmented, record] = augment::apply_plan(clip, plan, policy);
          const fs::path wav_path = out_dir / "audio" / (stems[i] + ".wav");
          audio::save_wav(augmented, wav_path);
          utt.audio_path = wav_path.string();
          utt.duration_s = augmented.duration_s();
          if (!utt.provenance) utt.provenance = Provenance{};
          utt.provenance->augmentations = std::move(record);
          return utt;
        },
        [&](std::size_t i, Utterance&& utt) {
          merged.utterances[i] = std::move(utt);
        });
  }

  save_manifest(merged, out_dir / "manifest.jsonl");
  return merged;
}

}  // namespace augvox::corpus
