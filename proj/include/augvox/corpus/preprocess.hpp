// include/augvox/corpus/preprocess.hpp

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

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "augvox/audio/preprocess.hpp"
#include "augvox/audio/wav.hpp"
#include "augvox/corpus/manifest.hpp"
#include "augvox/corpus/skip.hpp"
#include "augvox/util/fs.hpp"
#include "augvox/util/parallel.hpp"

namespace augvox::corpus {

// Deterministic audio file name for each id, collision-free even when
// sanitization maps distinct ids to the same stem.
inline std::vector<std::string> assign_stems(const std::vector<std::string>& ids) {
  std::vector<std::string> stems;
  stems.reserve(ids.size());
  std::unordered_set<std::string> used;
  for (const auto& id : ids) {
    const std::string base = fsutil::sanitize_stem(id);
    std::string stem = base;
    // Suffix until free; a literal "-2" in some other id may already hold
    // the first candidate.
    for (int n = 2; !used.insert(stem).second; ++n) stem = cat(base, "-", n);
    stems.push_back(std::move(stem));
  }
  return stems;
}

inline std::vector<std::string> assign_stems(const Manifest& manifest) {
  std::vector<std::string> ids;
  ids.reserve(manifest.utterances.size());
  for (const auto& utt : manifest.utterances) ids.push_back(utt.id);
  return assign_stems(ids);
}

struct PreprocessCorpusResult {
  Manifest manifest;
  std::vector<SkipEntry> skipped;
};

// Optional external denoiser invoked between load and the conditioning
// chain: the command template's {in} and {out} are replaced with WAV paths.
struct DenoiseHook {
  std::string command_template;
};

namespace preprocess_detail {

inline std::string substitute(std::string tmpl, const std::string& key,
                              const std::string& value) {
  const std::string token = "{" + key + "}";
  std::size_t pos;
  while ((pos = tmpl.find(token)) != std::string::npos)
    tmpl.replace(pos, token.size(), value);
  return tmpl;
}

}  // namespace preprocess_detail

// Conditions every utterance's audio (resample, trim silence, normalize) and
// rewrites it under out_dir/audio. Utterances whose audio cannot be processed
// (unreadable, all-silent) are dropped and listed in out_dir/skips.jsonl.
// Parallel across utterances; output identical for any worker count.
inline PreprocessCorpusResult preprocess_corpus(
    const Manifest& manifest, const audio::PreprocessConfig& config,
    const std::filesystem::path& out_dir, int workers = 1,
    const std::optional<DenoiseHook>& denoise = std::nullopt) {
  namespace fs = std::filesystem;
  audio::validate(config);
  fs::create_directories(out_dir / "audio");

  const auto stems = assign_stems(manifest);

  PreprocessCorpusResult result;
  result.manifest.split = manifest.split;
  result.manifest.name = manifest.name;

  using ItemResult = std::variant<Utterance, SkipEntry>;
  parallel::for_ordered(
      manifest.utterances.size(), workers,
      [&](std::size_t i) -> ItemResult {
        const Utterance& utt = manifest.utterances[i];
        try {
          audio::AudioClip clip = audio::load_wav(utt.audio_path);
          if (denoise) {
            // The hook runs on a temp copy at the source rate; the main chain
            // picks up its output.
            fsutil::TempDir tmp("augvox-denoise");
            const auto in_path = tmp.path() / "in.wav";
            const auto out_path = tmp.path() / "out.wav";
            audio::save_wav(clip, in_path);
            std::string cmd = preprocess_detail::substitute(
                denoise->command_template, "in", in_path.string());
            cmd = preprocess_detail::substitute(cmd, "out", out_path.string());
            const int rc = std::system(cmd.c_str());
            require(rc == 0, "denoise command failed with status ", rc);
            clip = audio::load_wav(out_path);
          }
          clip = audio::preprocess(clip, config);
          const fs::path wav_path = out_dir / "audio" / (stems[i] + ".wav");
          audio::save_wav(clip, wav_path);
          Utterance out = utt;
          out.audio_path = wav_path.string();
          out.duration_s = clip.duration_s();
          return out;
        } catch (const std::exception& e) {
          return SkipEntry{utt.id, "preprocess", e.what()};
        }
      },
      [&](std::size_t, ItemResult&& item) {
        if (std::holds_alternative<Utterance>(item)) {
          result.manifest.utterances.push_back(std::get<Utterance>(std::move(item)));
        } else {
          result.skipped.push_back(std::get<SkipEntry>(std::move(item)));
        }
      });

  write_skip_report(result.skipped, out_dir / "skips.jsonl");
  return result;
}

}  // namespace augvox::corpus
