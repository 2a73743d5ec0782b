// include/augvox/synth/generate.hpp

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
#include <fstream>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvox/corpus/manifest.hpp"
#include "augvox/corpus/preprocess.hpp"
#include "augvox/corpus/skip.hpp"
#include "augvox/rng.hpp"
#include "augvox/synth/adapter.hpp"
#include "augvox/synth/controls.hpp"
#include "augvox/util/parallel.hpp"

namespace augvox::synth {

struct GenOptions {
  std::filesystem::path out_dir;
  std::uint64_t master_seed = 0;
  int transfers = 5;
  double max_failure_fraction = 0.01;
  int workers = 1;
  bool resume = false;
  int working_rate = 16000;
};

struct GenResult {
  corpus::Manifest manifest;
  std::vector<corpus::SkipEntry> skipped;
};

namespace generate_detail {

struct Job {
  corpus::Utterance skeleton;  // audio_path and duration filled by the engine
  std::function<audio::AudioClip()> render;
};

// First k of a seeded uniform permutation of {0..n-1}: the k draws are
// pairwise distinct by construction.
inline std::vector<std::size_t> draw_distinct_indices(Rng& rng, std::size_t n,
                                                      int k) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(
        rng.uniform_int(i, static_cast<std::int64_t>(n) - 1));
    std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
  }
  idx.resize(static_cast<std::size_t>(k));
  return idx;
}

// Renders every job's audio into out_dir/audio and assembles the manifest in
// job order. Completed items are checkpointed so an interrupted run picks up
// where it stopped; per-item adapter failures become skip entries unless they
// exceed the failure budget.
inline GenResult run_generation(const std::string& stage, std::vector<Job> jobs,
                                corpus::Split split, const std::string& name,
                                const GenOptions& opts) {
  namespace fs = std::filesystem;
  require(!opts.out_dir.empty(), stage, ": no output directory configured");
  require(opts.workers >= 1, stage, ": workers must be >= 1");
  require(opts.max_failure_fraction >= 0.0 && opts.max_failure_fraction <= 1.0,
          stage, ": max_failure_fraction outside [0, 1]");
  fs::create_directories(opts.out_dir / "audio");

  // The checkpoint header pins (stage, seed): a checkpoint from a different
  // run must never silently seed this one.
  const fs::path ckpt_path = opts.out_dir / "checkpoint.jsonl";
  std::unordered_map<std::string, corpus::Utterance> cache;
  const bool resuming = opts.resume && fs::exists(ckpt_path);
  if (resuming) {
    const auto lines =
        corpus::manifest_detail::split_lines(fsutil::read_text_file(ckpt_path));
    require(!lines.empty(), ckpt_path.string(), ": empty checkpoint");
    nlohmann::json header;
    try {
      header = nlohmann::json::parse(lines[0]);
    } catch (const nlohmann::json::exception& e) {
      raise(ckpt_path.string(), ": malformed checkpoint header: ", e.what());
    }
    require(header.value("stage", "") == stage &&
                header.value("master_seed", std::uint64_t{0}) == opts.master_seed,
            ckpt_path.string(), ": checkpoint was written by a different run ",
            "(stage or seed mismatch); clear the output directory to restart");
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      corpus::Utterance utt;
      try {
        utt = corpus::utterance_from_json(nlohmann::json::parse(lines[i]));
      } catch (const nlohmann::json::exception& e) {
        raise(ckpt_path.string(), ":", i + 1, ": malformed checkpoint entry: ",
              e.what());
      }
      if (fs::path(utt.audio_path).is_relative())
        utt.audio_path = (opts.out_dir / utt.audio_path).string();
      // An entry whose audio vanished is treated as not done.
      if (fs::exists(utt.audio_path)) cache.emplace(utt.id, std::move(utt));
    }
  }

  std::vector<std::string> ids;
  ids.reserve(jobs.size());
  for (const auto& job : jobs) ids.push_back(job.skeleton.id);
  const auto stems = corpus::assign_stems(ids);

  std::ofstream ckpt(ckpt_path, resuming ? std::ios::app : std::ios::trunc);
  require(ckpt.good(), "cannot write checkpoint: ", ckpt_path.string());
  if (!resuming) {
    ckpt << nlohmann::json{{"stage", stage}, {"master_seed", opts.master_seed}}
                .dump()
         << "\n";
    ckpt.flush();
  }

  struct Item {
    corpus::Utterance utt;
    corpus::SkipEntry skip;
    bool failed = false;
    bool fresh = false;
  };

  GenResult result;
  result.manifest.split = split;
  result.manifest.name = name;

  parallel::for_ordered(
      jobs.size(), opts.workers,
      [&](std::size_t i) -> Item {
        const Job& job = jobs[i];
        if (const auto it = cache.find(job.skeleton.id); it != cache.end())
          return {it->second, {}, false, false};
        try {
          const audio::AudioClip clip = job.render();
          const fs::path wav = opts.out_dir / "audio" / (stems[i] + ".wav");
          audio::save_wav(clip, wav);
          corpus::Utterance utt = job.skeleton;
          utt.audio_path = wav.string();
          utt.duration_s = clip.duration_s();
          corpus::validate(utt);
          return {std::move(utt), {}, false, true};
        } catch (const std::exception& e) {
          return {{}, {job.skeleton.id, stage, e.what()}, true, false};
        }
      },
      [&](std::size_t, Item&& item) {
        if (item.failed) {
          result.skipped.push_back(std::move(item.skip));
          return;
        }
        if (item.fresh) {
          nlohmann::json j = corpus::to_json(item.utt);
          if (const auto rel = corpus::manifest_detail::relative_inside(
                  item.utt.audio_path, opts.out_dir))
            j["audio_path"] = *rel;
          ckpt << j.dump() << "\n";
          ckpt.flush();
        }
        result.manifest.utterances.push_back(std::move(item.utt));
      });

  corpus::write_skip_report(result.skipped, opts.out_dir / "skips.jsonl");
  if (!jobs.empty()) {
    const double fraction =
        static_cast<double>(result.skipped.size()) / static_cast<double>(jobs.size());
    if (fraction > opts.max_failure_fraction)
      raise(stage, ": ", result.skipped.size(), " of ", jobs.size(),
            " generation calls failed (budget ", opts.max_failure_fraction,
            "); first failure: ", result.skipped.front().id, ": ",
            result.skipped.front().reason);
  }
  corpus::save_manifest(result.manifest, opts.out_dir / "manifest.jsonl");
  return result;
}

}  // namespace generate_detail

// Re-speaks every utterance in its own speaker's voice: the utterance audio
// doubles as the speaker reference, transcript and speaker carry over,
// controls are sampled per output item.
inline GenResult clone_corpus(const corpus::Manifest& src, const AdapterSpec& adapter,
                              const GenOptions& opts) {
  std::vector<generate_detail::Job> jobs;
  jobs.reserve(src.utterances.size());
  for (const auto& utt : src.utterances) {
    generate_detail::Job job;
    job.skeleton.id = cat(utt.id, ".tts.", utt.speaker_id);
    job.skeleton.transcript = utt.transcript;
    job.skeleton.speaker_id = utt.speaker_id;
    job.skeleton.language = utt.language;
    job.skeleton.origin = corpus::Origin::tts;
    job.skeleton.provenance = corpus::Provenance{};
    job.skeleton.provenance->source_id = utt.id;
    const SynthesisControls controls =
        sample_controls(job.skeleton.id, opts.master_seed);
    job.skeleton.provenance->controls = controls;
    const SpeakerRef ref{utt.speaker_id, utt.audio_path};
    const std::string text = utt.transcript;
    const int rate = opts.working_rate;
    job.render = [&adapter, text, ref, controls, rate]() {
      return synthesize(adapter, text, ref, controls, rate);
    };
    jobs.push_back(std::move(job));
  }
  return generate_detail::run_generation("clone", std::move(jobs), src.split,
                                         cat(src.name, ".clone"), opts);
}

// Synthesizes every sentence with a speaker drawn uniformly from the pool.
inline GenResult gen_tts_dataset(const corpus::Manifest& sentences,
                                 const SpeakerPool& pool, const AdapterSpec& adapter,
                                 const GenOptions& opts) {
  validate(pool);
  std::vector<generate_detail::Job> jobs;
  jobs.reserve(sentences.utterances.size());
  for (const auto& utt : sentences.utterances) {
    Rng rng = make_stream(opts.master_seed, utt.id, 0, "speaker");
    const auto& ref = pool.refs[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(pool.refs.size()) - 1))];

    generate_detail::Job job;
    job.skeleton.id = cat(utt.id, ".tts.", ref.speaker_id);
    job.skeleton.transcript = utt.transcript;
    job.skeleton.speaker_id = ref.speaker_id;
    job.skeleton.language = utt.language;
    job.skeleton.origin = corpus::Origin::tts;
    job.skeleton.provenance = corpus::Provenance{};
    job.skeleton.provenance->source_id = utt.id;
    const SynthesisControls controls =
        sample_controls(job.skeleton.id, opts.master_seed);
    job.skeleton.provenance->controls = controls;
    const std::string text = utt.transcript;
    const int rate = opts.working_rate;
    job.render = [&adapter, text, ref, controls, rate]() {
      return synthesize(adapter, text, ref, controls, rate);
    };
    jobs.push_back(std::move(job));
  }
  return generate_detail::run_generation("gen-tts", std::move(jobs), sentences.split,
                                         cat(sentences.name, ".gen-tts"), opts);
}

// Converts every sample to `transfers` voices drawn without replacement, so
// each source gets that many distinct target speakers.
inline GenResult gen_vc_dataset(const corpus::Manifest& tts_corpus,
                                const SpeakerPool& pool, const AdapterSpec& adapter,
                                const GenOptions& opts) {
  validate(pool);
  require(opts.transfers >= 1, "gen-vc: transfers must be >= 1");
  require(static_cast<std::size_t>(opts.transfers) <= pool.refs.size(),
          "gen-vc: pool has ", pool.refs.size(), " speakers but transfers is ",
          opts.transfers);

  std::vector<generate_detail::Job> jobs;
  jobs.reserve(tts_corpus.utterances.size() *
               static_cast<std::size_t>(opts.transfers));
  for (const auto& utt : tts_corpus.utterances) {
    Rng rng = make_stream(opts.master_seed, utt.id, 0, "vc_targets");
    const auto targets = generate_detail::draw_distinct_indices(
        rng, pool.refs.size(), opts.transfers);
    for (int k = 0; k < opts.transfers; ++k) {
      const auto& ref = pool.refs[targets[static_cast<std::size_t>(k)]];
      generate_detail::Job job;
      job.skeleton.id = cat(utt.id, ".vc", k + 1, ".", ref.speaker_id);
      job.skeleton.transcript = utt.transcript;
      job.skeleton.speaker_id = ref.speaker_id;
      job.skeleton.language = utt.language;
      job.skeleton.origin = corpus::Origin::vc;
      job.skeleton.provenance = corpus::Provenance{};
      job.skeleton.provenance->source_id = utt.id;
      const std::string source_wav = utt.audio_path;
      const int rate = opts.working_rate;
      job.render = [&adapter, source_wav, ref, rate]() {
        return convert_voice(adapter, audio::load_wav(source_wav), ref, rate);
      };
      jobs.push_back(std::move(job));
    }
  }
  return generate_detail::run_generation("gen-vc", std::move(jobs),
                                         tts_corpus.split,
                                         cat(tts_corpus.name, ".gen-vc"), opts);
}

}  // namespace augvox::synth
