// samples/make_demo_data.cpp

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

// Builds a self-contained demo workspace: two tiny tone corpora, an
// augmentation bank with indexes, a speaker pool, and a decode to score, so
// the walkthrough in samples/demo.sh runs without any external data.

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvox/audio/wav.hpp"
#include "augvox/common.hpp"
#include "augvox/corpus/manifest.hpp"
#include "augvox/rng.hpp"
#include "augvox/util/fs.hpp"

namespace {

namespace fs = std::filesystem;
constexpr int kRate = 16000;
constexpr double kPi = 3.14159265358979323846;

std::vector<double> sine(double freq_hz, double seconds, double amplitude) {
  std::vector<double> out(static_cast<std::size_t>(seconds * kRate));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = amplitude * std::sin(2.0 * kPi * freq_hz * static_cast<double>(i) / kRate);
  return out;
}

// A tone with leading and trailing silence, so preprocessing has padding to
// trim and the hour accounting visibly shrinks.
augvox::audio::AudioClip padded_tone(double freq_hz, double seconds) {
  std::vector<double> samples(static_cast<std::size_t>(0.3 * kRate), 0.0);
  const auto body = sine(freq_hz, seconds, 0.28);
  samples.insert(samples.end(), body.begin(), body.end());
  samples.insert(samples.end(), static_cast<std::size_t>(0.3 * kRate), 0.0);
  return {std::move(samples), kRate};
}

augvox::audio::AudioClip white_noise(double seconds, std::uint64_t seed) {
  augvox::Rng rng(seed);
  std::vector<double> samples(static_cast<std::size_t>(seconds * kRate));
  for (auto& s : samples) s = rng.uniform(-0.3, 0.3);
  return {std::move(samples), kRate};
}

augvox::audio::AudioClip chord(double root_hz, double seconds) {
  auto samples = sine(root_hz, seconds, 0.18);
  const auto third = sine(root_hz * 1.26, seconds, 0.14);
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] += third[i];
  return {std::move(samples), kRate};
}

// Noise with a slow amplitude envelope, standing in for background chatter.
augvox::audio::AudioClip babble(double seconds, std::uint64_t seed) {
  auto clip = white_noise(seconds, seed);
  for (std::size_t i = 0; i < clip.samples.size(); ++i)
    clip.samples[i] *=
        0.6 + 0.4 * std::sin(2.0 * kPi * 3.0 * static_cast<double>(i) / kRate);
  return clip;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_demo_data <out_dir>\n";
    return 1;
  }
  const fs::path root = argv[1];

  const std::vector<std::string> sentences{
      "the first sample of the demonstration tour",
      "a second sentence with a few more words in it",
      "every clip here is a synthetic tone",
      "real corpora replace these in actual use",
      "the pipeline treats them exactly the same",
      "padding at both ends gets trimmed away",
      "speakers rotate across the tiny corpus",
      "and this closes the natural training set"};

  augvox::corpus::Manifest cv;
  cv.name = "cv";
  fs::create_directories(root / "cv_raw");
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto clip = padded_tone(220.0 + 30.0 * static_cast<double>(i),
                                  0.8 + 0.05 * static_cast<double>(i));
    const fs::path wav = root / "cv_raw" / augvox::cat("cv", i, ".wav");
    augvox::audio::save_wav(clip, wav);
    augvox::corpus::Utterance utt;
    utt.id = augvox::cat("cv", i);
    utt.audio_path = wav.string();
    utt.transcript = sentences[i];
    utt.speaker_id = augvox::cat("voice", i % 3);
    utt.language = "en";
    utt.duration_s = clip.duration_s();
    cv.utterances.push_back(std::move(utt));
  }
  augvox::corpus::save_manifest(cv, root / "cv_raw.jsonl");

  augvox::corpus::Manifest studio;
  studio.name = "tts-corpus";
  fs::create_directories(root / "tts_raw");
  for (int i = 0; i < 4; ++i) {
    const auto clip = padded_tone(340.0 + 25.0 * i, 0.9);
    const fs::path wav = root / "tts_raw" / augvox::cat("studio", i, ".wav");
    augvox::audio::save_wav(clip, wav);
    augvox::corpus::Utterance utt;
    utt.id = augvox::cat("studio", i);
    utt.audio_path = wav.string();
    utt.transcript = augvox::cat("studio recording number ", i);
    utt.speaker_id = "studio";
    utt.language = "en";
    utt.duration_s = clip.duration_s();
    studio.utterances.push_back(std::move(utt));
  }
  augvox::corpus::save_manifest(studio, root / "tts_raw.jsonl");

  const fs::path bank = root / "bank";
  fs::create_directories(bank);
  std::string noise_index;
  for (int i = 0; i < 2; ++i) {
    augvox::audio::save_wav(white_noise(2.0 + i, 11 + i),
                            bank / augvox::cat("noise", i, ".wav"));
    noise_index += augvox::cat("noise", i, ".wav noise\n");
    augvox::audio::save_wav(chord(196.0 + 65.0 * i, 2.5),
                            bank / augvox::cat("music", i, ".wav"));
    noise_index += augvox::cat("music", i, ".wav music\n");
    augvox::audio::save_wav(babble(2.0, 23 + i),
                            bank / augvox::cat("speech", i, ".wav"));
    noise_index += augvox::cat("speech", i, ".wav speech\n");
  }
  augvox::fsutil::write_text_file(bank / "noise.index", noise_index);

  std::string rir_index;
  for (int i = 0; i < 2; ++i) {
    augvox::audio::AudioClip rir{std::vector<double>(1600, 0.0), kRate};
    rir.samples[0] = 1.0;
    rir.samples[static_cast<std::size_t>(320 + 160 * i)] = 0.5;
    rir.samples[static_cast<std::size_t>(800 + 320 * i)] = 0.25;
    augvox::audio::save_wav(rir, bank / augvox::cat("room", i, ".wav"));
    rir_index += augvox::cat("room", i, ".wav\n");
  }
  augvox::fsutil::write_text_file(bank / "rir.index", rir_index);

  fs::create_directories(root / "refs");
  std::string pool_index;
  for (int i = 0; i < 6; ++i) {
    augvox::audio::save_wav(
        augvox::audio::AudioClip{sine(480.0 + 22.0 * i, 0.3, 0.3), kRate},
        root / "refs" / augvox::cat("ext", i, ".wav"));
    pool_index += augvox::cat("ext", i, " refs/ext", i, ".wav\n");
  }
  augvox::fsutil::write_text_file(root / "speakers.index", pool_index);

  // A decode of the natural corpus with two deliberate word errors, for the
  // scoring step of the tour.
  std::string hyp;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::string text = sentences[i];
    if (i == 1) text = "a second sentence with a few more birds in it";
    if (i == 5) text = "padding at both ends gets trimmed along";
    hyp += nlohmann::json{{"id", augvox::cat("cv", i)}, {"hypothesis", text}}.dump();
    hyp += "\n";
  }
  augvox::fsutil::write_text_file(root / "hyp.jsonl", hyp);

  std::cout << "demo data written under " << root.string() << "\n"
            << "  cv_raw.jsonl       natural corpus, " << cv.utterances.size()
            << " utterances\n"
            << "  tts_raw.jsonl      single-speaker corpus, "
            << studio.utterances.size() << " utterances\n"
            << "  bank/              noise and room-response indexes\n"
            << "  speakers.index     6 reference voices\n"
            << "  hyp.jsonl          decode to score against the references\n";
  return 0;
}
