// tests/acceptance_test.cpp

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

// Acceptance gate for the release: each test checks one published behavior of
// the pipeline end to end and prints a single PASS/FAIL line. Tolerances are
// part of the contract and are not to be loosened to make a run green.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "augvox/augment/policy.hpp"
#include "augvox/cli/cli.hpp"
#include "augvox/dsp/fft.hpp"
#include "augvox/synth/generate.hpp"
#include "test_util.hpp"

namespace augvox {
namespace {

namespace fs = std::filesystem;

// Prints the criterion verdict when the test body ends, whether it ended by
// running to completion or by a fatal assertion.
class Criterion {
 public:
  Criterion(int number, std::string what) : number_(number), what_(std::move(what)) {}
  ~Criterion() {
    std::ostringstream line;
    line << "[acceptance] " << std::setfill('0') << std::setw(2) << number_
         << std::setfill(' ') << " " << std::left << std::setw(62) << what_
         << (::testing::Test::HasFailure() ? " FAIL" : " PASS");
    std::cout << line.str() << std::endl;
  }

 private:
  int number_;
  std::string what_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

augment::AugmentationPolicy full_bank_policy(double p_select) {
  augment::AugmentationPolicy policy;
  policy.p_select = p_select;
  policy.master_seed = 7;
  const augment::NoiseKind kinds[] = {augment::NoiseKind::noise,
                                      augment::NoiseKind::music,
                                      augment::NoiseKind::speech};
  for (std::size_t i = 0; i < 3; ++i) {
    policy.noise_subsets[i].kind = kinds[i];
    policy.noise_subsets[i].ids = {"clip0", "clip1"};
    policy.noise_subsets[i].paths = {"clip0.wav", "clip1.wav"};
  }
  policy.rir_bank.ids = {"room0", "room1"};
  policy.rir_bank.paths = {"room0.wav", "room1.wav"};
  return policy;
}

TEST(Acceptance, C01_MixedNoiseRemeasuresAtTheRequestedSnr) {
  Criterion crit(1, "noise mixed at a requested SNR re-measures within 0.01 dB");
  Stopwatch sw;
  Rng rng(4242);
  for (int rep = 0; rep < 100; ++rep) {
    // Targets span the full range; the endpoints are hit exactly.
    const double target =
        rep == 0 ? 0.0 : rep == 99 ? 20.0 : rng.uniform(0.0, 20.0);
    const auto signal = test::make_noise(
        static_cast<std::size_t>(rng.uniform_int(4000, 32000)), 16000,
        1000 + rep, 0.1);
    const auto noise = test::make_noise(
        static_cast<std::size_t>(rng.uniform_int(1000, 48000)), 16000,
        5000 + rep, 0.2);
    const auto mixed =
        augment::mix_at_snr(signal, noise, target, rng.uniform());

    // Amplitudes are chosen so the mix stays inside [-1, 1]; the final
    // range rescale is then a no-op and the noise component is recoverable
    // by subtraction.
    double peak = 0.0;
    std::vector<double> component(mixed.samples.size());
    for (std::size_t i = 0; i < component.size(); ++i) {
      peak = std::max(peak, std::abs(mixed.samples[i]));
      component[i] = mixed.samples[i] - signal.samples[i];
    }
    ASSERT_LE(peak, 1.0);
    const double measured =
        20.0 * std::log10(audio::rms(signal) / audio::rms(component));
    EXPECT_NEAR(measured, target, 0.01);
  }
  EXPECT_LT(sw.seconds(), 10.0);
}

TEST(Acceptance, C02_SnrDrawsStayInsideEachSubsetRange) {
  Criterion crit(2, "SNR draws stay inside 13-20 / 5-15 / 0-15 dB per subset");
  Stopwatch sw;
  const auto policy = full_bank_policy(1.0);
  std::map<augment::NoiseKind, std::vector<double>> draws;
  for (int i = 0; i < 6000; ++i) {
    const auto plan = augment::draw_plan(policy, cat("item", i), 0);
    ASSERT_FALSE(plan.empty());
    ASSERT_EQ(plan[0].kind, augment::AugKind::additive_noise);
    draws[plan[0].noise_kind].push_back(plan[0].snr_db);
  }
  for (const auto& [kind, values] : draws) {
    ASSERT_GE(values.size(), 1000u) << augment::to_string(kind);
    const auto range = augment::snr_range_for(kind);
    for (const double snr : values) {
      EXPECT_GE(snr, range.lo_db) << augment::to_string(kind);
      EXPECT_LE(snr, range.hi_db) << augment::to_string(kind);
    }
  }
  EXPECT_LT(sw.seconds(), 5.0);
}

TEST(Acceptance, C03_EachMethodJoinsAPlanAtTheConfiguredRate) {
  Criterion crit(3, "each method joins 25% of plans (rate in [0.23, 0.27])");
  Stopwatch sw;
  const auto policy = full_bank_policy(0.25);
  const int n = 10000;
  std::map<augment::AugKind, int> chosen;
  for (int i = 0; i < n; ++i)
    for (const auto& inst : augment::draw_plan(policy, cat("item", i), 0))
      ++chosen[inst.kind];
  for (const auto kind : {augment::AugKind::additive_noise, augment::AugKind::rir,
                          augment::AugKind::pitch_shift}) {
    const double rate = static_cast<double>(chosen[kind]) / n;
    EXPECT_GE(rate, 0.23);
    EXPECT_LE(rate, 0.27);
  }
  EXPECT_LT(sw.seconds(), 5.0);
}

TEST(Acceptance, C04_FftConvolutionMatchesDirectEvaluation) {
  Criterion crit(4, "FFT convolution matches direct evaluation within 1e-6");
  Stopwatch sw;
  Rng rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 4096));
    const auto m = static_cast<std::size_t>(rng.uniform_int(1, 512));
    std::vector<double> a(n), b(m);
    for (auto& v : a) v = rng.uniform(-0.5, 0.5);
    for (auto& v : b) v = rng.uniform(-0.5, 0.5);

    std::vector<double> direct(n + m - 1, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) direct[i + j] += a[i] * b[j];

    const auto fast = dsp::fft_convolve(a, b);
    ASSERT_EQ(fast.size(), direct.size());
    for (std::size_t i = 0; i < fast.size(); ++i)
      ASSERT_NEAR(fast[i], direct[i], 1e-6);
  }

  // A unit impulse must pass the signal through unchanged.
  std::vector<double> x(2048);
  for (auto& v : x) v = rng.uniform(-0.5, 0.5);
  std::vector<double> delta(512, 0.0);
  delta[0] = 1.0;
  const auto through = dsp::fft_convolve(x, delta);
  for (std::size_t i = 0; i < x.size(); ++i) ASSERT_NEAR(through[i], x[i], 1e-6);
  for (std::size_t i = x.size(); i < through.size(); ++i)
    ASSERT_NEAR(through[i], 0.0, 1e-6);
  EXPECT_LT(sw.seconds(), 30.0);
}

TEST(Acceptance, C05_PitchShiftLandsOnTheEqualTemperedTarget) {
  Criterion crit(5, "pitch shift lands on 440*2^(s/12) within 1%, duration kept");
  Stopwatch sw;
  const int rate = 16000;
  const auto tone = test::make_tone(440.0, 1.0, rate);
  const std::int64_t hop = std::llround(0.050 * rate) / 2;

  for (int s = -4; s <= 4; ++s) {
    const auto out = augment::pitch_shift(tone, s);
    if (s == 0) {
      EXPECT_EQ(out.samples, tone.samples);
      continue;
    }
    const double expected = 440.0 * std::pow(2.0, s / 12.0);
    EXPECT_NEAR(dsp::dominant_frequency(out.samples, out.sample_rate), expected,
                0.01 * expected)
        << "semitones " << s;
    EXPECT_LE(std::llabs(static_cast<std::int64_t>(out.samples.size()) -
                         static_cast<std::int64_t>(tone.samples.size())),
              hop)
        << "semitones " << s;
  }
  EXPECT_LT(sw.seconds(), 20.0);
}

TEST(Acceptance, C06_SynthesisControlDrawsStayInBoundsWithUniformMeans) {
  Criterion crit(6, "synthesis controls stay in bounds with uniform means");
  const int n = 10000;
  double sum_l = 0.0, sum_t = 0.0, sum_tdp = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto c = synth::sample_controls(cat("utt", i), 99);
    ASSERT_GE(c.length_scale, synth::kLengthScaleMin);
    ASSERT_LE(c.length_scale, synth::kLengthScaleMax);
    ASSERT_GE(c.temperature, synth::kTemperatureMin);
    ASSERT_LE(c.temperature, synth::kTemperatureMax);
    ASSERT_GE(c.duration_temperature, synth::kTemperatureMin);
    ASSERT_LE(c.duration_temperature, synth::kTemperatureMax);
    sum_l += c.length_scale;
    sum_t += c.temperature;
    sum_tdp += c.duration_temperature;
  }
  const double sigma_l = (synth::kLengthScaleMax - synth::kLengthScaleMin) /
                         std::sqrt(12.0 * n);
  const double sigma_t = (synth::kTemperatureMax - synth::kTemperatureMin) /
                         std::sqrt(12.0 * n);
  EXPECT_NEAR(sum_l / n, 1.35, 3.0 * sigma_l);
  EXPECT_NEAR(sum_t / n, 0.3335, 3.0 * sigma_t);
  EXPECT_NEAR(sum_tdp / n, 0.3335, 3.0 * sigma_t);
}

TEST(Acceptance, C07_VoiceConversionYieldsFiveDistinctTargetsPerSource) {
  Criterion crit(7, "voice conversion fans 100 sources out to 500 distinct takes");
  Stopwatch sw;
  fsutil::TempDir tmp;
  const fs::path src = tmp.path() / "src";
  fs::create_directories(src);

  corpus::Manifest in;
  in.name = "vcsrc";
  for (int i = 0; i < 100; ++i) {
    const auto clip = test::make_tone(300.0 + 5.0 * i, 0.05, 16000, 0.3);
    const fs::path wav = src / cat("s", i, ".wav");
    audio::save_wav(clip, wav);
    corpus::Utterance utt;
    utt.id = cat("s", i);
    utt.audio_path = wav.string();
    utt.transcript = cat("sentence ", i);
    utt.speaker_id = cat("spk", i % 9);
    utt.duration_s = clip.duration_s();
    in.utterances.push_back(std::move(utt));
  }

  synth::SpeakerPool pool;
  for (int i = 0; i < 7; ++i) {
    const fs::path wav = tmp.path() / cat("ref", i, ".wav");
    audio::save_wav(test::make_tone(600.0 + 20.0 * i, 0.05, 16000, 0.3), wav);
    pool.refs.push_back({cat("target", i), wav});
  }

  synth::AdapterSpec stub;
  stub.endpoint_or_command = "passthrough";
  synth::GenOptions opts;
  opts.out_dir = tmp.path() / "out";
  opts.master_seed = 3;
  opts.transfers = 5;

  const auto result = synth::gen_vc_dataset(in, pool, stub, opts);
  EXPECT_TRUE(result.skipped.empty());
  ASSERT_EQ(result.manifest.utterances.size(), 500u);

  std::map<std::string, std::set<std::string>> targets_by_source;
  for (const auto& utt : result.manifest.utterances) {
    ASSERT_TRUE(utt.provenance.has_value());
    ASSERT_TRUE(utt.provenance->source_id.has_value());
    targets_by_source[*utt.provenance->source_id].insert(utt.speaker_id);
  }
  ASSERT_EQ(targets_by_source.size(), 100u);
  for (const auto& [source, targets] : targets_by_source)
    EXPECT_EQ(targets.size(), 5u) << source;
  EXPECT_LT(sw.seconds(), 10.0);
}

// Exhaustive minimal-edit search by plain recursion; the reference the DP
// must reproduce exactly.
int exhaustive_edits(const std::vector<std::string>& ref,
                     const std::vector<std::string>& hyp, std::size_t i,
                     std::size_t j) {
  if (i == ref.size()) return static_cast<int>(hyp.size() - j);
  if (j == hyp.size()) return static_cast<int>(ref.size() - i);
  int best = exhaustive_edits(ref, hyp, i + 1, j + 1) + (ref[i] == hyp[j] ? 0 : 1);
  best = std::min(best, exhaustive_edits(ref, hyp, i + 1, j) + 1);
  best = std::min(best, exhaustive_edits(ref, hyp, i, j + 1) + 1);
  return best;
}

TEST(Acceptance, C08_EditDistanceMatchesExhaustiveSearch) {
  Criterion crit(8, "edit-distance DP matches exhaustive search on short pairs");
  Stopwatch sw;
  Rng rng(2025);
  const std::vector<std::string> alphabet{"a", "b", "c"};
  const auto random_tokens = [&rng, &alphabet]() {
    std::vector<std::string> out;
    const auto len = rng.uniform_int(0, 8);
    for (std::int64_t i = 0; i < len; ++i)
      out.push_back(alphabet[static_cast<std::size_t>(rng.uniform_int(0, 2))]);
    return out;
  };

  for (int rep = 0; rep < 2200; ++rep) {
    const auto ref = random_tokens();
    const auto hyp = random_tokens();
    const auto report = eval::wer(ref, hyp);
    EXPECT_EQ(report.substitutions + report.deletions + report.insertions,
              exhaustive_edits(ref, hyp, 0, 0));
    const auto self = eval::wer(ref, ref);
    EXPECT_EQ(self.substitutions + self.deletions + self.insertions, 0);
    EXPECT_EQ(self.wer, 0.0);
  }

  const auto fixture =
      eval::wer({"uma", "duas", "tres"}, {"uma", "dez", "tres"});
  EXPECT_EQ(fixture.substitutions, 1);
  EXPECT_EQ(fixture.ref_words, 3);
  EXPECT_NEAR(fixture.wer, 100.0 / 3.0, 1e-12);
  std::ostringstream rendered;
  rendered << std::fixed << std::setprecision(2) << fixture.wer;
  EXPECT_EQ(rendered.str(), "33.33");
  EXPECT_LT(sw.seconds(), 30.0);
}

// ---------------------------------------------------------------------------
// End-to-end determinism through the command line

int run_cli(const std::vector<std::string>& args, std::string* err = nullptr) {
  std::ostringstream out_s, err_s;
  const int code = cli::run(args, out_s, err_s);
  if (err) *err = err_s.str();
  return code;
}

std::map<std::string, std::vector<std::uint8_t>> tree_bytes(const fs::path& root) {
  std::map<std::string, std::vector<std::uint8_t>> out;
  for (const auto& entry : fs::recursive_directory_iterator(root))
    if (entry.is_regular_file())
      out[fs::relative(entry.path(), root).string()] =
          fsutil::read_binary_file(entry.path());
  return out;
}

TEST(Acceptance, C09_AssemblyReplaysBitIdenticalAndASeedChangeShows) {
  Criterion crit(9, "assembly replays hash-identical; a new seed alters audio");
  fsutil::TempDir tmp;
  const auto path = [&tmp](const char* rel) { return (tmp.path() / rel).string(); };

  // Natural corpus of 3, plus 2 sentences to synthesize.
  corpus::Manifest cv;
  cv.name = "cv";
  fs::create_directories(tmp.path() / "cv");
  for (int i = 0; i < 3; ++i) {
    const auto clip = test::make_tone(300.0 + 40.0 * i, 0.4 + 0.05 * i, 16000, 0.3);
    const fs::path wav = tmp.path() / "cv" / cat("utt", i, ".wav");
    audio::save_wav(clip, wav);
    corpus::Utterance utt;
    utt.id = cat("utt", i);
    utt.audio_path = wav.string();
    utt.transcript = cat("transcript of utt", i);
    utt.speaker_id = cat("spk", i % 3);
    utt.duration_s = clip.duration_s();
    cv.utterances.push_back(std::move(utt));
  }
  corpus::save_manifest(cv, tmp.path() / "cv.jsonl");

  corpus::Manifest sentences;
  sentences.name = "sentences";
  for (int i = 0; i < 2; ++i) {
    corpus::Utterance utt;
    utt.id = cat("sent", i);
    utt.audio_path = (tmp.path() / "cv" / "utt0.wav").string();
    utt.transcript = cat("sentence ", i);
    utt.speaker_id = "orig";
    sentences.utterances.push_back(std::move(utt));
  }
  corpus::save_manifest(sentences, tmp.path() / "sentences.jsonl");

  std::string index;
  for (int i = 0; i < 6; ++i) {
    audio::save_wav(test::make_tone(500.0 + 20.0 * i, 0.05, 16000, 0.3),
                    tmp.path() / cat("ref", i, ".wav"));
    index += cat("pool-spk", i, " ref", i, ".wav\n");
  }
  fsutil::write_text_file(tmp.path() / "pool.index", index);
  fsutil::write_text_file(tmp.path() / "stub.adapter",
                          "schema = 1\n"
                          "mode = stub\n"
                          "command = scaled:0.5\n");

  const fs::path bank = tmp.path() / "bank";
  fs::create_directories(bank);
  std::string noise_index;
  int counter = 0;
  for (const char* kind : {"noise", "music", "speech"}) {
    for (int i = 0; i < 2; ++i) {
      const std::string rel = cat(kind, i, ".wav");
      audio::save_wav(test::make_noise(
                          static_cast<std::size_t>(16000 * (0.3 + 0.2 * counter)),
                          16000, 100 + counter, 0.3),
                      bank / rel);
      noise_index += cat(rel, " ", kind, "\n");
      ++counter;
    }
  }
  fsutil::write_text_file(bank / "noise.index", noise_index);
  std::string rir_index;
  for (int i = 0; i < 2; ++i) {
    audio::AudioClip rir{std::vector<double>(400, 0.0), 16000};
    rir.samples[0] = 1.0;
    rir.samples[120 + 60 * i] = 0.4;
    audio::save_wav(rir, bank / cat("rir", i, ".wav"));
    rir_index += cat("rir", i, ".wav\n");
  }
  fsutil::write_text_file(bank / "rir.index", rir_index);
  fsutil::write_text_file(tmp.path() / "exp.policy",
                          "schema = 1\n"
                          "p_select = 1.0\n"
                          "master_seed = 41\n"
                          "noise_index = bank/noise.index\n"
                          "rir_index = bank/rir.index\n");

  // Synthetic components, generated once.
  ASSERT_EQ(run_cli({"generate", "clone", "--in", path("cv.jsonl"), "--adapter",
                     path("stub.adapter"), "--out", path("cv_clone"), "--seed",
                     "11"}),
            0);
  ASSERT_EQ(run_cli({"generate", "gen-tts", "--in", path("sentences.jsonl"),
                     "--pool", path("pool.index"), "--adapter",
                     path("stub.adapter"), "--out", path("gen_tts"), "--seed",
                     "11"}),
            0);
  ASSERT_EQ(run_cli({"generate", "gen-vc", "--in", path("gen_tts/manifest.jsonl"),
                     "--pool", path("pool.index"), "--adapter",
                     path("stub.adapter"), "--out", path("gen_vc"), "--seed",
                     "11", "--transfers", "5"}),
            0);

  fsutil::write_text_file(tmp.path() / "exp.recipe",
                          "schema = 1\n"
                          "name = full-mix\n"
                          "component = cv.jsonl\n"
                          "component = cv_clone/manifest.jsonl\n"
                          "component = gen_tts/manifest.jsonl\n"
                          "component = gen_vc/manifest.jsonl\n"
                          "augmentation = exp.policy\n");

  std::string err;
  ASSERT_EQ(run_cli({"assemble", "--recipe", path("exp.recipe"), "--out",
                     path("asm_a"), "--seed", "11"},
                    &err),
            0)
      << err;
  ASSERT_EQ(run_cli({"assemble", "--recipe", path("exp.recipe"), "--out",
                     path("asm_b"), "--seed", "11"}),
            0);
  ASSERT_EQ(run_cli({"assemble", "--recipe", path("exp.recipe"), "--out",
                     path("asm_c"), "--seed", "12"}),
            0);

  const auto tree_a = tree_bytes(tmp.path() / "asm_a");
  const auto tree_b = tree_bytes(tmp.path() / "asm_b");
  EXPECT_EQ(tree_a.size(), 19u);  // 18 audio files + the manifest
  EXPECT_TRUE(tree_a == tree_b);

  const auto tree_c = tree_bytes(tmp.path() / "asm_c");
  ASSERT_EQ(tree_c.size(), tree_a.size());
  int changed_audio = 0;
  for (const auto& [rel, bytes] : tree_a) {
    ASSERT_TRUE(tree_c.count(rel)) << rel;
    if (rel.rfind("audio/", 0) == 0 && tree_c.at(rel) != bytes) ++changed_audio;
  }
  EXPECT_GE(changed_audio, 1);
}

TEST(Acceptance, C10_HourAccountingIsAdditiveAndTrimAware) {
  Criterion crit(10, "hours add under merge; trimmed padding drops within 5%");

  std::vector<corpus::Manifest> parts(3);
  double expected_hours = 0.0;
  for (int p = 0; p < 3; ++p) {
    parts[p].name = cat("part", p);
    for (int i = 0; i < 4; ++i) {
      corpus::Utterance utt;
      utt.id = cat("p", p, "u", i);
      utt.audio_path = cat("p", p, "u", i, ".wav");
      utt.transcript = "words";
      utt.speaker_id = "spk";
      utt.duration_s = 0.123456789 * (1 + p) + 0.987654321 * i;
      expected_hours += *utt.duration_s / 3600.0;
      parts[p].utterances.push_back(std::move(utt));
    }
  }
  const auto merged = corpus::merge(parts, "all");
  EXPECT_NEAR(corpus::total_hours(merged), expected_hours, 1e-9);
  double part_sum = 0.0;
  for (const auto& part : parts) part_sum += corpus::total_hours(part);
  EXPECT_NEAR(corpus::total_hours(merged), part_sum, 1e-9);

  // A corpus with known leading/trailing silence loses that padding when
  // preprocessed; only the configured 200 ms guard on each side remains.
  fsutil::TempDir tmp;
  const fs::path src = tmp.path() / "src";
  fs::create_directories(src);
  const int rate = 16000;
  const double pad_s = 6.0;
  const int clips = 4;
  corpus::Manifest in;
  in.name = "padded";
  for (int i = 0; i < clips; ++i) {
    const auto tone = test::make_tone(350.0 + 60.0 * i, 1.0, rate, 0.3);
    std::vector<double> samples(static_cast<std::size_t>(pad_s * rate), 0.0);
    samples.insert(samples.end(), tone.samples.begin(), tone.samples.end());
    samples.insert(samples.end(), static_cast<std::size_t>(pad_s * rate), 0.0);
    const audio::AudioClip clip{std::move(samples), rate};
    const fs::path wav = src / cat("p", i, ".wav");
    audio::save_wav(clip, wav);
    corpus::Utterance utt;
    utt.id = cat("p", i);
    utt.audio_path = wav.string();
    utt.transcript = "words";
    utt.speaker_id = "spk";
    utt.duration_s = clip.duration_s();
    in.utterances.push_back(std::move(utt));
  }
  const double padded_hours = clips * 2.0 * pad_s / 3600.0;
  const auto result =
      corpus::preprocess_corpus(in, audio::PreprocessConfig{}, tmp.path() / "out");
  ASSERT_EQ(result.manifest.utterances.size(), in.utterances.size());
  const double removed =
      corpus::total_hours(in) - corpus::total_hours(result.manifest);
  EXPECT_NEAR(removed, padded_hours, 0.05 * padded_hours);
}

TEST(Acceptance, C11_ReportTableRendersReferenceFiguresVerbatim) {
  Criterion crit(11, "report table renders reference figures verbatim");
  const auto cell = [](double percent) {
    eval::WerReport report;
    report.ref_words = 10000;
    report.substitutions = std::llround(percent * 100.0);
    report.wer = percent;
    return report;
  };
  const auto rendered = eval::report_table(
      {"set-a", "set-b"}, {{"exp-1", {cell(20.39), cell(24.80)}},
                           {"exp-2", {cell(33.96), cell(36.59)}},
                           {"exp-3", {cell(20.20), cell(19.46)}}});

  for (const char* value :
       {"20.39", "24.80", "33.96", "36.59", "20.20", "19.46"})
    EXPECT_NE(rendered.text.find(value), std::string::npos) << value;
  EXPECT_NE(rendered.csv.find("experiment,set-a,set-b\n"), std::string::npos);
  EXPECT_NE(rendered.csv.find("exp-1,20.39,24.80\n"), std::string::npos);
  EXPECT_NE(rendered.csv.find("exp-2,33.96,36.59\n"), std::string::npos);
  EXPECT_NE(rendered.csv.find("exp-3,20.20,19.46\n"), std::string::npos);
}

}  // namespace
}  // namespace augvox
