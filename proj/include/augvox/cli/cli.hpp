// include/augvox/cli/cli.hpp

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

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "augvox/augment/policy.hpp"
#include "augvox/common.hpp"
#include "augvox/corpus/manifest.hpp"
#include "augvox/corpus/preprocess.hpp"
#include "augvox/corpus/recipe.hpp"
#include "augvox/eval/wer.hpp"
#include "augvox/synth/adapter.hpp"
#include "augvox/synth/generate.hpp"
#include "augvox/util/fs.hpp"
#include "augvox/util/kvfile.hpp"

namespace augvox::cli {

// Values an on-disk config file may supply. Every field is optional so the
// precedence chain (flag > AUGVOX_* env > config file > built-in default) can
// tell "set to the default" apart from "not set".
struct FileConfig {
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<int> working_rate;
  std::optional<std::filesystem::path> adapter;
  std::optional<std::filesystem::path> speaker_pool;
};

// Settings shared by every subcommand, after precedence resolution. seed
// stays unset when no flag, env var, or config file supplied one; commands
// whose inputs carry their own seed (augmentation policies) fall back to
// that, everything else falls back to 0.
struct GlobalConfig {
  std::optional<std::uint64_t> seed;
  int workers = 1;
  int working_rate = 16000;
  std::optional<std::filesystem::path> adapter;
  std::optional<std::filesystem::path> speaker_pool;
};

// Config file: `schema = 1`, then any of seed / workers / working_rate /
// adapter / speaker_pool. Paths resolve against the config file's directory.
inline FileConfig load_file_config(const std::filesystem::path& path) {
  const std::string origin = path.string();
  const auto entries = kvfile::parse_kv_text(fsutil::read_text_file(path), origin);
  FileConfig cfg;
  for (const auto& e : entries) {
    if (e.key == "seed") {
      cfg.seed = kvfile::to_uint(e, origin);
    } else if (e.key == "workers") {
      const auto v = kvfile::to_int(e, origin);
      require(v >= 1, origin, ":", e.line, ": workers must be >= 1");
      cfg.workers = static_cast<int>(v);
    } else if (e.key == "working_rate") {
      const auto v = kvfile::to_int(e, origin);
      require(v > 0, origin, ":", e.line, ": working_rate must be positive");
      cfg.working_rate = static_cast<int>(v);
    } else if (e.key == "adapter") {
      cfg.adapter = path.parent_path() / e.value;
    } else if (e.key == "speaker_pool") {
      cfg.speaker_pool = path.parent_path() / e.value;
    } else {
      raise(origin, ":", e.line, ": unknown config key `", e.key, "`");
    }
  }
  return cfg;
}

namespace cli_detail {

inline std::optional<std::string> env_string(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

inline std::uint64_t env_uint(const char* name, const std::string& value) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(value, &used);
    require(used == value.size() && value[0] != '-', "");
    return v;
  } catch (...) {
    raise(name, ": expected a nonnegative integer, got \"", value, "\"");
  }
}

inline int env_workers(const char* name, const std::string& value) {
  try {
    std::size_t used = 0;
    const auto v = std::stoi(value, &used);
    require(used == value.size() && v >= 1, "");
    return v;
  } catch (...) {
    raise(name, ": expected an integer >= 1, got \"", value, "\"");
  }
}

struct FlagState {
  bool seed_set = false;
  std::uint64_t seed = 0;
  bool workers_set = false;
  int workers = 1;
  bool rate_set = false;
  int rate = 16000;
};

inline GlobalConfig resolve(const FlagState& flags, const FileConfig& file) {
  GlobalConfig g;
  if (flags.seed_set) {
    g.seed = flags.seed;
  } else if (const auto env = env_string("AUGVOX_SEED")) {
    g.seed = env_uint("AUGVOX_SEED", *env);
  } else if (file.seed) {
    g.seed = *file.seed;
  }
  if (flags.workers_set) {
    g.workers = flags.workers;
  } else if (const auto env = env_string("AUGVOX_WORKERS")) {
    g.workers = env_workers("AUGVOX_WORKERS", *env);
  } else {
    g.workers = file.workers.value_or(1);
  }
  g.working_rate = flags.rate_set ? flags.rate : file.working_rate.value_or(16000);
  g.adapter = file.adapter;
  g.speaker_pool = file.speaker_pool;
  return g;
}

inline std::string format_hours(double hours) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << hours;
  return out.str();
}

inline bool all_durations_known(const corpus::Manifest& manifest) {
  for (const auto& utt : manifest.utterances)
    if (!utt.duration_s.has_value()) return false;
  return true;
}

// A pool argument is either a speaker index file or a manifest; manifests are
// recognized by their .jsonl extension.
inline synth::SpeakerPool load_pool_argument(const std::filesystem::path& path) {
  if (path.extension() == ".jsonl")
    return synth::pool_from_manifest(corpus::load_manifest_jsonl(path));
  return synth::load_speaker_pool(path);
}

struct Hypothesis {
  std::string id;
  std::string text;
};

// Hypotheses file: JSON lines of {"id": ..., "hypothesis": ...}.
inline std::vector<Hypothesis> load_hypotheses(const std::filesystem::path& path) {
  std::vector<Hypothesis> out;
  std::unordered_set<std::string> seen;
  const auto lines = corpus::manifest_detail::split_lines(fsutil::read_text_file(path));
  int line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    if (line.empty()) continue;
    Hypothesis hyp;
    try {
      const auto j = nlohmann::json::parse(line);
      hyp.id = j.at("id").get<std::string>();
      hyp.text = j.at("hypothesis").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      raise(path.string(), ":", line_no, ": malformed hypothesis record: ",
            e.what());
    }
    require(seen.insert(hyp.id).second, path.string(), ":", line_no,
            ": duplicate hypothesis id \"", hyp.id, "\"");
    out.push_back(std::move(hyp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code: 0 success,
// 1 usage/validation error (raised as Error and mapped by run), 2 completed
// with skips beyond what the command tolerates.

struct PreprocessArgs {
  std::string in;
  std::string format = "jsonl";
  std::string split = "train";
  std::string out;
  double peak_dbfs = -1.0;
  double silence_dbfs = -40.0;
  double pad_ms = 200.0;
  double max_skip_fraction = 0.01;
  std::string denoise_cmd;
};

inline int run_preprocess(const PreprocessArgs& args, const GlobalConfig& g,
                          std::ostream& out, std::ostream& err) {
  const auto manifest =
      corpus::load_manifest(args.in, corpus::manifest_format_from_string(args.format),
                            corpus::split_from_string(args.split));
  audio::PreprocessConfig cfg;
  cfg.target_rate = g.working_rate;
  cfg.peak_target_dbfs = args.peak_dbfs;
  cfg.silence_threshold_dbfs = args.silence_dbfs;
  cfg.silence_pad_ms = args.pad_ms;
  std::optional<corpus::DenoiseHook> hook;
  if (!args.denoise_cmd.empty()) hook = corpus::DenoiseHook{args.denoise_cmd};

  const auto result =
      corpus::preprocess_corpus(manifest, cfg, args.out, g.workers, hook);
  corpus::save_manifest(result.manifest,
                        std::filesystem::path(args.out) / "manifest.jsonl");

  out << "preprocess: kept " << result.manifest.utterances.size() << " of "
      << manifest.utterances.size() << " utterances, skipped "
      << result.skipped.size() << "\n";
  if (!result.manifest.utterances.empty())
    out << "  output hours: " << format_hours(corpus::total_hours(result.manifest))
        << "\n";
  out << "  manifest: " << (std::filesystem::path(args.out) / "manifest.jsonl").string()
      << "\n"
      << "  skips:    " << (std::filesystem::path(args.out) / "skips.jsonl").string()
      << "\n";

  if (!manifest.utterances.empty()) {
    const double fraction = static_cast<double>(result.skipped.size()) /
                            static_cast<double>(manifest.utterances.size());
    if (fraction > args.max_skip_fraction) {
      err << "preprocess: skipped fraction " << fraction
          << " exceeds --max-skip-fraction " << args.max_skip_fraction << "\n";
      return 2;
    }
  }
  return 0;
}

struct AugmentArgs {
  std::string in;
  std::string policy;
  std::int64_t epoch = 0;
  std::string out;
};

inline int run_augment(const AugmentArgs& args, const GlobalConfig& g,
                       std::ostream& out, std::ostream&) {
  corpus::ExperimentRecipe recipe;
  recipe.name = std::filesystem::path(args.in).stem().string();
  recipe.components.push_back({args.in, true});
  recipe.augmentation = args.policy;

  const auto manifest =
      corpus::materialize_recipe(recipe, args.epoch, args.out, g.workers, g.seed);

  std::size_t touched = 0;
  for (const auto& utt : manifest.utterances)
    if (utt.provenance && utt.provenance->augmentations &&
        !utt.provenance->augmentations->entries.empty())
      ++touched;
  out << "augment: wrote " << manifest.utterances.size() << " utterances, "
      << touched << " augmented (epoch " << args.epoch << ")\n"
      << "  manifest: "
      << (std::filesystem::path(args.out) / "manifest.jsonl").string() << "\n";
  return 0;
}

struct GenerateArgs {
  std::string in;
  std::string format = "jsonl";
  std::string split = "train";
  std::string adapter;
  std::string pool;
  std::string out;
  int transfers = 5;
  double max_failure_fraction = 0.01;
  bool resume = false;
};

inline int run_generate(const std::string& kind, const GenerateArgs& args,
                        const GlobalConfig& g, std::ostream& out, std::ostream&) {
  const auto src =
      corpus::load_manifest(args.in, corpus::manifest_format_from_string(args.format),
                            corpus::split_from_string(args.split));

  std::filesystem::path adapter_path = args.adapter;
  if (adapter_path.empty() && g.adapter) adapter_path = *g.adapter;
  require(!adapter_path.empty(),
          "generate: no adapter given (--adapter flag or config `adapter`)");
  const auto spec = synth::load_adapter_spec(adapter_path);

  synth::GenOptions opts;
  opts.out_dir = args.out;
  opts.master_seed = g.seed.value_or(0);
  opts.transfers = args.transfers;
  opts.max_failure_fraction = args.max_failure_fraction;
  opts.workers = g.workers;
  opts.resume = args.resume;
  opts.working_rate = g.working_rate;

  synth::GenResult result;
  if (kind == "clone") {
    result = synth::clone_corpus(src, spec, opts);
  } else {
    std::filesystem::path pool_path = args.pool;
    if (pool_path.empty() && g.speaker_pool) pool_path = *g.speaker_pool;
    require(!pool_path.empty(),
            "generate: no speaker pool given (--pool flag or config `speaker_pool`)");
    const auto pool = load_pool_argument(pool_path);
    result = kind == "gen-tts" ? synth::gen_tts_dataset(src, pool, spec, opts)
                               : synth::gen_vc_dataset(src, pool, spec, opts);
  }

  out << kind << ": generated " << result.manifest.utterances.size()
      << " utterances, skipped " << result.skipped.size() << "\n"
      << "  manifest: "
      << (std::filesystem::path(args.out) / "manifest.jsonl").string() << "\n"
      << "  skips:    "
      << (std::filesystem::path(args.out) / "skips.jsonl").string() << "\n";
  return result.skipped.empty() ? 0 : 2;
}

struct AssembleArgs {
  std::string recipe;
  std::int64_t epoch = 0;
  std::string out;
};

inline int run_assemble(const AssembleArgs& args, const GlobalConfig& g,
                        std::ostream& out, std::ostream&) {
  const auto recipe = corpus::load_recipe(args.recipe);
  const auto manifest =
      corpus::materialize_recipe(recipe, args.epoch, args.out, g.workers, g.seed);

  out << "assemble: recipe \"" << recipe.name << "\" -> "
      << manifest.utterances.size() << " utterances";
  if (recipe.augmentation) out << " (augmentation applied, epoch " << args.epoch << ")";
  out << "\n";
  if (!manifest.utterances.empty() && all_durations_known(manifest))
    out << "  total hours: " << format_hours(corpus::total_hours(manifest)) << "\n";
  out << "  manifest: "
      << (std::filesystem::path(args.out) / "manifest.jsonl").string() << "\n";
  return 0;
}

struct WerArgs {
  std::string ref;
  std::string format = "jsonl";
  std::string split = "test";
  std::string hyp;
  std::string lang;
  std::string out;
  bool no_normalize = false;
};

inline int run_wer(const WerArgs& args, const GlobalConfig&, std::ostream& out,
                   std::ostream& err) {
  auto manifest =
      corpus::load_manifest(args.ref, corpus::manifest_format_from_string(args.format),
                            corpus::split_from_string(args.split));
  if (!args.lang.empty()) {
    auto& utts = manifest.utterances;
    utts.erase(std::remove_if(utts.begin(), utts.end(),
                              [&](const corpus::Utterance& utt) {
                                return utt.language != args.lang;
                              }),
               utts.end());
    require(!utts.empty(), "wer: no utterances with language \"", args.lang,
            "\" in ", args.ref);
  }

  const auto hypotheses = load_hypotheses(args.hyp);
  std::unordered_map<std::string, const std::string*> hyp_by_id;
  for (const auto& hyp : hypotheses) hyp_by_id.emplace(hyp.id, &hyp.text);

  std::unordered_set<std::string> ref_ids;
  for (const auto& utt : manifest.utterances) ref_ids.insert(utt.id);
  std::vector<std::string> orphans;
  for (const auto& hyp : hypotheses)
    if (!ref_ids.count(hyp.id)) orphans.push_back(hyp.id);
  if (!orphans.empty()) {
    err << "wer: " << orphans.size()
        << " hypothesis ids missing from the reference manifest:";
    const std::size_t shown = std::min<std::size_t>(orphans.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) err << " " << orphans[i];
    if (orphans.size() > shown) err << " and " << orphans.size() - shown << " more";
    err << "\n";
    return 1;
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t without_hypothesis = 0;
  for (const auto& utt : manifest.utterances) {
    const auto it = hyp_by_id.find(utt.id);
    if (it == hyp_by_id.end()) {
      ++without_hypothesis;
      continue;
    }
    pairs.emplace_back(utt.transcript, *it->second);
  }
  require(!pairs.empty(), "wer: no hypothesis matches any reference id");
  if (without_hypothesis > 0)
    err << "wer: " << without_hypothesis
        << " reference utterances have no hypothesis and were excluded\n";

  const auto report = eval::corpus_wer(pairs, args.lang, !args.no_normalize);
  const std::string column = args.lang.empty() ? "WER" : args.lang;
  const auto rendered =
      eval::report_table({column}, {{manifest.name, {report}}});

  out << rendered.text << "\n"
      << "scored " << pairs.size() << " utterance pairs, " << report.ref_words
      << " reference words: " << report.substitutions << " sub, "
      << report.deletions << " del, " << report.insertions << " ins\n";

  const std::filesystem::path out_dir = args.out;
  std::filesystem::create_directories(out_dir);
  fsutil::write_text_file(out_dir / "wer_report.txt", rendered.text);
  fsutil::write_text_file(out_dir / "wer_report.csv", rendered.csv);
  out << "  report: " << (out_dir / "wer_report.csv").string() << "\n";
  return 0;
}

}  // namespace cli_detail

// Parses and executes one command line (program name excluded). All human
// output goes to `out`, diagnostics to `err`; the return value is the process
// exit code: 0 success, 1 usage or validation error, 2 completed with skips.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{
      "Speech data pipeline: corpus preprocessing, audio augmentation, "
      "synthetic speech generation, dataset assembly, and WER evaluation"};
  app.name("augvox");
  app.fallthrough();
  app.require_subcommand(1);

  cli_detail::FlagState flags;
  std::string config_path;
  auto* seed_opt =
      app.add_option("--seed", flags.seed, "Master random seed (env AUGVOX_SEED)");
  auto* workers_opt =
      app.add_option("--workers", flags.workers,
                     "Worker threads, >= 1 (env AUGVOX_WORKERS)")
          ->check(CLI::PositiveNumber);
  auto* rate_opt =
      app.add_option("--rate", flags.rate, "Working sample rate in Hz")
          ->check(CLI::PositiveNumber);
  app.add_option("--config", config_path, "Global `key = value` config file")
      ->check(CLI::ExistingFile);

  cli_detail::PreprocessArgs pre_args;
  auto* pre = app.add_subcommand(
      "preprocess", "Resample, trim silence, and peak-normalize a corpus");
  pre->add_option("--in", pre_args.in, "Input manifest")
      ->required()
      ->check(CLI::ExistingFile);
  pre->add_option("--format", pre_args.format, "Input manifest format")
      ->check(CLI::IsMember({"jsonl", "cv_tsv"}));
  pre->add_option("--split", pre_args.split, "Split label for the corpus")
      ->check(CLI::IsMember({"train", "dev", "test"}));
  pre->add_option("--out", pre_args.out, "Output directory")->required();
  pre->add_option("--peak-dbfs", pre_args.peak_dbfs, "Peak normalization target");
  pre->add_option("--silence-dbfs", pre_args.silence_dbfs,
                  "Silence threshold for trimming");
  pre->add_option("--pad-ms", pre_args.pad_ms, "Silence padding kept per side");
  pre->add_option("--max-skip-fraction", pre_args.max_skip_fraction,
                  "Skipped fraction above which the exit code is 2")
      ->check(CLI::Range(0.0, 1.0));
  pre->add_option("--denoise-cmd", pre_args.denoise_cmd,
                  "External denoiser template with {in} and {out} placeholders");

  cli_detail::AugmentArgs aug_args;
  auto* aug = app.add_subcommand(
      "augment", "Apply an augmentation policy to every utterance");
  aug->add_option("--in", aug_args.in, "Input manifest (jsonl)")
      ->required()
      ->check(CLI::ExistingFile);
  aug->add_option("--policy", aug_args.policy, "Augmentation policy file")
      ->required()
      ->check(CLI::ExistingFile);
  aug->add_option("--epoch", aug_args.epoch, "Training epoch the draws are keyed on");
  aug->add_option("--out", aug_args.out, "Output directory")->required();

  cli_detail::GenerateArgs gen_args;
  auto* gen = app.add_subcommand(
      "generate", "Create synthetic speech through a TTS or VC adapter");
  gen->require_subcommand(1);
  auto* gen_clone = gen->add_subcommand(
      "clone", "Re-speak every utterance in its own speaker's voice");
  auto* gen_tts = gen->add_subcommand(
      "gen-tts", "Synthesize sentences with speakers drawn from a pool");
  auto* gen_vc = gen->add_subcommand(
      "gen-vc", "Convert every utterance into several pool voices");
  for (auto* sub : {gen_clone, gen_tts, gen_vc}) {
    sub->add_option("--in", gen_args.in, "Source manifest")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--format", gen_args.format, "Source manifest format")
        ->check(CLI::IsMember({"jsonl", "cv_tsv"}));
    sub->add_option("--split", gen_args.split, "Split label for the source")
        ->check(CLI::IsMember({"train", "dev", "test"}));
    sub->add_option("--adapter", gen_args.adapter, "Adapter spec file")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", gen_args.out, "Output directory")->required();
    sub->add_option("--max-failure-fraction", gen_args.max_failure_fraction,
                    "Adapter failure fraction that aborts the run")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_flag("--resume", gen_args.resume,
                  "Reuse finished items from the output checkpoint");
  }
  for (auto* sub : {gen_tts, gen_vc})
    sub->add_option("--pool", gen_args.pool,
                    "Speaker pool: index file, or .jsonl manifest");
  gen_vc->add_option("--transfers", gen_args.transfers,
                     "Distinct target voices per source utterance")
      ->check(CLI::PositiveNumber);

  cli_detail::AssembleArgs asm_args;
  auto* assemble = app.add_subcommand(
      "assemble", "Materialize an experiment recipe into one dataset");
  assemble->add_option("--recipe", asm_args.recipe, "Recipe file")
      ->required()
      ->check(CLI::ExistingFile);
  assemble->add_option("--epoch", asm_args.epoch,
                       "Training epoch the augmentation draws are keyed on");
  assemble->add_option("--out", asm_args.out, "Output directory")->required();

  cli_detail::WerArgs wer_args;
  auto* wer = app.add_subcommand(
      "wer", "Score hypothesis transcripts against a reference manifest");
  wer->add_option("--ref", wer_args.ref, "Reference manifest")
      ->required()
      ->check(CLI::ExistingFile);
  wer->add_option("--format", wer_args.format, "Reference manifest format")
      ->check(CLI::IsMember({"jsonl", "cv_tsv"}));
  wer->add_option("--split", wer_args.split, "Split label for the reference")
      ->check(CLI::IsMember({"train", "dev", "test"}));
  wer->add_option("--hyp", wer_args.hyp,
                  "Hypotheses: JSON lines of {\"id\", \"hypothesis\"}")
      ->required()
      ->check(CLI::ExistingFile);
  wer->add_option("--lang", wer_args.lang,
                  "Restrict scoring to this language tag");
  wer->add_option("--out", wer_args.out, "Report output directory")->required();
  wer->add_flag("--no-normalize", wer_args.no_normalize,
                "Score raw tokens without text normalization");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    FileConfig file;
    if (!config_path.empty()) file = load_file_config(config_path);
    flags.seed_set = seed_opt->count() > 0;
    flags.workers_set = workers_opt->count() > 0;
    flags.rate_set = rate_opt->count() > 0;
    const GlobalConfig g = cli_detail::resolve(flags, file);

    if (*pre) return cli_detail::run_preprocess(pre_args, g, out, err);
    if (*aug) return cli_detail::run_augment(aug_args, g, out, err);
    if (*gen) {
      const std::string kind = *gen_clone ? "clone"
                               : *gen_tts ? "gen-tts"
                                          : "gen-vc";
      return cli_detail::run_generate(kind, gen_args, g, out, err);
    }
    if (*assemble) return cli_detail::run_assemble(asm_args, g, out, err);
    if (*wer) return cli_detail::run_wer(wer_args, g, out, err);
    raise("no subcommand selected");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace augvox::cli
