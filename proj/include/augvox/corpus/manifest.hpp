// include/augvox/corpus/manifest.hpp

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
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvox/audio/wav.hpp"
#include "augvox/augment/policy.hpp"
#include "augvox/common.hpp"
#include "augvox/synth/controls.hpp"
#include "augvox/util/fs.hpp"

namespace augvox::corpus {

enum class Origin { human, tts, vc };
enum class Split { train, dev, test };

inline std::string to_string(Origin o) {
  switch (o) {
    case Origin::human: return "human";
    case Origin::tts: return "tts";
    case Origin::vc: return "vc";
  }
  raise("unknown origin");
}

inline Origin origin_from_string(const std::string& s) {
  if (s == "human") return Origin::human;
  if (s == "tts") return Origin::tts;
  if (s == "vc") return Origin::vc;
  raise("unknown origin \"", s, "\"");
}

inline std::string to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::dev: return "dev";
    case Split::test: return "test";
  }
  raise("unknown split");
}

inline Split split_from_string(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "dev") return Split::dev;
  if (s == "test") return Split::test;
  raise("unknown split \"", s, "\"");
}

// How an utterance came to exist. A synthetic utterance records the source
// it was derived from (and, for TTS, the controls used); any utterance may
// additionally record augmentations applied during dataset assembly.
struct Provenance {
  std::optional<std::string> source_id;
  std::optional<synth::SynthesisControls> controls;
  std::optional<augment::AppliedAugmentations> augmentations;

  bool has_synthesis() const { return source_id.has_value(); }
  bool empty() const { return !source_id && !controls && !augmentations; }
};

struct Utterance {
  std::string id;
  std::string audio_path;
  std::string transcript;
  std::string speaker_id;
  std::string language;
  Origin origin = Origin::human;
  std::optional<double> duration_s;
  std::optional<Provenance> provenance;
};

struct Manifest {
  std::vector<Utterance> utterances;
  Split split = Split::train;
  std::string name;
};

inline void validate(const Utterance& utt) {
  require(!utt.id.empty(), "utterance with empty id");
  require(!utt.audio_path.empty(), "utterance \"", utt.id, "\": empty audio_path");
  const bool synthetic = utt.provenance && utt.provenance->has_synthesis();
  require((utt.origin == Origin::human) == !synthetic, "utterance \"", utt.id,
          "\": origin ", to_string(utt.origin),
          synthetic ? " but provenance records a synthesis source"
                    : " but provenance records no synthesis source");
}

// ---------------------------------------------------------------------------
// JSON serialization

inline nlohmann::json to_json(const Provenance& p) {
  nlohmann::json j = nlohmann::json::object();
  if (p.source_id) j["source_id"] = *p.source_id;
  if (p.controls) j["controls"] = synth::to_json(*p.controls);
  if (p.augmentations) j["augmentations"] = augment::to_json(*p.augmentations);
  return j;
}

inline Provenance provenance_from_json(const nlohmann::json& j) {
  Provenance p;
  if (j.contains("source_id")) p.source_id = j.at("source_id").get<std::string>();
  if (j.contains("controls")) p.controls = synth::controls_from_json(j.at("controls"));
  if (j.contains("augmentations"))
    p.augmentations = augment::applied_augmentations_from_json(j.at("augmentations"));
  return p;
}

inline nlohmann::json to_json(const Utterance& utt) {
  nlohmann::json j{{"id", utt.id},
                   {"audio_path", utt.audio_path},
                   {"transcript", utt.transcript},
                   {"speaker_id", utt.speaker_id},
                   {"language", utt.language},
                   {"origin", to_string(utt.origin)}};
  if (utt.duration_s) j["duration_s"] = *utt.duration_s;
  if (utt.provenance) j["provenance"] = to_json(*utt.provenance);
  return j;
}

inline Utterance utterance_from_json(const nlohmann::json& j) {
  Utterance utt;
  utt.id = j.at("id").get<std::string>();
  utt.audio_path = j.at("audio_path").get<std::string>();
  utt.transcript = j.at("transcript").get<std::string>();
  utt.speaker_id = j.at("speaker_id").get<std::string>();
  utt.language = j.at("language").get<std::string>();
  utt.origin = origin_from_string(j.at("origin").get<std::string>());
  if (j.contains("duration_s")) utt.duration_s = j.at("duration_s").get<double>();
  if (j.contains("provenance"))
    utt.provenance = provenance_from_json(j.at("provenance"));
  return utt;
}

// ---------------------------------------------------------------------------
// Loading and saving

enum class ManifestFormat { jsonl, cv_tsv };

inline ManifestFormat manifest_format_from_string(const std::string& s) {
  if (s == "jsonl") return ManifestFormat::jsonl;
  if (s == "cv_tsv") return ManifestFormat::cv_tsv;
  raise("unknown manifest format \"", s, "\" (expected jsonl or cv_tsv)");
}

namespace manifest_detail {

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    std::string line = nl == std::string::npos ? text.substr(pos)
                                               : text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = nl == std::string::npos ? text.size() : nl + 1;
  }
  return lines;
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      cells.push_back(line.substr(pos));
      return cells;
    }
    cells.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

inline void check_unique_id(std::unordered_set<std::string>& seen,
                            const std::string& id, const std::string& origin,
                            int line_no) {
  require(seen.insert(id).second, origin, ":", line_no, ": duplicate id \"", id,
          "\"");
}

// Relative form of an audio path that lies lexically inside base, if any.
// Manifests written this way are position-independent: the same dataset
// materialized into two directories yields byte-identical manifest files.
inline std::optional<std::string> relative_inside(const std::filesystem::path& audio,
                                                  const std::filesystem::path& base) {
  if (base.empty()) return std::nullopt;
  const std::filesystem::path rel = audio.lexically_relative(base);
  if (rel.empty() || *rel.begin() == "..") return std::nullopt;
  return rel.generic_string();
}

// A file's stem names the manifest, except that the standard output layout
// "<dir>/manifest.jsonl" would name every output identically; there the
// directory carries the identity.
inline std::string name_from_path(const std::filesystem::path& path) {
  const std::string stem = path.stem().string();
  if (stem != "manifest") return stem;
  const std::string dir = path.parent_path().filename().string();
  return dir.empty() ? stem : dir;
}

}  // namespace manifest_detail

// Relative audio paths in the file resolve against the manifest's directory,
// so a manifest and the audio tree beside it move together.
inline Manifest load_manifest_jsonl(const std::filesystem::path& path,
                                    Split split = Split::train) {
  Manifest manifest;
  manifest.split = split;
  manifest.name = manifest_detail::name_from_path(path);
  const auto dir = path.parent_path();
  const auto lines = manifest_detail::split_lines(fsutil::read_text_file(path));
  std::unordered_set<std::string> seen;
  int line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      manifest.utterances.push_back(utterance_from_json(j));
    } catch (const nlohmann::json::exception& e) {
      raise(path.string(), ":", line_no, ": malformed utterance record: ",
            e.what());
    }
    Utterance& utt = manifest.utterances.back();
    if (!dir.empty() && std::filesystem::path(utt.audio_path).is_relative())
      utt.audio_path = (dir / utt.audio_path).string();
    manifest_detail::check_unique_id(seen, utt.id, path.string(), line_no);
  }
  return manifest;
}

// Common Voice TSV import. Column mapping: client_id -> speaker_id,
// path -> id and audio_path, sentence -> transcript, locale -> language.
// Audio paths resolve against the TSV's directory, then its clips/
// subdirectory (the Common Voice layout); unresolvable ones keep the plain
// join so the failure surfaces when the audio is opened.
inline Manifest load_manifest_cv_tsv(const std::filesystem::path& path,
                                     Split split = Split::train) {
  namespace fs = std::filesystem;
  Manifest manifest;
  manifest.split = split;
  manifest.name = manifest_detail::name_from_path(path);
  const auto lines = manifest_detail::split_lines(fsutil::read_text_file(path));
  require(!lines.empty(), path.string(), ": empty TSV");

  const auto header = manifest_detail::split_tabs(lines[0]);
  const auto column = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    return std::nullopt;
  };
  const auto require_column = [&](const std::string& name) {
    const auto idx = column(name);
    require(idx.has_value(), path.string(), ": missing required column \"", name,
            "\"");
    return *idx;
  };
  const std::size_t col_client = require_column("client_id");
  const std::size_t col_path = require_column("path");
  const std::size_t col_sentence = require_column("sentence");
  const auto col_locale = column("locale");

  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (lines[i].empty()) continue;
    const auto cells = manifest_detail::split_tabs(lines[i]);
    require(cells.size() >= header.size(), path.string(), ":", line_no,
            ": expected ", header.size(), " columns, got ", cells.size());
    Utterance utt;
    utt.id = cells[col_path];
    require(!utt.id.empty(), path.string(), ":", line_no, ": empty path cell");
    manifest_detail::check_unique_id(seen, utt.id, path.string(), line_no);
    utt.speaker_id = cells[col_client];
    utt.transcript = cells[col_sentence];
    if (col_locale) utt.language = cells[*col_locale];
    const fs::path base = path.parent_path();
    if (fs::exists(base / utt.id)) {
      utt.audio_path = (base / utt.id).string();
    } else if (fs::exists(base / "clips" / utt.id)) {
      utt.audio_path = (base / "clips" / utt.id).string();
    } else {
      utt.audio_path = (base / utt.id).string();
    }
    utt.origin = Origin::human;
    manifest.utterances.push_back(std::move(utt));
  }
  return manifest;
}

inline Manifest load_manifest(const std::filesystem::path& path,
                              ManifestFormat format, Split split = Split::train) {
  return format == ManifestFormat::jsonl ? load_manifest_jsonl(path, split)
                                         : load_manifest_cv_tsv(path, split);
}

// base, when given, is the directory the manifest will live in; audio paths
// inside it are written relative so the saved file is position-independent.
inline std::string manifest_to_jsonl(const Manifest& manifest,
                                     const std::filesystem::path& base = {}) {
  std::string out;
  for (const auto& utt : manifest.utterances) {
    nlohmann::json j = to_json(utt);
    if (const auto rel = manifest_detail::relative_inside(utt.audio_path, base))
      j["audio_path"] = *rel;
    out += j.dump();
    out += "\n";
  }
  return out;
}

// Export in the Common Voice column layout. The id is written back to the
// path column, so a TSV imported and re-exported preserves every mapped
// field byte for byte. Tabs or newlines inside text fields would corrupt the
// format and are flattened to spaces.
inline std::string manifest_to_cv_tsv(const Manifest& manifest) {
  const auto clean = [](std::string s) {
    for (char& c : s)
      if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    return s;
  };
  std::string out = "client_id\tpath\tsentence\tlocale\n";
  for (const auto& utt : manifest.utterances) {
    out += clean(utt.speaker_id);
    out += '\t';
    out += clean(utt.id);
    out += '\t';
    out += clean(utt.transcript);
    out += '\t';
    out += clean(utt.language);
    out += '\n';
  }
  return out;
}

inline void save_manifest(const Manifest& manifest, const std::filesystem::path& path,
                          ManifestFormat format = ManifestFormat::jsonl) {
  fsutil::write_text_file(path, format == ManifestFormat::jsonl
                                    ? manifest_to_jsonl(manifest, path.parent_path())
                                    : manifest_to_cv_tsv(manifest));
}

// ---------------------------------------------------------------------------
// Durations and hours

// Fills missing durations by probing each audio file's header.
inline void fill_durations(Manifest& manifest) {
  for (auto& utt : manifest.utterances) {
    if (utt.duration_s) continue;
    utt.duration_s = audio::wav_info(utt.audio_path).duration_s();
  }
}

inline double total_hours(const Manifest& manifest) {
  std::vector<std::string> missing;
  double seconds = 0.0;
  for (const auto& utt : manifest.utterances) {
    if (utt.duration_s) {
      seconds += *utt.duration_s;
    } else {
      missing.push_back(utt.id);
    }
  }
  if (!missing.empty()) {
    std::string listed;
    const std::size_t shown = std::min<std::size_t>(missing.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) {
      if (i) listed += ", ";
      listed += missing[i];
    }
    if (missing.size() > shown)
      listed += cat(" and ", missing.size() - shown, " more");
    raise("total_hours: missing durations for: ", listed);
  }
  return seconds / 3600.0;
}

// ---------------------------------------------------------------------------
// Merging

// Concatenates manifests in input order. Ids that collide across inputs are
// prefixed with their manifest's name (every colliding occurrence, so the
// provenance of each copy stays readable).
inline Manifest merge(const std::vector<Manifest>& manifests, const std::string& name) {
  require(!manifests.empty(), "merge: no manifests");
  const Split split = manifests.front().split;
  for (const auto& m : manifests)
    require(m.split == split, "merge: mixed splits (\"", manifests.front().name,
            "\" is ", to_string(split), ", \"", m.name, "\" is ",
            to_string(m.split), ")");

  std::unordered_map<std::string, int> counts;
  for (const auto& m : manifests)
    for (const auto& utt : m.utterances) ++counts[utt.id];

  Manifest out;
  out.split = split;
  out.name = name;
  std::unordered_set<std::string> seen;
  for (const auto& m : manifests) {
    for (const auto& utt : m.utterances) {
      Utterance copy = utt;
      if (counts[utt.id] > 1) copy.id = m.name + "/" + utt.id;
      require(seen.insert(copy.id).second, "merge: id \"", copy.id,
              "\" still collides after prefixing");
      out.utterances.push_back(std::move(copy));
    }
  }
  return out;
}

}  // namespace augvox::corpus
