// include/augvox/corpus/skip.hpp

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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "augvox/util/fs.hpp"

namespace augvox::corpus {

// One dropped item in a lossy pipeline stage. Skip reports keep hour
// accounting auditable: |input| == |output| + |skipped| for every stage.
struct SkipEntry {
  std::string id;
  std::string stage;
  std::string reason;
};

inline nlohmann::json to_json(const SkipEntry& e) {
  return {{"id", e.id}, {"stage", e.stage}, {"reason", e.reason}};
}

inline SkipEntry skip_entry_from_json(const nlohmann::json& j) {
  return {j.at("id").get<std::string>(), j.at("stage").get<std::string>(),
          j.at("reason").get<std::string>()};
}

// Always writes the file, even when nothing was skipped; an absent report is
// indistinguishable from a crashed run, an empty one is a clean bill.
inline void write_skip_report(const std::vector<SkipEntry>& skipped,
                              const std::filesystem::path& path) {
  std::string out;
  for (const auto& e : skipped) {
    out += to_json(e).dump();
    out += "\n";
  }
  fsutil::write_text_file(path, out);
}

}  // namespace augvox::corpus
