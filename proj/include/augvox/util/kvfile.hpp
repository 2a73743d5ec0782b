// include/augvox/util/kvfile.hpp

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
#include <string>
#include <utility>
#include <vector>

#include "augvox/common.hpp"

namespace augvox::kvfile {

struct Entry {
  std::string key;
  std::string value;
  int line;
};

inline std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Declarative `key = value` format used by recipe and policy files. Keys may
// repeat (lists are expressed as repeated keys); order is preserved. Blank
// lines and lines starting with '#' are skipped. The first entry must be
// `schema = 1`; anything else fails fast so future format revisions cannot be
// misread silently.
inline std::vector<Entry> parse_kv_text(const std::string& text,
                                        const std::string& origin) {
  std::vector<Entry> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string raw = nl == std::string::npos ? text.substr(pos)
                                                    : text.substr(pos, nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string stripped = trim(raw);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    require(eq != std::string::npos, origin, ":", line_no,
            ": expected `key = value`");
    Entry e{trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)), line_no};
    require(!e.key.empty(), origin, ":", line_no, ": empty key");
    entries.push_back(std::move(e));
  }
  require(!entries.empty(), origin, ": empty file");
  require(entries.front().key == "schema" && entries.front().value == "1",
          origin, ": first entry must be `schema = 1`");
  entries.erase(entries.begin());
  return entries;
}

inline std::int64_t to_int(const Entry& e, const std::string& origin) {
  try {
    std::size_t consumed = 0;
    const auto v = std::stoll(e.value, &consumed);
    require(consumed == e.value.size(), "");
    return v;
  } catch (...) {
    raise(origin, ":", e.line, ": `", e.key, "` wants an integer, got \"",
          e.value, "\"");
  }
}

inline std::uint64_t to_uint(const Entry& e, const std::string& origin) {
  try {
    std::size_t consumed = 0;
    const auto v = std::stoull(e.value, &consumed);
    require(consumed == e.value.size() && e.value[0] != '-', "");
    return v;
  } catch (...) {
    raise(origin, ":", e.line, ": `", e.key, "` wants a nonnegative integer, got \"",
          e.value, "\"");
  }
}

inline double to_double(const Entry& e, const std::string& origin) {
  try {
    std::size_t consumed = 0;
    const auto v = std::stod(e.value, &consumed);
    require(consumed == e.value.size(), "");
    return v;
  } catch (...) {
    raise(origin, ":", e.line, ": `", e.key, "` wants a number, got \"",
          e.value, "\"");
  }
}

}  // namespace augvox::kvfile
