// include/augvox/util/fs.hpp

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
#include <random>
#include <string>
#include <vector>

#include "augvox/common.hpp"

namespace augvox::fsutil {

namespace fs = std::filesystem;

inline std::vector<std::uint8_t> read_binary_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot read file: ", path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  require(!in.bad(), "read failed: ", path.string());
  return data;
}

inline void write_binary_file(const fs::path& path, const void* data, std::size_t size) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), "cannot write file: ", path.string());
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  out.flush();
  require(out.good(), "write failed: ", path.string());
}

inline void write_binary_file(const fs::path& path, const std::vector<std::uint8_t>& data) {
  write_binary_file(path, data.data(), data.size());
}

inline std::string read_text_file(const fs::path& path) {
  const auto bytes = read_binary_file(path);
  return std::string(bytes.begin(), bytes.end());
}

inline void write_text_file(const fs::path& path, const std::string& text) {
  write_binary_file(path, text.data(), text.size());
}

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix = "augvox") {
    std::random_device rd;
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto candidate = fs::temp_directory_path() /
                       (prefix + "-" + std::to_string(rd()) + std::to_string(rd()));
      std::error_code ec;
      if (fs::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    raise("could not create temp directory under ",
          fs::temp_directory_path().string());
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

// Filesystem-safe file stem for an utterance id. Ids may contain separators
// after manifest merges; collisions are handled by the caller.
inline std::string sanitize_stem(const std::string& id) {
  std::string out;
  out.reserve(id.size());
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
    out.push_back(ok ? c : '_');
  }
  if (out.empty()) out = "_";
  return out;
}

}  // namespace augvox::fsutil
