// include/augvox/eval/wer.hpp

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
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "augvox/common.hpp"
#include "augvox/eval/text.hpp"

namespace augvox::eval {

struct WerReport {
  std::int64_t substitutions = 0;
  std::int64_t deletions = 0;
  std::int64_t insertions = 0;
  std::int64_t ref_words = 0;
  double wer = 0.0;  // percent
  // Set when ref_words == 0 but errors exist; the 100.0 then reported is a
  // convention, not a ratio.
  bool degenerate = false;
};

namespace wer_detail {

inline double wer_percent(std::int64_t s, std::int64_t d, std::int64_t i,
                          std::int64_t ref_words, bool& degenerate) {
  if (ref_words > 0)
    return 100.0 * static_cast<double>(s + d + i) / static_cast<double>(ref_words);
  degenerate = i > 0;
  return i > 0 ? 100.0 : 0.0;
}

}  // namespace wer_detail

// Minimal-edit alignment by dynamic programming with unit costs. Ties in the
// backtrace prefer substitution over deletion over insertion, making the
// S/D/I split deterministic.
inline WerReport wer(const std::vector<std::string>& reference,
                     const std::vector<std::string>& hypothesis) {
  const std::size_t n = reference.size();
  const std::size_t m = hypothesis.size();
  std::vector<std::int32_t> dp((n + 1) * (m + 1));
  const auto at = [&](std::size_t i, std::size_t j) -> std::int32_t& {
    return dp[i * (m + 1) + j];
  };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<std::int32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::int32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::int32_t sub =
          at(i - 1, j - 1) + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      const std::int32_t del = at(i - 1, j) + 1;
      const std::int32_t ins = at(i, j - 1) + 1;
      at(i, j) = std::min(sub, std::min(del, ins));
    }
  }

  WerReport report;
  report.ref_words = static_cast<std::int64_t>(n);
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool match = reference[i - 1] == hypothesis[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (match ? 0 : 1)) {
        if (!match) ++report.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      ++report.deletions;
      --i;
      continue;
    }
    ++report.insertions;
    --j;
  }
  report.wer = wer_detail::wer_percent(report.substitutions, report.deletions,
                                       report.insertions, report.ref_words,
                                       report.degenerate);
  return report;
}

// Corpus-level WER pools the error and reference-word counts over all pairs.
// This weights utterances by their length, as opposed to averaging
// per-utterance percentages.
inline WerReport corpus_wer(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::string& language = "", bool normalize = true) {
  require(!pairs.empty(), "corpus_wer: no pairs to evaluate");
  WerReport pooled;
  for (const auto& [ref_text, hyp_text] : pairs) {
    const auto ref = normalize ? normalize_text(ref_text, language)
                               : split_tokens(ref_text);
    const auto hyp = normalize ? normalize_text(hyp_text, language)
                               : split_tokens(hyp_text);
    const WerReport one = wer(ref, hyp);
    pooled.substitutions += one.substitutions;
    pooled.deletions += one.deletions;
    pooled.insertions += one.insertions;
    pooled.ref_words += one.ref_words;
  }
  pooled.wer = wer_detail::wer_percent(pooled.substitutions, pooled.deletions,
                                       pooled.insertions, pooled.ref_words,
                                       pooled.degenerate);
  return pooled;
}

// ---------------------------------------------------------------------------
// Report rendering

struct ReportRow {
  std::string label;
  std::vector<WerReport> cells;  // one per language column
};

struct RenderedReport {
  std::string text;
  std::string csv;
};

namespace wer_detail {

inline std::string format_wer(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << value;
  return out.str();
}

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace wer_detail

// Renders one WER table in two deterministic forms: a fixed-width text table
// for stdout and a CSV with the same cells. Every cell is the WER percent
// with two decimals.
inline RenderedReport report_table(const std::vector<std::string>& languages,
                                   const std::vector<ReportRow>& rows) {
  for (const auto& row : rows)
    require(row.cells.size() == languages.size(),
            "report_table: row \"", row.label, "\" has ", row.cells.size(),
            " cells for ", languages.size(), " language columns");

  constexpr std::size_t kValueWidth = 8;
  std::size_t label_width = std::string("Experiment").size();
  for (const auto& row : rows) label_width = std::max(label_width, row.label.size());

  std::ostringstream text;
  text << std::left << std::setw(static_cast<int>(label_width)) << "Experiment";
  for (const auto& lang : languages)
    text << "  " << std::right << std::setw(kValueWidth) << lang;
  text << "\n";
  text << std::string(label_width, '-');
  for (std::size_t i = 0; i < languages.size(); ++i)
    text << "  " << std::string(kValueWidth, '-');
  text << "\n";
  for (const auto& row : rows) {
    text << std::left << std::setw(static_cast<int>(label_width)) << row.label;
    for (const auto& cell : row.cells)
      text << "  " << std::right << std::setw(kValueWidth)
           << wer_detail::format_wer(cell.wer);
    text << "\n";
  }

  std::ostringstream csv;
  csv << "experiment";
  for (const auto& lang : languages) csv << "," << wer_detail::csv_quote(lang);
  csv << "\n";
  for (const auto& row : rows) {
    csv << wer_detail::csv_quote(row.label);
    for (const auto& cell : row.cells) csv << "," << wer_detail::format_wer(cell.wer);
    csv << "\n";
  }

  return {text.str(), csv.str()};
}

}  // namespace augvox::eval
