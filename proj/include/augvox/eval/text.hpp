// include/augvox/eval/text.hpp

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
#include <string_view>
#include <vector>

namespace augvox::eval {

namespace text_detail {

// Decodes one UTF-8 code point starting at `pos`, advancing it. Malformed
// bytes decode as U+FFFD so normalization is total on arbitrary input.
inline char32_t decode_utf8(std::string_view s, std::size_t& pos) {
  const auto byte = [&](std::size_t i) -> std::uint32_t {
    return static_cast<std::uint8_t>(s[i]);
  };
  const std::uint32_t b0 = byte(pos);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  const auto cont = [&](std::size_t i) {
    return i < s.size() && (byte(i) & 0xC0u) == 0x80u;
  };
  if ((b0 & 0xE0u) == 0xC0u && cont(pos + 1)) {
    const char32_t cp = ((b0 & 0x1Fu) << 6) | (byte(pos + 1) & 0x3Fu);
    pos += 2;
    return cp >= 0x80 ? cp : 0xFFFD;
  }
  if ((b0 & 0xF0u) == 0xE0u && cont(pos + 1) && cont(pos + 2)) {
    const char32_t cp = ((b0 & 0x0Fu) << 12) | ((byte(pos + 1) & 0x3Fu) << 6) |
                        (byte(pos + 2) & 0x3Fu);
    pos += 3;
    return cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF) ? cp : 0xFFFD;
  }
  if ((b0 & 0xF8u) == 0xF0u && cont(pos + 1) && cont(pos + 2) && cont(pos + 3)) {
    const char32_t cp = ((b0 & 0x07u) << 18) | ((byte(pos + 1) & 0x3Fu) << 12) |
                        ((byte(pos + 2) & 0x3Fu) << 6) | (byte(pos + 3) & 0x3Fu);
    pos += 4;
    return cp >= 0x10000 && cp <= 0x10FFFF ? cp : 0xFFFD;
  }
  ++pos;
  return 0xFFFD;
}

inline void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Simple-fold lowercase over the scripts the corpora use: ASCII, Latin-1
// supplement, Latin Extended-A, and Cyrillic. Everything else passes through.
inline char32_t fold_case(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1: À..Þ map by +0x20; U+00D7 is the multiplication sign, not a letter.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A alternates upper/lower. Three subranges pair even/odd,
  // two pair odd/even; İ and Ÿ break the pattern and are mapped explicitly.
  if (cp == 0x130) return U'i';
  if (cp == 0x178) return 0xFF;
  if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177))
    return (cp % 2 == 0) ? cp + 1 : cp;
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E))
    return (cp % 2 == 1) ? cp + 1 : cp;
  // Cyrillic: А..Я by +0x20, Ѐ..Џ by +0x50.
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

inline bool is_whitespace(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

inline bool is_punctuation(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1:   // ¡
    case 0xA7:   // §
    case 0xAB:   // «
    case 0xB6:   // ¶
    case 0xB7:   // ·
    case 0xBB:   // »
    case 0xBF:   // ¿
      return true;
    default:
      break;
  }
  // General punctuation (dashes, curly quotes, ellipsis) and the replacement
  // character produced for malformed input.
  return (cp >= 0x2010 && cp <= 0x206F) || cp == 0xFFFD;
}

}  // namespace text_detail

// Lowercases, strips punctuation, and splits on Unicode whitespace.
// Punctuation is removed rather than treated as a separator, so "don't"
// becomes one token. The language tag is accepted for interface stability;
// the fold covers all scripts the supported corpora contain.
inline std::vector<std::string> normalize_text(std::string_view s,
                                               std::string_view language = "") {
  (void)language;
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = text_detail::decode_utf8(s, pos);
    if (text_detail::is_whitespace(cp)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else if (!text_detail::is_punctuation(cp)) {
      text_detail::encode_utf8(text_detail::fold_case(cp), current);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

// Plain whitespace split with no folding or stripping, for callers that
// evaluate pre-normalized transcripts.
inline std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t cp = text_detail::decode_utf8(s, pos);
    if (text_detail::is_whitespace(cp)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      text_detail::encode_utf8(cp, current);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace augvox::eval
