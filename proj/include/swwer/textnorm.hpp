// Copyright 2026 The swwer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWWER_TEXTNORM_HPP_
#define SWWER_TEXTNORM_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace swwer {

inline constexpr char32_t kZwnj = U'\u200c';

enum class ZwnjPolicy { kKeep, kDrop, kToSpace };
enum class DiacriticsPolicy { kKeep, kStrip };
enum class PunctuationPolicy { kKeep, kStrip };

// Declarative text canonicalization policy. Reference and hypothesis are
// always passed through the same config before any metric is computed.
struct NormalizationConfig {
  std::string name = "default";
  // Applied in order, one pass. No target may also appear as a source.
  std::vector<std::pair<char32_t, char32_t>> char_map = {
      {U'\u064a', U'\u06cc'},  // Arabic Yeh -> Persian Yeh
      {U'\u0643', U'\u06a9'},  // Arabic Kaf -> Persian Kaf
  };
  ZwnjPolicy zwnj_policy = ZwnjPolicy::kKeep;
  DiacriticsPolicy diacritics_policy = DiacriticsPolicy::kStrip;
  PunctuationPolicy punctuation_policy = PunctuationPolicy::kStrip;
  bool collapse_whitespace = true;

  static NormalizationConfig Default() { return {}; }

  // Everything off except whitespace collapsing.
  static NormalizationConfig Raw();

  // Throws Error(kConfig) when the config could not be idempotent.
  void Validate() const;

  // One-line, stable rendering used as provenance in output files.
  std::string Describe() const;
};

// Parses the key = value format; keys mirror the struct fields.
//
//   # comment
//   name = my-profile
//   char_map = U+064A:U+06CC, U+0643:U+06A9
//   zwnj_policy = keep | drop | to_space
//   diacritics_policy = keep | strip
//   punctuation_policy = keep | strip
//   collapse_whitespace = true | false
//
// Keys that are absent keep their default value.
NormalizationConfig ParseNormalizationConfig(std::string_view text);
NormalizationConfig LoadNormalizationConfig(const std::filesystem::path& path);

// Accepts a built-in profile name ("default", "raw") or a path to a config
// file.
NormalizationConfig ResolveNormalization(std::string_view name_or_path);

// Invalid UTF-8 sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

bool IsArabicDiacritic(char32_t c);
bool IsPunctuation(char32_t c);
bool IsWhitespace(char32_t c);

std::string NormalizeText(std::string_view text,
                          const NormalizationConfig& config);

// Splits normalized text on U+0020. Empty tokens are dropped; ZWNJ is part
// of the token it sits in.
std::vector<std::string> TokenizeWords(std::string_view text);

// Unicode scalar values. Space and a retained ZWNJ count as one each.
std::u32string CharSequence(std::string_view text);

}  // namespace swwer

#endif  // SWWER_TEXTNORM_HPP_
