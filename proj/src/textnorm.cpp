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

#include "swwer/textnorm.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "swwer/error.hpp"

namespace swwer {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string CodepointLabel(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
  return buf;
}

char32_t ParseCodepoint(std::string_view token) {
  token = Trim(token);
  if (token.size() > 2 && (token[0] == 'U' || token[0] == 'u') && token[1] == '+') {
    const std::string hex(token.substr(2));
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(hex, &used, 16);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != hex.size() || value > 0x10FFFF) {
      throw Error(ErrorKind::kConfig, "bad codepoint '" + std::string(token) + "'");
    }
    return static_cast<char32_t>(value);
  }
  // A literal single character is accepted too.
  const std::u32string decoded = DecodeUtf8(token);
  if (decoded.size() != 1) {
    throw Error(ErrorKind::kConfig, "bad codepoint '" + std::string(token) + "'");
  }
  return decoded.front();
}

bool ParseBool(std::string_view value) {
  const std::string v = Lower(Trim(value));
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(ErrorKind::kConfig, "expected boolean, got '" + std::string(value) + "'");
}

}  // namespace

NormalizationConfig NormalizationConfig::Raw() {
  NormalizationConfig config;
  config.name = "raw";
  config.char_map.clear();
  config.zwnj_policy = ZwnjPolicy::kKeep;
  config.diacritics_policy = DiacriticsPolicy::kKeep;
  config.punctuation_policy = PunctuationPolicy::kKeep;
  config.collapse_whitespace = true;
  return config;
}

void NormalizationConfig::Validate() const {
  std::set<char32_t> sources;
  for (const auto& [from, to] : char_map) {
    if (!sources.insert(from).second) {
      throw Error(ErrorKind::kConfig, "char_map source " + CodepointLabel(from) + " listed twice");
    }
  }
  for (const auto& [from, to] : char_map) {
    if (sources.count(to) != 0) {
      throw Error(ErrorKind::kConfig,
                  "char_map target " + CodepointLabel(to) + " is also a source");
    }
    for (char32_t c : {from, to}) {
      if (c == kZwnj || IsWhitespace(c)) {
        throw Error(ErrorKind::kConfig, "char_map may not remap whitespace or ZWNJ (" +
                                            CodepointLabel(c) + "); use the policies");
      }
    }
    if (diacritics_policy == DiacriticsPolicy::kStrip && IsArabicDiacritic(to)) {
      throw Error(ErrorKind::kConfig, "char_map target " + CodepointLabel(to) +
                                          " is a diacritic that would be stripped");
    }
    if (punctuation_policy == PunctuationPolicy::kStrip && IsPunctuation(to)) {
      throw Error(ErrorKind::kConfig, "char_map target " + CodepointLabel(to) +
                                          " is punctuation that would be stripped");
    }
  }
}

std::string NormalizationConfig::Describe() const {
  std::string out = "name=" + name + ";char_map=";
  for (std::size_t i = 0; i < char_map.size(); ++i) {
    if (i) out += ',';
    out += CodepointLabel(char_map[i].first) + ":" + CodepointLabel(char_map[i].second);
  }
  out += ";zwnj_policy=";
  switch (zwnj_policy) {
    case ZwnjPolicy::kKeep: out += "keep"; break;
    case ZwnjPolicy::kDrop: out += "drop"; break;
    case ZwnjPolicy::kToSpace: out += "to_space"; break;
  }
  out += ";diacritics_policy=";
  out += diacritics_policy == DiacriticsPolicy::kStrip ? "strip" : "keep";
  out += ";punctuation_policy=";
  out += punctuation_policy == PunctuationPolicy::kStrip ? "strip" : "keep";
  out += ";collapse_whitespace=";
  out += collapse_whitespace ? "true" : "false";
  return out;
}

NormalizationConfig ParseNormalizationConfig(std::string_view text) {
  NormalizationConfig config;
  config.name = "custom";
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    body = Trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::kConfig,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = Lower(Trim(body.substr(0, eq)));
    const std::string_view value = Trim(body.substr(eq + 1));
    const std::string lowered = Lower(value);
    if (key == "name") {
      config.name = std::string(value);
    } else if (key == "char_map") {
      config.char_map.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view entry = Trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (entry.empty()) continue;
        const auto colon = entry.find(':');
        if (colon == std::string_view::npos) {
          throw Error(ErrorKind::kConfig, "line " + std::to_string(line_no) +
                                              ": char_map entries are SRC:DST");
        }
        config.char_map.emplace_back(ParseCodepoint(entry.substr(0, colon)),
                                     ParseCodepoint(entry.substr(colon + 1)));
      }
    } else if (key == "zwnj_policy") {
      if (lowered == "keep") config.zwnj_policy = ZwnjPolicy::kKeep;
      else if (lowered == "drop") config.zwnj_policy = ZwnjPolicy::kDrop;
      else if (lowered == "to_space") config.zwnj_policy = ZwnjPolicy::kToSpace;
      else throw Error(ErrorKind::kConfig, "unknown zwnj_policy '" + std::string(value) + "'");
    } else if (key == "diacritics_policy") {
      if (lowered == "keep") config.diacritics_policy = DiacriticsPolicy::kKeep;
      else if (lowered == "strip") config.diacritics_policy = DiacriticsPolicy::kStrip;
      else throw Error(ErrorKind::kConfig, "unknown diacritics_policy '" + std::string(value) + "'");
    } else if (key == "punctuation_policy") {
      if (lowered == "keep") config.punctuation_policy = PunctuationPolicy::kKeep;
      else if (lowered == "strip") config.punctuation_policy = PunctuationPolicy::kStrip;
      else throw Error(ErrorKind::kConfig, "unknown punctuation_policy '" + std::string(value) + "'");
    } else if (key == "collapse_whitespace") {
      config.collapse_whitespace = ParseBool(value);
    } else {
      throw Error(ErrorKind::kConfig, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  config.Validate();
  return config;
}

NormalizationConfig LoadNormalizationConfig(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open normalization config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  NormalizationConfig config = ParseNormalizationConfig(buf.str());
  if (config.name == "custom") config.name = path.stem().string();
  return config;
}

NormalizationConfig ResolveNormalization(std::string_view name_or_path) {
  if (name_or_path == "default") return NormalizationConfig::Default();
  if (name_or_path == "raw") return NormalizationConfig::Raw();
  return LoadNormalizationConfig(std::filesystem::path(std::string(name_or_path)));
}

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c < 0 ? U'\ufffd' : static_cast<char32_t>(c));
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t c : text) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) {
      n = 0;
      U8_APPEND_UNSAFE(buf, n, 0xFFFD);
    }
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
  }
  return out;
}

bool IsArabicDiacritic(char32_t c) { return c >= 0x064B && c <= 0x0652; }

bool IsPunctuation(char32_t c) {
  // Arabic comma, semicolon and question mark are already category Po; the
  // explicit check keeps them stripped even on an ICU without that data.
  return c == U'\u060c' || c == U'\u061b' || c == U'\u061f' ||
         u_ispunct(static_cast<UChar32>(c));
}

bool IsWhitespace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

std::string NormalizeText(std::string_view text, const NormalizationConfig& config) {
  const std::u32string input = DecodeUtf8(text);
  std::u32string out;
  out.reserve(input.size());
  bool pending_space = false;
  for (char32_t c : input) {
    for (const auto& [from, to] : config.char_map) {
      if (c == from) {
        c = to;
        break;
      }
    }
    if (config.diacritics_policy == DiacriticsPolicy::kStrip && IsArabicDiacritic(c)) continue;
    if (config.punctuation_policy == PunctuationPolicy::kStrip && IsPunctuation(c)) continue;
    if (c == kZwnj) {
      if (config.zwnj_policy == ZwnjPolicy::kDrop) continue;
      if (config.zwnj_policy == ZwnjPolicy::kToSpace) c = U' ';
    }
    if (config.collapse_whitespace) {
      if (IsWhitespace(c)) {
        pending_space = !out.empty();
        continue;
      }
      if (pending_space) {
        out.push_back(U' ');
        pending_space = false;
      }
    }
    out.push_back(c);
  }
  return EncodeUtf8(out);
}

std::vector<std::string> TokenizeWords(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(' ', start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) tokens.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

std::u32string CharSequence(std::string_view text) { return DecodeUtf8(text); }

}  // namespace swwer
