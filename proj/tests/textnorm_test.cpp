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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "swwer/error.hpp"
#include "test_util.hpp"

namespace swwer {
namespace {

const NormalizationConfig kDefault = NormalizationConfig::Default();

std::string Utf8(std::u32string_view s) { return EncodeUtf8(s); }

TEST(NormalizeText, CollapsesWhitespace) {
  EXPECT_EQ(NormalizeText("a   b ", kDefault), "a b");
  EXPECT_EQ(NormalizeText(" \t a\n\nb \u3000", kDefault), "a b");
  EXPECT_EQ(NormalizeText("", kDefault), "");
  EXPECT_EQ(NormalizeText("   ", kDefault), "");
}

TEST(NormalizeText, MapsArabicYehAndKaf) {
  EXPECT_EQ(NormalizeText(Utf8(U"ي"), kDefault), Utf8(U"ی"));
  EXPECT_EQ(NormalizeText(Utf8(U"كتاب"), kDefault),
            Utf8(U"کتاب"));
}

TEST(NormalizeText, StripsDiacritics) {
  EXPECT_EQ(NormalizeText(Utf8(U"بَه"), kDefault), Utf8(U"به"));
  for (char32_t c = 0x064B; c <= 0x0652; ++c) {
    EXPECT_EQ(NormalizeText(Utf8(std::u32string(1, c)), kDefault), "") << static_cast<unsigned>(c);
  }
  EXPECT_FALSE(IsArabicDiacritic(0x0653));
}

TEST(NormalizeText, StripsPunctuation) {
  EXPECT_EQ(NormalizeText("hello, world!", kDefault), "hello world");
  EXPECT_EQ(NormalizeText(Utf8(U"سلام؟ ،؛"), kDefault),
            Utf8(U"سلام"));
  EXPECT_EQ(NormalizeText(Utf8(U"«من»"), kDefault), Utf8(U"من"));
}

TEST(NormalizeText, ZwnjPolicies) {
  const std::string word = Utf8(U"می\u200cخوام");
  EXPECT_EQ(NormalizeText(word, kDefault), word);

  NormalizationConfig drop;
  drop.zwnj_policy = ZwnjPolicy::kDrop;
  EXPECT_EQ(NormalizeText(word, drop), Utf8(U"میخوام"));

  NormalizationConfig space;
  space.zwnj_policy = ZwnjPolicy::kToSpace;
  EXPECT_EQ(NormalizeText(word, space), Utf8(U"می خوام"));
  EXPECT_EQ(TokenizeWords(NormalizeText(word, space)).size(), 2u);
}

TEST(NormalizeText, RawKeepsEverythingButSpacing) {
  const NormalizationConfig raw = NormalizationConfig::Raw();
  const std::string text = Utf8(U"يَ,  \u200cx");
  EXPECT_EQ(NormalizeText(text, raw), Utf8(U"يَ, \u200cx"));
}

TEST(NormalizeText, InvalidUtf8BecomesReplacementChar) {
  EXPECT_EQ(NormalizeText("a\xff" "b", NormalizationConfig::Raw()), Utf8(U"a\ufffdb"));
}

TEST(TokenizeWords, SplitsOnSpaceOnly) {
  EXPECT_EQ(TokenizeWords("a b  c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(TokenizeWords("").empty());
  EXPECT_TRUE(TokenizeWords("   ").empty());
  // ZWNJ stays inside the token.
  const std::string word = Utf8(U"درخت\u200cها");
  EXPECT_EQ(TokenizeWords(word + " x"), (std::vector<std::string>{word, "x"}));
}

TEST(CharSequence, CountsScalarsIncludingZwnjAndSpace) {
  EXPECT_EQ(CharSequence(Utf8(U"می\u200cکردند")).size(), 8u);
  EXPECT_EQ(CharSequence(Utf8(U"به نام")).size(), 6u);
  EXPECT_EQ(CharSequence("\xF0\x9F\x98\x80").size(), 1u);
}

TEST(GoldenPairNormalization, TokenCounts) {
  const auto rows = testing::LoadGoldenPairs();
  ASSERT_EQ(rows.size(), 4u);
  const std::vector<std::size_t> ref_words = {6, 11, 12, 7};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(TokenizeWords(NormalizeText(rows[k].ref, kDefault)).size(), ref_words[k]) << k;
  }
}

TEST(NormalizationConfig, ParseFullFile) {
  const auto config = ParseNormalizationConfig(
      "# comment\n"
      "name = strict-fa\n"
      "char_map = U+064A:U+06CC, U+0643:U+06A9, U+0649:U+06CC\n"
      "zwnj_policy = to_space\n"
      "diacritics_policy = keep\n"
      "punctuation_policy = strip   # trailing comment\n"
      "collapse_whitespace = true\n");
  EXPECT_EQ(config.name, "strict-fa");
  EXPECT_EQ(config.char_map.size(), 3u);
  EXPECT_EQ(config.zwnj_policy, ZwnjPolicy::kToSpace);
  EXPECT_EQ(config.diacritics_policy, DiacriticsPolicy::kKeep);
  EXPECT_EQ(config.punctuation_policy, PunctuationPolicy::kStrip);
  EXPECT_TRUE(config.collapse_whitespace);
  EXPECT_NE(config.Describe(), kDefault.Describe());
}

void ExpectConfigError(const std::string& text) {
  try {
    ParseNormalizationConfig(text);
    FAIL() << "accepted: " << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig) << text;
  }
}

TEST(NormalizationConfig, RejectsBadInput) {
  ExpectConfigError("nonsense");
  ExpectConfigError("colour = red");
  ExpectConfigError("zwnj_policy = sometimes");
  ExpectConfigError("char_map = U+064A");
  ExpectConfigError("char_map = U+ZZZZ:U+0041");
  // A target that is also a source breaks idempotence.
  ExpectConfigError("char_map = a:b, b:c");
  ExpectConfigError("char_map = a:b, a:c");
  // A target that a later stage strips.
  ExpectConfigError("char_map = a:!");
  ExpectConfigError("char_map = a:U+200C");
}

TEST(NormalizationConfig, ResolveNamesAndFiles) {
  EXPECT_EQ(ResolveNormalization("default").Describe(), kDefault.Describe());
  EXPECT_EQ(ResolveNormalization("raw").Describe(), NormalizationConfig::Raw().Describe());

  const auto dir = std::filesystem::temp_directory_path() / "swwer_textnorm_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "mine.conf";
  std::ofstream(path) << "zwnj_policy = drop\n";
  const auto loaded = ResolveNormalization(path.string());
  EXPECT_EQ(loaded.name, "mine");
  EXPECT_EQ(loaded.zwnj_policy, ZwnjPolicy::kDrop);

  try {
    ResolveNormalization((dir / "missing.conf").string());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

std::vector<NormalizationConfig> FuzzConfigs() {
  std::vector<NormalizationConfig> configs = {kDefault, NormalizationConfig::Raw()};
  NormalizationConfig drop;
  drop.zwnj_policy = ZwnjPolicy::kDrop;
  configs.push_back(drop);
  NormalizationConfig space;
  space.zwnj_policy = ZwnjPolicy::kToSpace;
  configs.push_back(space);
  return configs;
}

TEST(NormalizeProperty, IdempotentAndRoundTrips) {
  std::mt19937 rng(20261018);
  for (const auto& config : FuzzConfigs()) {
    for (int k = 0; k < 2000; ++k) {
      const std::string s = testing::RandomUnicodeText(rng);
      const std::string once = NormalizeText(s, config);
      ASSERT_EQ(NormalizeText(once, config), once) << config.Describe();
      const auto tokens = TokenizeWords(once);
      ASSERT_EQ(testing::Join(tokens), once);
      for (const auto& t : tokens) ASSERT_EQ(t.find(' '), std::string::npos);
    }
  }
}

TEST(NormalizeProperty, CharSequenceMatchesLeadByteCount) {
  std::mt19937 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const std::string s = testing::RandomUnicodeText(rng);
    std::size_t leads = 0;
    for (unsigned char c : s) leads += (c & 0xC0) != 0x80;
    ASSERT_EQ(CharSequence(s).size(), leads);
  }
}

}  // namespace
}  // namespace swwer
