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

#ifndef SWWER_TESTS_TEST_UTIL_HPP_
#define SWWER_TESTS_TEST_UTIL_HPP_

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "swwer/corpus.hpp"

namespace swwer::testing {

inline std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(SWWER_TEST_DATA) / name;
}

inline std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GoldenPair {
  int row = 0;
  std::string ref;
  std::string hyp;
  double cer = 0, wer = 0, sw_wer = 0;  // expected percentages, truncated to two places
};

inline std::vector<GoldenPair> LoadGoldenPairs() {
  std::vector<GoldenPair> rows;
  std::ifstream in(DataPath("golden_pairs.jsonl"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    rows.push_back({j["row"], j["ref"], j["hyp"], j["cer"], j["wer"], j["sw_wer"]});
  }
  return rows;
}

// Words over a small alphabet; some carry ZWNJ or Arabic letters.
inline std::vector<std::string> RandomWords(std::mt19937& rng, std::size_t max_len,
                                            const std::vector<std::string>& alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<std::string> out(len(rng));
  for (auto& w : out) w = alphabet[pick(rng)];
  return out;
}

inline std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (k) out += ' ';
    out += words[k];
  }
  return out;
}

// Random Unicode text mixing ASCII, Arabic letters, diacritics, ZWNJ,
// punctuation and assorted whitespace.
inline std::string RandomUnicodeText(std::mt19937& rng, std::size_t max_len = 24) {
  static const std::vector<char32_t> pool = {
      U'a', U'b', U'Z', U'1', U' ', U' ', U'\t', U'\n', U' ', U'\u3000', U'.', U',',
      U'!', U'،', U'؛', U'؟', U'«', U'\u200c', U'\u200c', U'\u200d',
      U'ي', U'ی', U'ك', U'ک', U'ئ', U'ه', U'ب', U'م',
      U'ً', U'َ', U'ِ', U'ْ', U'ّ', U'۱', U'١', U'é',
      U'中', U'\U0001F600', U'-', U'_'};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::u32string s(len(rng), U' ');
  for (auto& c : s) c = pool[pick(rng)];
  std::string out;
  for (char32_t c : s) {
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (c < 0x800) {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
      out += static_cast<char>(0xE0 | (c >> 12));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (c >> 18));
      out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}


// 200 utterances over formality x acoustic_environment (formal/informal x
// clean/noisy). Hypotheses get more word errors in noisy and informal cells
// so each cell has a distinct mean.
struct PlantedCorpus {
  std::vector<UtteranceRecord> records;
  std::vector<std::string> hypotheses;  // parallel to records
};

inline PlantedCorpus MakePlantedCorpus(unsigned seed, std::size_t n = 200) {
  static const std::vector<std::string> vocab = {"sab", "kar", "ketab", "dar", "khane", "ruz",
                                                 "shab", "man", "to", "u", "ma", "ab"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<std::size_t> len(4, 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PlantedCorpus corpus;
  for (std::size_t k = 0; k < n; ++k) {
    UtteranceRecord r;
    char id[32];
    std::snprintf(id, sizeof(id), "utt%04zu", k);
    r.id = id;
    const bool informal = k % 2 == 1;
    const bool noisy = (k / 2) % 2 == 1;
    r.formality = informal ? Formality::kInformal : Formality::kFormal;
    r.acoustic_environment = noisy ? AcousticEnvironment::kNoisy : AcousticEnvironment::kClean;
    r.duration_s = 1.0 + static_cast<double>(k % 17);
    const double error_rate = 0.05 + (informal ? 0.1 : 0.0) + (noisy ? 0.2 : 0.0);
    std::vector<std::string> ref(len(rng));
    for (auto& w : ref) w = vocab[pick(rng)];
    std::vector<std::string> hyp;
    for (const auto& w : ref) {
      const double u = unit(rng);
      if (u < error_rate / 3) continue;                          // deletion
      if (u < 2 * error_rate / 3) hyp.push_back(w + "e");        // near substitution
      else if (u < error_rate) hyp.push_back(vocab[pick(rng)] + "x");  // far substitution
      else hyp.push_back(w);
      if (unit(rng) < error_rate / 4) hyp.push_back(vocab[pick(rng)]);  // insertion
    }
    r.text = Join(ref);
    corpus.records.push_back(std::move(r));
    corpus.hypotheses.push_back(Join(hyp));
  }
  return corpus;
}

}  // namespace swwer::testing

#endif  // SWWER_TESTS_TEST_UTIL_HPP_
