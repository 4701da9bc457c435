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

#include "swwer/taxonomy.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "swwer/error.hpp"

namespace swwer {
namespace {

constexpr char32_t kHeh = U'\u0647';

std::u32string WithoutBoundaries(std::string_view text) {
  std::u32string out;
  for (char32_t c : CharSequence(text)) {
    if (c != U' ' && c != kZwnj) out.push_back(c);
  }
  return out;
}

bool BoundaryOnly(std::string_view ref, std::string_view hyp) {
  return WithoutBoundaries(ref) == WithoutBoundaries(hyp);
}

bool DiffersByTrailingHeh(const std::u32string& a, const std::u32string& b) {
  const std::u32string& shorter = a.size() < b.size() ? a : b;
  const std::u32string& longer = a.size() < b.size() ? b : a;
  return longer.size() == shorter.size() + 1 && longer.back() == kHeh &&
         std::equal(shorter.begin(), shorter.end(), longer.begin());
}

std::string FormatCer(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

}  // namespace

std::string_view ToString(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kWordBoundary: return "word_boundary";
    case ErrorCategory::kHeKasrehSuffix: return "he_kasreh_suffix";
    case ErrorCategory::kFormalityVariant: return "formality_variant";
    case ErrorCategory::kNearMatch: return "near_match";
    case ErrorCategory::kFullSubstitution: return "full_substitution";
    case ErrorCategory::kHallucinationFlag: return "hallucination_flag";
  }
  return "unknown";
}

FormalityLexicon FormalityLexicon::Parse(std::string_view content, const NormalizationConfig& norm) {
  FormalityLexicon lexicon;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorKind::kParse,
                  "lexicon line " + std::to_string(line_no) + ": expected informal<TAB>formal");
    }
    std::string informal = NormalizeText(line.substr(0, tab), norm);
    std::string formal = NormalizeText(line.substr(tab + 1), norm);
    if (informal.empty() || formal.empty()) {
      throw Error(ErrorKind::kParse, "lexicon line " + std::to_string(line_no) + ": empty entry");
    }
    lexicon.Add(std::move(informal), std::move(formal));
  }
  return lexicon;
}

FormalityLexicon FormalityLexicon::Load(const std::filesystem::path& path,
                                        const NormalizationConfig& norm) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open lexicon " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), norm);
}

void FormalityLexicon::Add(std::string informal, std::string formal) {
  pairs_.emplace(std::move(informal), std::move(formal));
}

bool FormalityLexicon::Contains(std::string_view a, std::string_view b) const {
  auto has = [&](std::string_view x, std::string_view y) {
    return pairs_.find(std::pair<std::string, std::string>(x, y)) != pairs_.end();
  };
  return has(a, b) || has(b, a);
}

ErrorLabel ClassifySegment(const SubstitutionSegment& segment, const FormalityLexicon* lexicon,
                           double near_match_theta) {
  if (BoundaryOnly(segment.ref_str, segment.hyp_str)) {
    return {ErrorCategory::kWordBoundary, "sides equal once spaces and ZWNJ are removed"};
  }
  if (!segment.region_ref_str.empty() &&
      BoundaryOnly(segment.region_ref_str, segment.region_hyp_str)) {
    return {ErrorCategory::kWordBoundary,
            "error region equal once spaces and ZWNJ are removed: '" + segment.region_ref_str +
                "' vs '" + segment.region_hyp_str + "'"};
  }

  const std::vector<std::string> ref_words = TokenizeWords(segment.ref_str);
  const std::vector<std::string> hyp_words = TokenizeWords(segment.hyp_str);
  if (ref_words.size() == hyp_words.size()) {
    std::size_t differing = 0;
    bool heh_only = true;
    std::string which;
    for (std::size_t k = 0; k < ref_words.size(); ++k) {
      if (ref_words[k] == hyp_words[k]) continue;
      ++differing;
      if (!DiffersByTrailingHeh(CharSequence(ref_words[k]), CharSequence(hyp_words[k]))) {
        heh_only = false;
      }
      which = ref_words[k] + "' vs '" + hyp_words[k];
    }
    if (differing == 1 && heh_only) {
      return {ErrorCategory::kHeKasrehSuffix, "trailing heh: '" + which + "'"};
    }
  }

  if (lexicon != nullptr && !lexicon->empty()) {
    if (lexicon->Contains(segment.ref_str, segment.hyp_str)) {
      return {ErrorCategory::kFormalityVariant, "lexicon pair"};
    }
    if (!segment.region_ref_str.empty() &&
        lexicon->Contains(segment.region_ref_str, segment.region_hyp_str)) {
      return {ErrorCategory::kFormalityVariant, "lexicon pair over the error region"};
    }
    if (ref_words.size() == hyp_words.size() && !ref_words.empty()) {
      bool all_listed = true;
      for (std::size_t k = 0; k < ref_words.size() && all_listed; ++k) {
        all_listed = ref_words[k] == hyp_words[k] || lexicon->Contains(ref_words[k], hyp_words[k]);
      }
      if (all_listed) return {ErrorCategory::kFormalityVariant, "every word pair in lexicon"};
    }
  }

  if (segment.segment_cer <= near_match_theta) {
    return {ErrorCategory::kNearMatch, "segment CER " + FormatCer(segment.segment_cer) +
                                           " <= " + FormatCer(near_match_theta)};
  }
  return {ErrorCategory::kFullSubstitution, "segment CER " + FormatCer(segment.segment_cer) +
                                                " > " + FormatCer(near_match_theta)};
}

std::optional<ErrorLabel> DetectHallucination(const UtteranceScore& score, double tau, double rho) {
  if (score.ref_words == 0) return std::nullopt;
  const double ref = static_cast<double>(score.ref_words);
  const double insertion_ratio = static_cast<double>(score.counts.insertions) / ref;
  const double length_ratio = static_cast<double>(score.hyp_words) / ref;
  if (insertion_ratio > tau) {
    return ErrorLabel{ErrorCategory::kHallucinationFlag,
                      "insertion ratio " + FormatCer(insertion_ratio) + " > " + FormatCer(tau)};
  }
  if (length_ratio > rho) {
    return ErrorLabel{ErrorCategory::kHallucinationFlag,
                      "length ratio " + FormatCer(length_ratio) + " > " + FormatCer(rho)};
  }
  return std::nullopt;
}

ErrorProfile BuildErrorProfile(std::span<const UtteranceScore> scores, const FormalityLexicon* lexicon,
                               const TaxonomyOptions& options) {
  if (scores.empty()) throw Error(ErrorKind::kEmptyScoreSet, "no scores to profile");
  std::vector<const UtteranceScore*> ordered;
  ordered.reserve(scores.size());
  for (const auto& s : scores) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(), [](const UtteranceScore* a, const UtteranceScore* b) {
    return a->utterance_id < b->utterance_id;
  });

  ErrorProfile profile;
  profile.system_name = scores.front().system_name;
  for (const UtteranceScore* s : ordered) {
    for (std::size_t k = 0; k < s->segments.size(); ++k) {
      ErrorLabel label = ClassifySegment(s->segments[k], lexicon, options.near_match_theta);
      ++profile.counts[static_cast<std::size_t>(label.category)];
      ++profile.segment_count;
      profile.segments.push_back({s->utterance_id, k, std::move(label)});
    }
    if (DetectHallucination(*s, options.halluc_ins_tau, options.halluc_len_rho)) {
      profile.flagged_utterance_ids.push_back(s->utterance_id);
    }
  }
  if (profile.segment_count > 0) {
    for (std::size_t c = 0; c < kSegmentCategoryCount; ++c) {
      profile.proportions[c] =
          static_cast<double>(profile.counts[c]) / static_cast<double>(profile.segment_count);
    }
  }
  return profile;
}

}  // namespace swwer
