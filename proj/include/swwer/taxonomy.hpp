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

#ifndef SWWER_TAXONOMY_HPP_
#define SWWER_TAXONOMY_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swwer/align.hpp"
#include "swwer/metrics.hpp"
#include "swwer/textnorm.hpp"

namespace swwer {

// Segment-level categories come first, in rule order. The hallucination
// flag attaches to an utterance, never to a segment.
enum class ErrorCategory {
  kWordBoundary,
  kHeKasrehSuffix,
  kFormalityVariant,
  kNearMatch,
  kFullSubstitution,
  kHallucinationFlag,
};

inline constexpr std::size_t kSegmentCategoryCount = 5;

std::string_view ToString(ErrorCategory category);

struct ErrorLabel {
  ErrorCategory category = ErrorCategory::kFullSubstitution;
  std::string evidence;
};

// Informal/formal phrase pairs. Lookups are symmetric.
class FormalityLexicon {
 public:
  FormalityLexicon() = default;

  // UTF-8 text, one `informal<TAB>formal` pair per line, `#` starts a
  // comment. Entries are normalized with `norm` so they compare against
  // normalized segment text.
  static FormalityLexicon Parse(std::string_view content, const NormalizationConfig& norm);
  static FormalityLexicon Load(const std::filesystem::path& path, const NormalizationConfig& norm);

  void Add(std::string informal, std::string formal);
  bool Contains(std::string_view a, std::string_view b) const;
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

 private:
  std::set<std::pair<std::string, std::string>, std::less<>> pairs_;
};

struct TaxonomyOptions {
  double near_match_theta = 0.3;
  double halluc_ins_tau = 0.5;
  double halluc_len_rho = 2.0;
};

// First matching rule wins:
//   1. word_boundary     removing spaces and ZWNJ makes both sides equal
//                        (checked on the segment, then on its surrounding
//                        error region)
//   2. he_kasreh_suffix  the sides differ only by one trailing heh on one
//                        side of one word
//   3. formality_variant the pair is in the lexicon
//   4. near_match        segment_cer <= theta
//   5. full_substitution
ErrorLabel ClassifySegment(const SubstitutionSegment& segment, const FormalityLexicon* lexicon,
                           double near_match_theta = 0.3);

// Flags when I / ref_words > tau or hyp_words / ref_words > rho.
std::optional<ErrorLabel> DetectHallucination(const UtteranceScore& score, double tau = 0.5,
                                              double rho = 2.0);

struct ClassifiedSegment {
  std::string utterance_id;
  std::size_t segment_index = 0;
  ErrorLabel label;
};

struct ErrorProfile {
  std::string system_name;
  std::size_t segment_count = 0;
  // Indexed by segment-level ErrorCategory.
  std::array<std::size_t, kSegmentCategoryCount> counts{};
  std::array<double, kSegmentCategoryCount> proportions{};
  std::vector<std::string> flagged_utterance_ids;
  std::vector<ClassifiedSegment> segments;
};

// Scores must all come from one system. Segments are visited in utterance
// id order. Throws Error(kEmptyScoreSet).
ErrorProfile BuildErrorProfile(std::span<const UtteranceScore> scores, const FormalityLexicon* lexicon,
                               const TaxonomyOptions& options = {});

}  // namespace swwer

#endif  // SWWER_TAXONOMY_HPP_
