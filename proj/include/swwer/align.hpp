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

#ifndef SWWER_ALIGN_HPP_
#define SWWER_ALIGN_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swwer {

enum class EditKind : std::uint8_t { kMatch, kSubstitute, kInsert, kDelete };

std::string_view EditKindName(EditKind kind);

// match/substitute carry both indices, delete only ref_index, insert only
// hyp_index.
struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct AlignmentPath {
  std::vector<EditOp> ops;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;

  std::size_t Distance() const;

  friend bool operator==(const AlignmentPath&, const AlignmentPath&) = default;
};

struct AlignmentCounts {
  std::size_t hits = 0;           // C
  std::size_t substitutions = 0;  // substitution ops, one per word
  std::size_t insertions = 0;     // I
  std::size_t deletions = 0;      // D

  std::size_t Errors() const { return substitutions + insertions + deletions; }
  std::size_t RefLength() const { return hits + substitutions + deletions; }
  std::size_t HypLength() const { return hits + substitutions + insertions; }

  friend bool operator==(const AlignmentCounts&, const AlignmentCounts&) = default;
};

// A maximal run of consecutive substitute ops. Ranges are half-open word
// index spans; both have n_words elements.
struct SubstitutionSegment {
  std::size_t ref_begin = 0;
  std::size_t ref_end = 0;
  std::size_t hyp_begin = 0;
  std::size_t hyp_end = 0;
  std::size_t n_words = 0;
  std::string ref_str;
  std::string hyp_str;
  std::size_t char_distance = 0;
  std::size_t ref_chars = 0;
  double segment_cer = 0.0;  // clamped to [0, 1]
  // Texts of the maximal run of non-match ops that contains this segment,
  // i.e. the segment plus any adjacent insertions and deletions.
  std::string region_ref_str;
  std::string region_hyp_str;
};

// Unit-cost Levenshtein alignment with a full cost matrix and a
// deterministic backtrace. Walking back from the end, ties are resolved in
// the order delete, diagonal (match/substitute), insert.
template <std::ranges::random_access_range Seq>
AlignmentPath LevenshteinAlign(const Seq& ref, const Seq& hyp) {
  const std::size_t n = std::ranges::size(ref);
  const std::size_t m = std::ranges::size(hyp);
  const std::size_t width = m + 1;
  std::vector<std::uint32_t> cost((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return cost[i * width + j]; };

  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = static_cast<std::uint32_t>(i);
    const auto& r = ref[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t diag = at(i - 1, j - 1) + (r == hyp[j - 1] ? 0u : 1u);
      const std::uint32_t del = at(i - 1, j) + 1;
      const std::uint32_t ins = at(i, j - 1) + 1;
      at(i, j) = std::min({diag, del, ins});
    }
  }

  AlignmentPath path;
  path.ref_len = n;
  path.hyp_len = m;
  path.ops.reserve(std::max(n, m));
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      path.ops.push_back({EditKind::kDelete, i - 1, std::nullopt});
      --i;
    } else if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (same ? 0u : 1u)) {
        path.ops.push_back({same ? EditKind::kMatch : EditKind::kSubstitute, i - 1, j - 1});
        --i;
        --j;
      } else {
        path.ops.push_back({EditKind::kInsert, std::nullopt, j - 1});
        --j;
      }
    } else {
      path.ops.push_back({EditKind::kInsert, std::nullopt, j - 1});
      --j;
    }
  }
  std::reverse(path.ops.begin(), path.ops.end());
  return path;
}

// Distance only, two rows of memory. Always equals
// LevenshteinAlign(ref, hyp).Distance().
template <std::ranges::random_access_range Seq>
std::size_t LevenshteinDistance(const Seq& ref, const Seq& hyp) {
  const std::size_t n = std::ranges::size(ref);
  const std::size_t m = std::ranges::size(hyp);
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    const auto& r = ref[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = std::min({prev[j - 1] + (r == hyp[j - 1] ? 0 : 1), prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

AlignmentCounts Summarize(const AlignmentPath& path);

// Runs of substitute ops in path order, each scored with the character
// error rate between its space-joined reference and hypothesis words.
std::vector<SubstitutionSegment> SubstitutionSegments(const AlignmentPath& path,
                                                      std::span<const std::string> ref_tokens,
                                                      std::span<const std::string> hyp_tokens);

// Character-level CER of hyp against ref, clamped to [0, 1]. An empty
// reference scores 0 against an empty hypothesis and 1 otherwise.
double ClampedCharErrorRate(std::string_view ref, std::string_view hyp);

// One JSON object per op, in path order:
// {"kind":"substitute","ref_index":3,"hyp_index":2}
std::string PathToJsonLines(const AlignmentPath& path);

}  // namespace swwer

#endif  // SWWER_ALIGN_HPP_
