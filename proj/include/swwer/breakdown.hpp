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

#ifndef SWWER_BREAKDOWN_HPP_
#define SWWER_BREAKDOWN_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swwer/corpus.hpp"
#include "swwer/metrics.hpp"

namespace swwer {

// Label used for records that do not carry a grouping dimension.
inline constexpr std::string_view kMissingCategory = "n/a";

struct GroupKey {
  // (dimension, category) in grouping order.
  std::vector<std::pair<std::string, std::string>> parts;

  std::string Label() const;  // "formality=formal,acoustic_environment=clean"

  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
  friend bool operator==(const GroupKey&, const GroupKey&) = default;
};

// Macro averages as percentages.
struct GroupCell {
  double cer = 0.0;
  double wer = 0.0;
  double sw_wer = 0.0;
  std::size_t count = 0;
};

struct BreakdownRow {
  std::string system_name;
  GroupKey key;
  GroupCell cell;
  // Lowest value among systems for the same key; ties are all marked.
  bool best_cer = false;
  bool best_wer = false;
  bool best_sw_wer = false;
};

struct BreakdownTable {
  std::vector<std::string> dimensions;
  std::vector<std::string> systems;  // first-appearance order in the scores
  std::vector<BreakdownRow> rows;    // system order, then key order

  const BreakdownRow* Find(std::string_view system, const GroupKey& key) const;
};

// Scores may mix systems. Throws Error(kUnknownDimension) or
// Error(kUnresolvedId).
BreakdownTable GroupScores(std::span<const UtteranceScore> scores,
                           std::span<const UtteranceRecord> records,
                           std::span<const std::string> dimensions);

// Two-dimensional layout of one system's breakdown with count-weighted
// margins; absent cells are nullopt.
struct CrossTab {
  std::string system_name;
  std::string row_dimension;
  std::string column_dimension;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::vector<std::optional<GroupCell>>> cells;  // [row][column]
  std::vector<std::optional<GroupCell>> row_margins;
  std::vector<std::optional<GroupCell>> column_margins;
  GroupCell grand;
};

// Throws Error(kDimensionality) unless the table has exactly two
// dimensions.
std::vector<CrossTab> CrossTabulate(const BreakdownTable& table);

// Count-weighted mean of cells: sum(count * value) / sum(count).
GroupCell WeightedMerge(std::span<const GroupCell> cells);

struct SystemMetrics {
  std::string name;
  double cer = 0.0;
  double wer = 0.0;
  double sw_wer = 0.0;
};

struct ComparisonRow {
  SystemMetrics metrics;
  bool best_cer = false;
  bool best_wer = false;
  bool best_sw_wer = false;
  std::size_t rank = 0;  // by SW-WER, 1 is best, ties share a rank
};

struct Comparison {
  std::vector<ComparisonRow> rows;  // input order
};

// Throws Error(kEmptyInput).
Comparison CompareSystems(std::span<const SystemMetrics> systems);
std::vector<SystemMetrics> ToSystemMetrics(std::span<const CorpusSummary> summaries);

enum class MetricKind { kCer, kWer, kSwWer };

std::string_view ToString(MetricKind metric);

struct BoxStats {
  std::string system_name;
  GroupKey key;
  std::size_t count = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double lower_whisker = 0.0;
  double upper_whisker = 0.0;
  std::vector<std::pair<std::string, double>> outliers;  // (utterance id, value)
};

// Per-group quartiles (linear interpolation) of a per-utterance metric in
// percent, with 1.5 * IQR whiskers and the points beyond them.
std::vector<BoxStats> MetricDistribution(std::span<const UtteranceScore> scores,
                                         std::span<const UtteranceRecord> records,
                                         std::span<const std::string> dimensions,
                                         MetricKind metric = MetricKind::kSwWer);

}  // namespace swwer

#endif  // SWWER_BREAKDOWN_HPP_
