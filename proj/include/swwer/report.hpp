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

#ifndef SWWER_REPORT_HPP_
#define SWWER_REPORT_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swwer/breakdown.hpp"
#include "swwer/corpus.hpp"
#include "swwer/metrics.hpp"
#include "swwer/taxonomy.hpp"

// Renderers for every output file. Each returns the complete file content;
// the CLI only decides where to put it. Every file opens with a metadata
// block (JSON "meta" object, CSV "#" lines, Markdown HTML comment).
namespace swwer::report {

struct OutputMeta {
  std::string command;
  std::string normalization;  // NormalizationConfig::Describe()
  std::string aggregation;    // "macro" / "micro"
};

std::string_view ToolkitVersion();

// Two decimals, the way percentages are printed in tables.
std::string FormatPercent(double value);
std::string CsvField(std::string_view value);

std::string ScoreJsonLine(const UtteranceScore& score);
std::string ScoresJsonl(std::span<const UtteranceScore> scores, const OutputMeta& meta);
std::string SegmentsJsonl(std::span<const UtteranceScore> scores, const OutputMeta& meta);

struct SystemCorrelation {
  std::string system_name;
  std::optional<CorrelationReport> report;  // nullopt when degenerate
  std::string note;
};

std::string SummaryJson(std::span<const CorpusSummary> summaries, const Comparison& comparison,
                        std::span<const SystemCorrelation> correlations, const OutputMeta& meta);
std::string ComparisonCsv(const Comparison& comparison, const OutputMeta& meta);
std::string ComparisonMarkdown(const Comparison& comparison, const OutputMeta& meta);
std::string ComparisonJson(const Comparison& comparison, const OutputMeta& meta);
std::string ScatterCsv(std::span<const SystemCorrelation> correlations, const OutputMeta& meta);

std::string BreakdownCsv(const BreakdownTable& table, const OutputMeta& meta);
std::string BreakdownMarkdown(const BreakdownTable& table, const OutputMeta& meta);
std::string BreakdownJson(const BreakdownTable& table, const OutputMeta& meta);
std::string DistributionCsv(const BreakdownTable& table, std::span<const BoxStats> boxes,
                            const OutputMeta& meta);

std::string StatsJson(const DatasetStats& stats, const OutputMeta& meta);
std::string StatsCsv(const DatasetStats& stats, const OutputMeta& meta);
std::string StatsMarkdown(const DatasetStats& stats, const OutputMeta& meta);
std::string HistogramCsv(const DatasetStats& stats, const OutputMeta& meta);

std::string ProfileJson(std::span<const ErrorProfile> profiles, const TaxonomyOptions& options,
                        bool lexicon_loaded, const OutputMeta& meta);
std::string ProfileCsv(std::span<const ErrorProfile> profiles, const OutputMeta& meta);
std::string ProfileMarkdown(std::span<const ErrorProfile> profiles, const OutputMeta& meta);

}  // namespace swwer::report

#endif  // SWWER_REPORT_HPP_
