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

#ifndef SWWER_METRICS_HPP_
#define SWWER_METRICS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swwer/align.hpp"
#include "swwer/corpus.hpp"
#include "swwer/textnorm.hpp"

namespace swwer {

struct WerResult {
  double wer = 0.0;
  AlignmentCounts counts;
  AlignmentPath path;
};

struct CerResult {
  double cer = 0.0;  // unclamped
  std::size_t distance = 0;
  std::size_t ref_chars = 0;
};

// Substitution-weighted WER. Each run of substituted words contributes
// n_words * clamped segment CER instead of n_words:
//
//   sw_wer = (sum_i n_i * cer_i + I + D) / (N_sub + C + D)
//
// with N_sub = sum_i n_i, so the denominator is the reference word count.
struct SwWerResult {
  double sw_wer = 0.0;
  double wer = 0.0;
  AlignmentCounts counts;
  double s_weighted = 0.0;
  std::size_t n_sub = 0;
  std::vector<SubstitutionSegment> segments;
  AlignmentPath path;
};

// All three throw Error(kEmptyReference) when the reference is empty and
// the hypothesis is not; two empty inputs score 0.
WerResult ComputeWer(std::span<const std::string> ref_words, std::span<const std::string> hyp_words);
CerResult ComputeCer(std::string_view ref_text, std::string_view hyp_text);
SwWerResult ComputeSwWer(std::span<const std::string> ref_words,
                         std::span<const std::string> hyp_words);

struct UtteranceScore {
  std::string utterance_id;
  std::string system_name;
  double wer = 0.0;
  double cer = 0.0;
  double sw_wer = 0.0;
  AlignmentCounts counts;
  double s_weighted = 0.0;
  std::size_t n_sub = 0;
  std::size_t seg_count = 0;
  std::size_t ref_words = 0;
  std::size_t hyp_words = 0;
  std::size_t char_distance = 0;
  std::size_t ref_chars = 0;
  std::vector<SubstitutionSegment> segments;
};

// Normalizes both sides once, then derives WER, CER and SW-WER from the
// same normalized strings.
UtteranceScore ScoreUtterance(const UtteranceRecord& record, std::string_view hypothesis,
                              const NormalizationConfig& norm, std::string system_name);
UtteranceScore ScorePair(std::string id, std::string_view reference, std::string_view hypothesis,
                         const NormalizationConfig& norm, std::string system_name);

// Per-utterance scoring fanned out over `workers` threads. The result is in
// input order and does not depend on the worker count.
struct ScoringJob {
  const UtteranceRecord* record = nullptr;
  std::string_view hypothesis;
};
std::vector<UtteranceScore> ScoreAll(std::span<const ScoringJob> jobs, const NormalizationConfig& norm,
                                     const std::string& system_name, unsigned workers = 1);

enum class AggregationMode { kMacro, kMicro };

std::string_view ToString(AggregationMode mode);
AggregationMode ParseAggregationMode(std::string_view s);

// Percentages. Macro values are means of per-utterance fractions, micro
// values pool numerators and denominators.
struct CorpusSummary {
  std::string system_name;
  std::size_t utterance_count = 0;
  AggregationMode mode = AggregationMode::kMacro;
  double macro_wer = 0.0;
  double macro_cer = 0.0;
  double macro_sw_wer = 0.0;
  double micro_wer = 0.0;
  double micro_cer = 0.0;
  double micro_sw_wer = 0.0;

  double Wer() const { return mode == AggregationMode::kMacro ? macro_wer : micro_wer; }
  double Cer() const { return mode == AggregationMode::kMacro ? macro_cer : micro_cer; }
  double SwWer() const { return mode == AggregationMode::kMacro ? macro_sw_wer : micro_sw_wer; }
};

// Summation runs in utterance-id order, so the result is independent of
// the order of `scores`. Throws Error(kEmptyScoreSet).
CorpusSummary AggregateCorpus(std::span<const UtteranceScore> scores,
                              AggregationMode mode = AggregationMode::kMacro);

struct ScatterRow {
  std::string utterance_id;
  double wer = 0.0;
  double cer = 0.0;
  double sw_wer = 0.0;
};

struct CorrelationReport {
  double wer_sw_wer = 0.0;
  double cer_sw_wer = 0.0;
  double wer_cer = 0.0;
  std::vector<ScatterRow> rows;
};

// Throws Error(kDegenerateColumn) for fewer than two points or a constant
// column.
double PearsonR(std::span<const double> x, std::span<const double> y);
CorrelationReport MetricCorrelation(std::span<const UtteranceScore> scores);

}  // namespace swwer

#endif  // SWWER_METRICS_HPP_
