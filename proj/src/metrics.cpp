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

#include "swwer/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>
#include <tuple>

#include "swwer/error.hpp"

namespace swwer {
namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void RequireReference(std::size_t ref_size, std::size_t hyp_size, std::string_view what) {
  if (ref_size == 0 && hyp_size != 0) {
    throw Error(ErrorKind::kEmptyReference, std::string(what) + " has an empty reference");
  }
}

}  // namespace

WerResult ComputeWer(std::span<const std::string> ref_words, std::span<const std::string> hyp_words) {
  RequireReference(ref_words.size(), hyp_words.size(), "word sequence");
  WerResult result;
  result.path = LevenshteinAlign(ref_words, hyp_words);
  result.counts = Summarize(result.path);
  result.wer = Ratio(result.counts.Errors(), ref_words.size());
  return result;
}

CerResult ComputeCer(std::string_view ref_text, std::string_view hyp_text) {
  const std::u32string ref = CharSequence(ref_text);
  const std::u32string hyp = CharSequence(hyp_text);
  RequireReference(ref.size(), hyp.size(), "character sequence");
  CerResult result;
  result.ref_chars = ref.size();
  result.distance = LevenshteinDistance(ref, hyp);
  result.cer = Ratio(result.distance, result.ref_chars);
  return result;
}

SwWerResult ComputeSwWer(std::span<const std::string> ref_words,
                         std::span<const std::string> hyp_words) {
  RequireReference(ref_words.size(), hyp_words.size(), "word sequence");
  SwWerResult result;
  result.path = LevenshteinAlign(ref_words, hyp_words);
  result.counts = Summarize(result.path);
  result.segments = SubstitutionSegments(result.path, ref_words, hyp_words);
  for (const SubstitutionSegment& seg : result.segments) {
    result.s_weighted += static_cast<double>(seg.n_words) * seg.segment_cer;
    result.n_sub += seg.n_words;
  }
  const std::size_t denominator = result.n_sub + result.counts.hits + result.counts.deletions;
  if (denominator != 0) {
    const double numerator = result.s_weighted +
                             static_cast<double>(result.counts.insertions + result.counts.deletions);
    result.sw_wer = numerator / static_cast<double>(denominator);
  }
  result.wer = Ratio(result.counts.Errors(), ref_words.size());
  return result;
}

UtteranceScore ScorePair(std::string id, std::string_view reference, std::string_view hypothesis,
                         const NormalizationConfig& norm, std::string system_name) {
  const std::string ref_text = NormalizeText(reference, norm);
  const std::string hyp_text = NormalizeText(hypothesis, norm);
  const std::vector<std::string> ref_words = TokenizeWords(ref_text);
  const std::vector<std::string> hyp_words = TokenizeWords(hyp_text);
  if (ref_words.empty() && !hyp_words.empty()) {
    throw Error(ErrorKind::kEmptyReference,
                "utterance '" + id + "' has an empty reference after normalization");
  }

  SwWerResult sw = ComputeSwWer(ref_words, hyp_words);
  const CerResult cer = ComputeCer(ref_text, hyp_text);

  UtteranceScore score;
  score.utterance_id = std::move(id);
  score.system_name = std::move(system_name);
  score.wer = sw.wer;
  score.cer = cer.cer;
  score.sw_wer = sw.sw_wer;
  score.counts = sw.counts;
  score.s_weighted = sw.s_weighted;
  score.n_sub = sw.n_sub;
  score.seg_count = sw.segments.size();
  score.ref_words = ref_words.size();
  score.hyp_words = hyp_words.size();
  score.char_distance = cer.distance;
  score.ref_chars = cer.ref_chars;
  score.segments = std::move(sw.segments);
  return score;
}

UtteranceScore ScoreUtterance(const UtteranceRecord& record, std::string_view hypothesis,
                              const NormalizationConfig& norm, std::string system_name) {
  return ScorePair(record.id, record.text, hypothesis, norm, std::move(system_name));
}

std::vector<UtteranceScore> ScoreAll(std::span<const ScoringJob> jobs, const NormalizationConfig& norm,
                                     const std::string& system_name, unsigned workers) {
  std::vector<UtteranceScore> scores(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        scores[k] = ScoreUtterance(*jobs[k].record, jobs[k].hypothesis, norm, system_name);
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  // Report the first failing job in input order, whatever the schedule was.
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return scores;
}

std::string_view ToString(AggregationMode mode) {
  return mode == AggregationMode::kMacro ? "macro" : "micro";
}

AggregationMode ParseAggregationMode(std::string_view s) {
  if (s == "macro") return AggregationMode::kMacro;
  if (s == "micro") return AggregationMode::kMicro;
  throw Error(ErrorKind::kConfig, "aggregation mode must be macro or micro, got '" + std::string(s) + "'");
}

CorpusSummary AggregateCorpus(std::span<const UtteranceScore> scores, AggregationMode mode) {
  if (scores.empty()) throw Error(ErrorKind::kEmptyScoreSet, "no scores to aggregate");

  std::vector<const UtteranceScore*> ordered;
  ordered.reserve(scores.size());
  for (const auto& s : scores) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(), [](const UtteranceScore* a, const UtteranceScore* b) {
    return std::tie(a->utterance_id, a->wer, a->cer, a->sw_wer) <
           std::tie(b->utterance_id, b->wer, b->cer, b->sw_wer);
  });

  double sum_wer = 0.0, sum_cer = 0.0, sum_sw = 0.0;
  double sw_numerator = 0.0;
  std::size_t word_errors = 0, ref_words = 0, char_errors = 0, ref_chars = 0;
  for (const UtteranceScore* s : ordered) {
    sum_wer += s->wer;
    sum_cer += s->cer;
    sum_sw += s->sw_wer;
    word_errors += s->counts.Errors();
    ref_words += s->ref_words;
    char_errors += s->char_distance;
    ref_chars += s->ref_chars;
    sw_numerator += s->s_weighted + static_cast<double>(s->counts.insertions + s->counts.deletions);
  }

  CorpusSummary summary;
  summary.system_name = scores.front().system_name;
  summary.utterance_count = scores.size();
  summary.mode = mode;
  const double n = static_cast<double>(scores.size());
  summary.macro_wer = 100.0 * sum_wer / n;
  summary.macro_cer = 100.0 * sum_cer / n;
  summary.macro_sw_wer = 100.0 * sum_sw / n;
  summary.micro_wer = 100.0 * Ratio(word_errors, ref_words);
  summary.micro_cer = 100.0 * Ratio(char_errors, ref_chars);
  summary.micro_sw_wer = ref_words == 0 ? 0.0 : 100.0 * sw_numerator / static_cast<double>(ref_words);
  return summary;
}

double PearsonR(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::kDegenerateColumn, "columns differ in length");
  }
  if (x.size() < 2) {
    throw Error(ErrorKind::kDegenerateColumn, "correlation needs at least two points");
  }
  const double n = static_cast<double>(x.size());
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double dx = x[k] - mean_x;
    const double dy = y[k] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::kDegenerateColumn, "a metric column is constant");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationReport MetricCorrelation(std::span<const UtteranceScore> scores) {
  CorrelationReport report;
  std::vector<double> wer, cer, sw;
  wer.reserve(scores.size());
  cer.reserve(scores.size());
  sw.reserve(scores.size());
  for (const auto& s : scores) {
    wer.push_back(s.wer);
    cer.push_back(s.cer);
    sw.push_back(s.sw_wer);
    report.rows.push_back({s.utterance_id, s.wer, s.cer, s.sw_wer});
  }
  report.wer_sw_wer = PearsonR(wer, sw);
  report.cer_sw_wer = PearsonR(cer, sw);
  report.wer_cer = PearsonR(wer, cer);
  return report;
}

}  // namespace swwer
