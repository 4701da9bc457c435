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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "swwer/align.hpp"
#include "swwer/breakdown.hpp"
#include "swwer/error.hpp"
#include "swwer/metrics.hpp"
#include "swwer/report.hpp"
#include "swwer/textnorm.hpp"
#include "test_util.hpp"

namespace {

using swwer::NormalizationConfig;
using Words = std::vector<std::string>;

const NormalizationConfig kDefault = NormalizationConfig::Default();

struct Outcome {
  bool pass = true;
  std::string detail;
  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c, d);
  return buf;
}

// 1
Outcome GoldenWer() {
  Outcome o;
  std::string values;
  for (const auto& row : swwer::testing::LoadGoldenPairs()) {
    const double wer = swwer::ScorePair("r", row.ref, row.hyp, kDefault, "gold").wer * 100;
    values += Fmt("%.3f ", wer);
    if (std::abs(wer - row.wer) > 0.01) o.Fail(Fmt("row WER %.4f vs expected %.2f", wer, row.wer));
  }
  if (o.pass) o.detail = "WER " + values;
  return o;
}

// 2
Outcome GoldenCer() {
  Outcome o;
  const auto rows = swwer::testing::LoadGoldenPairs();
  const double tolerance[] = {0.05, 2.5, 0.05, 2.5};
  std::string values;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double cer = swwer::ScorePair("r", rows[k].ref, rows[k].hyp, kDefault, "gold").cer * 100;
    values += Fmt("%.2f ", cer);
    if (std::abs(cer - rows[k].cer) > tolerance[k]) {
      o.Fail(Fmt("row %.0f CER %.4f vs expected %.2f", static_cast<double>(k + 1), cer, rows[k].cer));
    }
  }
  if (o.pass) o.detail = "CER " + values;
  return o;
}

// 3
Outcome GoldenSwWer() {
  Outcome o;
  const auto rows = swwer::testing::LoadGoldenPairs();
  // Frozen goldens, each the hand sum of n_i * clamped segment CER.
  const double golden[] = {
      (4.0 * 3 / 21 + 1.0 * 3 / 7 + 1) / 6,
      (2.0 * 6 / 11 + 1.0 * 7 / 11 + 4.0 * 5 / 18 + 2) / 11,
      (2.0 * 3 / 13 + 1.0 * 3 / 4 + 1.0 * 1 / 6 + 2) / 12,
      (1.0 * 3 / 5 + 1.0 * 1 / 8 + 1) / 7,
  };
  std::string values;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double sw = swwer::ScorePair("r", rows[k].ref, rows[k].hyp, kDefault, "gold").sw_wer;
    values += Fmt("%.2f ", sw * 100);
    if (std::abs(sw * 100 - rows[k].sw_wer) > 3.0) {
      o.Fail(Fmt("row %.0f SW-WER %.4f vs expected %.2f", static_cast<double>(k + 1), sw * 100, rows[k].sw_wer));
    }
    if (std::abs(sw - golden[k]) > 1e-12) o.Fail(Fmt("row %.0f drifted from frozen golden", k + 1.0));
  }
  if (o.pass) o.detail = "SW-WER " + values;
  return o;
}

// 4
Outcome MetricInequalities() {
  Outcome o;
  const Words alphabet = {"a", "ab", "b\u200ca", "a b", "ba", "abc", "\u200c", "c"};
  std::mt19937 rng(4);
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  while (checked < 10000) {
    const Words ref = swwer::testing::RandomWords(rng, 20, alphabet);
    const Words hyp = swwer::testing::RandomWords(rng, 20, alphabet);
    if (ref.empty()) {
      if (hyp.empty()) continue;
      try {
        swwer::ComputeSwWer(ref, hyp);
        o.Fail("empty reference accepted");
      } catch (const swwer::Error&) {
      }
      continue;
    }
    const auto r = swwer::ComputeSwWer(ref, hyp);
    ++checked;
    if (!(r.sw_wer >= 0.0 && r.sw_wer <= r.wer)) o.Fail("0 <= SW-WER <= WER violated");
    if (r.segments.empty() && r.sw_wer != r.wer) o.Fail("SW-WER != WER without segments");
    if (r.n_sub + r.counts.hits + r.counts.deletions != ref.size()) o.Fail("N_sub + C + D != |ref|");
    if (r.s_weighted > static_cast<double>(r.n_sub)) o.Fail("S_weighted > N_sub");
  }
  const double secs = Seconds(start);
  if (secs >= 10.0) o.Fail(Fmt("took %.2f s", secs));
  if (o.pass) o.detail = Fmt("%.0f pairs checked in %.2f s", static_cast<double>(checked), secs);
  return o;
}

// 5
Outcome OracleEquivalence() {
  Outcome o;
  const Words alphabet = {"ab", "ba", "abc"};
  std::vector<Words> all = {{}};
  for (std::size_t begin = 0, len = 1; len <= 4; ++len) {
    const std::size_t end = all.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (const auto& t : alphabet) {
        Words w = all[k];
        w.push_back(t);
        all.push_back(std::move(w));
      }
    }
    begin = end;
  }
  const auto start = std::chrono::steady_clock::now();
  std::size_t pairs = 0;
  for (const Words& ref : all) {
    for (const Words& hyp : all) {
      ++pairs;
      const std::size_t oracle = swwer::oracle::BruteForceDistance(ref, hyp);
      if (swwer::LevenshteinDistance(ref, hyp) != oracle ||
          swwer::LevenshteinAlign(ref, hyp).Distance() != oracle) {
        o.Fail("distance differs from brute force");
      }
      if (ref.empty()) continue;
      const auto r = swwer::ComputeSwWer(ref, hyp);
      const auto e = swwer::oracle::RecomputeSwWer(ref, hyp);
      if (std::abs(r.sw_wer - e.sw_wer) > 1e-12 || std::abs(r.wer - e.wer) > 1e-12 ||
          r.segments.size() != e.N || r.n_sub != e.N_sub) {
        o.Fail("SW-WER differs from symbol-by-symbol recomputation");
      }
    }
  }
  const double secs = Seconds(start);
  if (secs >= 60.0) o.Fail(Fmt("took %.2f s", secs));
  if (o.pass) o.detail = Fmt("%.0f pairs in %.2f s", static_cast<double>(pairs), secs);
  return o;
}

// 6
Outcome NormalizationFuzz() {
  Outcome o;
  std::vector<NormalizationConfig> configs = {kDefault, NormalizationConfig::Raw()};
  configs.emplace_back().zwnj_policy = swwer::ZwnjPolicy::kDrop;
  configs.emplace_back().zwnj_policy = swwer::ZwnjPolicy::kToSpace;
  std::mt19937 rng(6);
  const int n = 10000;
  for (int k = 0; k < n; ++k) {
    const std::string s = swwer::testing::RandomUnicodeText(rng, 32);
    for (const auto& config : configs) {
      const std::string once = swwer::NormalizeText(s, config);
      if (swwer::NormalizeText(once, config) != once) o.Fail("not idempotent under " + config.Describe());
      if (swwer::testing::Join(swwer::TokenizeWords(once)) != once) o.Fail("tokenizer round-trip failed");
    }
  }
  if (o.pass) o.detail = Fmt("%.0f strings x %.0f profiles", n, static_cast<double>(configs.size()));
  return o;
}

// 7
Outcome BreakdownRecombination() {
  Outcome o;
  const auto corpus = swwer::testing::MakePlantedCorpus(7);
  std::vector<swwer::UtteranceScore> scores;
  std::map<std::string, std::vector<double>> expected_sw, expected_wer, expected_cer;
  for (std::size_t k = 0; k < corpus.records.size(); ++k) {
    const auto& rec = corpus.records[k];
    scores.push_back(swwer::ScoreUtterance(rec, corpus.hypotheses[k], kDefault, "sys"));
    // Independent per-utterance values from the oracle.
    const std::string ref_text = swwer::NormalizeText(rec.text, kDefault);
    const std::string hyp_text = swwer::NormalizeText(corpus.hypotheses[k], kDefault);
    const auto e = swwer::oracle::RecomputeSwWer(swwer::TokenizeWords(ref_text), swwer::TokenizeWords(hyp_text));
    const std::u32string rc = swwer::oracle::Utf8ToScalars(ref_text);
    const std::u32string hc = swwer::oracle::Utf8ToScalars(hyp_text);
    const double cer = static_cast<double>(swwer::oracle::MemoDistance(
                           std::vector<char32_t>(rc.begin(), rc.end()), std::vector<char32_t>(hc.begin(), hc.end()))) /
                       static_cast<double>(rc.size());
    const std::string label = "formality=" + std::string(swwer::ToString(*rec.formality)) +
                              ",acoustic_environment=" + std::string(swwer::ToString(*rec.acoustic_environment));
    expected_sw[label].push_back(e.sw_wer);
    expected_wer[label].push_back(e.wer);
    expected_cer[label].push_back(cer);
  }
  auto mean = [](const std::vector<double>& v) {
    long double s = 0;
    for (double x : v) s += x;
    return static_cast<double>(100.0L * s / static_cast<long double>(v.size()));
  };
  const std::vector<std::string> dims = {"formality", "acoustic_environment"};
  const auto table = swwer::GroupScores(scores, corpus.records, dims);
  if (table.rows.size() != 4) o.Fail("expected 4 cells");
  double worst = 0;
  for (const auto& row : table.rows) {
    const std::string label = row.key.Label();
    const double dsw = std::abs(row.cell.sw_wer - mean(expected_sw.at(label)));
    const double dwer = std::abs(row.cell.wer - mean(expected_wer.at(label)));
    const double dcer = std::abs(row.cell.cer - mean(expected_cer.at(label)));
    worst = std::max({worst, dsw, dwer, dcer});
    if (dsw > 1e-12 || dwer > 1e-12 || dcer > 1e-12) o.Fail("cell " + label + " differs");
  }
  const auto tabs = swwer::CrossTabulate(table);
  const auto summary = swwer::AggregateCorpus(scores);
  const auto& grand = tabs.at(0).grand;
  const double margin_gap = std::max({std::abs(grand.sw_wer - summary.macro_sw_wer),
                                      std::abs(grand.wer - summary.macro_wer),
                                      std::abs(grand.cer - summary.macro_cer)});
  if (margin_gap > 1e-9) o.Fail(Fmt("grand margin off by %.3g", margin_gap));
  for (const auto& margins : {tabs[0].row_margins, tabs[0].column_margins}) {
    std::vector<swwer::GroupCell> cells;
    for (const auto& m : margins) cells.push_back(*m);
    const auto merged = swwer::WeightedMerge(cells);
    if (std::abs(merged.sw_wer - summary.macro_sw_wer) > 1e-9) o.Fail("margins do not recombine");
  }
  if (o.pass) o.detail = Fmt("max cell gap %.2g, grand margin gap %.2g", worst, margin_gap);
  return o;
}

// 8
Outcome TenSystemMarking() {
  Outcome o;
  std::ifstream in(swwer::testing::DataPath("ten_systems.csv"));
  std::vector<swwer::SystemMetrics> systems;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string name, cer, wer, sw;
    std::getline(ss, name, ',');
    std::getline(ss, cer, ',');
    std::getline(ss, wer, ',');
    std::getline(ss, sw, ',');
    systems.push_back({name, std::stod(cer), std::stod(wer), std::stod(sw)});
  }
  if (systems.size() != 10) o.Fail("fixture must have ten systems");
  const auto comparison = swwer::CompareSystems(systems);
  for (const auto& row : comparison.rows) {
    const bool is_avanegar = row.metrics.name == "Avanegar";
    if (row.best_cer != is_avanegar || row.best_wer != is_avanegar || row.best_sw_wer != is_avanegar) {
      o.Fail("unexpected best marking for " + row.metrics.name);
    }
    if (is_avanegar) {
      if (row.rank != 1) o.Fail("Avanegar not ranked first");
      const std::string shown = swwer::report::FormatPercent(row.metrics.cer) + " / " +
                                swwer::report::FormatPercent(row.metrics.wer) + " / " +
                                swwer::report::FormatPercent(row.metrics.sw_wer);
      if (shown != "8.75 / 19.30 / 15.68") o.Fail("Avanegar shown as " + shown);
      if (o.pass) o.detail = "Avanegar best on all three: " + shown;
    }
  }
  return o;
}

// 9
Outcome CorrelationEmitter() {
  Outcome o;
  std::mt19937 rng(9);
  const Words alphabet = {"ab", "ba", "abc", "b", "ca"};

  // Substitution-free: hypotheses built only by deleting and inserting.
  std::vector<swwer::UtteranceScore> clean;
  std::bernoulli_distribution drop(0.2), add(0.15);
  for (int k = 0; clean.size() < 300 && k < 10000; ++k) {
    Words ref;
    do ref = swwer::testing::RandomWords(rng, 12, alphabet);
    while (ref.empty());
    Words hyp;
    for (const auto& w : ref) {
      if (!drop(rng)) hyp.push_back(w);
      if (add(rng)) hyp.push_back("zz");
    }
    auto s = swwer::ScorePair("c" + std::to_string(k), swwer::testing::Join(ref), swwer::testing::Join(hyp),
                              kDefault, "sys");
    if (s.seg_count == 0) clean.push_back(std::move(s));
  }
  const double r_clean = swwer::MetricCorrelation(clean).wer_sw_wer;
  if (std::abs(r_clean - 1.0) > 1e-12) o.Fail(Fmt("substitution-free r = %.15f", r_clean));

  // Random corpora against the textbook formula.
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<swwer::UtteranceScore> scores;
    for (int k = 0; k < 200; ++k) {
      Words ref;
      do ref = swwer::testing::RandomWords(rng, 12, alphabet);
      while (ref.empty());
      scores.push_back(swwer::ScorePair("u" + std::to_string(k), swwer::testing::Join(ref),
                                        swwer::testing::Join(swwer::testing::RandomWords(rng, 12, alphabet)),
                                        kDefault, "sys"));
    }
    const auto report = swwer::MetricCorrelation(scores);
    std::vector<double> wer, cer, sw;
    for (const auto& row : report.rows) {
      wer.push_back(row.wer);
      cer.push_back(row.cer);
      sw.push_back(row.sw_wer);
    }
    worst = std::max({worst, std::abs(report.wer_sw_wer - swwer::oracle::TextbookPearson(wer, sw)),
                      std::abs(report.cer_sw_wer - swwer::oracle::TextbookPearson(cer, sw)),
                      std::abs(report.wer_cer - swwer::oracle::TextbookPearson(wer, cer))});
  }
  if (worst > 1e-12) o.Fail(Fmt("textbook gap %.3g", worst));
  if (o.pass) o.detail = Fmt("substitution-free r - 1 = %.2g over %.0f utts, textbook gap %.2g", r_clean - 1.0,
                             static_cast<double>(clean.size()), worst);
  return o;
}

// 10
Outcome DeterminismThroughput() {
  Outcome o;
  const Words vocab = {"man", "to", "ketab", "khane", "dar", "ruz", "shab", "kar", "sabz", "ab",
                       "mi\u200ckonam", "می\u200cروم", "کتاب", "ye", "do", "se"};
  std::mt19937 rng(10);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1), len(5, 11), edit(0, 9);
  std::vector<swwer::UtteranceRecord> records(10000);
  std::vector<std::string> hyps(records.size());
  std::size_t words = 0;
  for (std::size_t k = 0; k < records.size(); ++k) {
    Words ref(len(rng));
    for (auto& w : ref) w = vocab[pick(rng)];
    Words hyp;
    for (const auto& w : ref) {
      const std::size_t e = edit(rng);
      if (e == 0) continue;
      hyp.push_back(e == 1 ? vocab[pick(rng)] : e == 2 ? w + "e" : w);
      if (e == 3) hyp.push_back(vocab[pick(rng)]);
    }
    words += ref.size();
    records[k].id = "utt" + std::to_string(k);
    records[k].text = swwer::testing::Join(ref);
    hyps[k] = swwer::testing::Join(hyp);
  }
  std::vector<swwer::ScoringJob> jobs;
  for (std::size_t k = 0; k < records.size(); ++k) jobs.push_back({&records[k], hyps[k]});
  const swwer::report::OutputMeta meta{"evaluate", kDefault.Describe(), "macro"};
  auto render = [&](const std::vector<swwer::UtteranceScore>& s) {
    return swwer::report::ScoresJsonl(s, meta) + swwer::report::SegmentsJsonl(s, meta);
  };

  const auto start = std::chrono::steady_clock::now();
  const auto first = swwer::ScoreAll(jobs, kDefault, "sys", 1);
  const std::string out1 = render(first);
  const double secs = Seconds(start);
  const std::string out2 = render(swwer::ScoreAll(jobs, kDefault, "sys", 1));
  const std::string out4 = render(swwer::ScoreAll(jobs, kDefault, "sys", 4));
  if (secs >= 10.0) o.Fail(Fmt("single-threaded scoring took %.2f s", secs));
  if (out1 != out2) o.Fail("outputs differ across runs");
  if (out1 != out4) o.Fail("outputs differ between 1 and 4 workers");
  if (o.pass) {
    o.detail = Fmt("%.0f pairs, %.0f ref words in %.2f s, %.0f output bytes identical", 10000.0,
                   static_cast<double>(words), secs, static_cast<double>(out1.size()));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Golden pair WER", GoldenWer},
      {"Golden pair CER", GoldenCer},
      {"Golden pair SW-WER", GoldenSwWer},
      {"Metric inequality suite", MetricInequalities},
      {"Oracle equivalence", OracleEquivalence},
      {"Normalization idempotence and round-trip", NormalizationFuzz},
      {"Breakdown recombination", BreakdownRecombination},
      {"Comparison marking on ten systems", TenSystemMarking},
      {"Correlation emitter", CorrelationEmitter},
      {"Determinism and throughput", DeterminismThroughput},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s %2zu. %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
