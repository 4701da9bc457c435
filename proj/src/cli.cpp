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

#include "swwer/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "swwer/breakdown.hpp"
#include "swwer/error.hpp"
#include "swwer/report.hpp"

namespace swwer::cli {
namespace {

constexpr std::size_t kMaxLoggedIssues = 20;

void Log(const std::string& message) { std::cerr << "swwer: " << message << '\n'; }

std::string_view CommandName(Subcommand sub) {
  switch (sub) {
    case Subcommand::kEvaluate: return "evaluate";
    case Subcommand::kBreakdown: return "breakdown";
    case Subcommand::kStats: return "stats";
    case Subcommand::kDiagnose: return "diagnose";
    case Subcommand::kCompare: return "compare";
  }
  return "?";
}

bool Wants(const RunConfig& config, std::string_view format) {
  return std::find(config.formats.begin(), config.formats.end(), format) != config.formats.end();
}

void WriteFile(const RunConfig& config, const std::string& name, const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create output directory " + config.out_dir.string());
  const std::filesystem::path path = config.out_dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

void LogIssues(const std::vector<ManifestIssue>& issues, std::string_view source) {
  for (std::size_t k = 0; k < issues.size() && k < kMaxLoggedIssues; ++k) {
    const auto& issue = issues[k];
    std::ostringstream msg;
    msg << source << (issue.line ? " line " + std::to_string(issue.line) : std::string())
        << (issue.severity == ManifestIssue::Severity::kError ? " error" : " warning")
        << (issue.id.empty() ? std::string() : " [" + issue.id + "]") << ": " << issue.message;
    Log(msg.str());
  }
  if (issues.size() > kMaxLoggedIssues) {
    Log(std::to_string(issues.size() - kMaxLoggedIssues) + " more issue(s) in " + std::string(source));
  }
}

struct Inputs {
  NormalizationConfig norm;
  Manifest manifest;
  std::vector<HypothesisSet> systems;
};

Inputs LoadInputs(const RunConfig& config, bool need_hypotheses) {
  if (config.manifest.empty()) throw Error(ErrorKind::kConfig, "--refs is required");
  if (need_hypotheses && config.hypotheses.empty()) {
    throw Error(ErrorKind::kConfig, "at least one --hyps SYSTEM=PATH is required");
  }
  Inputs in;
  in.norm = ResolveNormalization(config.norm);
  ManifestOptions options;
  options.mode = config.strictness;
  options.duration_range = config.duration_range;
  in.manifest = LoadManifest(config.manifest, options);
  LogIssues(in.manifest.issues, config.manifest.string());
  for (const SystemInput& sys : config.hypotheses) {
    HypothesisSet set = LoadHypotheses(sys.path, sys.name);
    LogIssues(CheckHypotheses(in.manifest, set, config.strictness), sys.path.string());
    in.systems.push_back(std::move(set));
  }
  return in;
}

std::vector<UtteranceScore> ScoreSystem(const Inputs& in, const HypothesisSet& set, unsigned jobs) {
  std::vector<ScoringJob> work;
  work.reserve(in.manifest.records.size());
  for (const UtteranceRecord& rec : in.manifest.records) {
    work.push_back({&rec, set.by_id.at(rec.id)});
  }
  return ScoreAll(work, in.norm, set.system_name, jobs);
}

report::OutputMeta MetaFor(const RunConfig& config, const NormalizationConfig& norm) {
  return {std::string(CommandName(config.subcommand)), norm.Describe(),
          std::string(ToString(config.aggregation))};
}

std::string DimsSuffix(const std::vector<std::string>& dims) {
  std::string out;
  for (const auto& d : dims) out += "_" + d;
  return out;
}

void WriteComparison(const RunConfig& config, const Comparison& comparison,
                     const report::OutputMeta& meta) {
  if (Wants(config, "csv")) WriteFile(config, "comparison.csv", report::ComparisonCsv(comparison, meta));
  if (Wants(config, "md")) WriteFile(config, "comparison.md", report::ComparisonMarkdown(comparison, meta));
  if (Wants(config, "json")) WriteFile(config, "comparison.json", report::ComparisonJson(comparison, meta));
}

std::vector<SystemMetrics> ReadComparisonTable(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open table " + path.string());
  std::vector<SystemMetrics> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!header_seen) {
      header_seen = true;
      if (cells.size() < 4 || cells[0] != "Model") {
        throw Error(ErrorKind::kParse, path.string() + " line " + std::to_string(line_no) +
                                           ": expected header Model,CER,WER,SW-WER");
      }
      continue;
    }
    if (cells.size() < 4) {
      throw Error(ErrorKind::kParse, path.string() + " line " + std::to_string(line_no) +
                                         ": expected 4 columns");
    }
    try {
      rows.push_back({cells[0], std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3])});
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, path.string() + " line " + std::to_string(line_no) +
                                         ": non-numeric metric");
    }
  }
  return rows;
}

}  // namespace

SystemInput ParseSystemInput(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) {
    const std::filesystem::path path(spec);
    return {path.stem().string(), path};
  }
  if (eq == 0 || eq + 1 == spec.size()) {
    throw Error(ErrorKind::kConfig, "--hyps expects SYSTEM=PATH, got '" + spec + "'");
  }
  return {spec.substr(0, eq), std::filesystem::path(spec.substr(eq + 1))};
}

void RunEvaluate(const RunConfig& config) {
  const Inputs in = LoadInputs(config, true);
  const report::OutputMeta meta = MetaFor(config, in.norm);

  std::vector<UtteranceScore> all;
  std::vector<CorpusSummary> summaries;
  std::vector<report::SystemCorrelation> correlations;
  for (const HypothesisSet& set : in.systems) {
    std::vector<UtteranceScore> scores = ScoreSystem(in, set, config.jobs);
    summaries.push_back(AggregateCorpus(scores, config.aggregation));
    report::SystemCorrelation corr{set.system_name, std::nullopt, {}};
    try {
      corr.report = MetricCorrelation(scores);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDegenerateColumn) throw;
      corr.note = e.what();
    }
    correlations.push_back(std::move(corr));
    all.insert(all.end(), std::make_move_iterator(scores.begin()),
               std::make_move_iterator(scores.end()));
  }
  const Comparison comparison = CompareSystems(ToSystemMetrics(summaries));

  WriteFile(config, "scores.jsonl", report::ScoresJsonl(all, meta));
  if (config.dump_alignments) WriteFile(config, "segments.jsonl", report::SegmentsJsonl(all, meta));
  if (Wants(config, "json")) {
    WriteFile(config, "summary.json", report::SummaryJson(summaries, comparison, correlations, meta));
  }
  if (Wants(config, "csv")) WriteFile(config, "scatter.csv", report::ScatterCsv(correlations, meta));
  WriteComparison(config, comparison, meta);
  Log("scored " + std::to_string(all.size()) + " utterance(s) for " +
      std::to_string(in.systems.size()) + " system(s) into " + config.out_dir.string());
}

void RunBreakdown(const RunConfig& config) {
  if (config.dimensions.empty()) throw Error(ErrorKind::kConfig, "--by is required for breakdown");
  for (const auto& dim : config.dimensions) {
    if (!IsMetadataDimension(dim)) throw Error(ErrorKind::kUnknownDimension, "unknown dimension '" + dim + "'");
  }
  const Inputs in = LoadInputs(config, true);
  const report::OutputMeta meta = MetaFor(config, in.norm);
  std::vector<UtteranceScore> all;
  for (const HypothesisSet& set : in.systems) {
    std::vector<UtteranceScore> scores = ScoreSystem(in, set, config.jobs);
    all.insert(all.end(), std::make_move_iterator(scores.begin()),
               std::make_move_iterator(scores.end()));
  }
  const BreakdownTable table = GroupScores(all, in.manifest.records, config.dimensions);
  const std::string stem = "breakdown" + DimsSuffix(config.dimensions);
  if (Wants(config, "csv")) {
    WriteFile(config, stem + ".csv", report::BreakdownCsv(table, meta));
    const auto boxes = MetricDistribution(all, in.manifest.records, config.dimensions);
    WriteFile(config, "distribution" + DimsSuffix(config.dimensions) + ".csv",
              report::DistributionCsv(table, boxes, meta));
  }
  if (Wants(config, "md")) WriteFile(config, stem + ".md", report::BreakdownMarkdown(table, meta));
  if (Wants(config, "json")) WriteFile(config, stem + ".json", report::BreakdownJson(table, meta));
  Log("wrote " + std::to_string(table.rows.size()) + " group row(s) to " + config.out_dir.string());
}

void RunStats(const RunConfig& config) {
  const Inputs in = LoadInputs(config, false);
  const report::OutputMeta meta = MetaFor(config, in.norm);
  const DatasetStats stats = ComputeDatasetStatistics(in.manifest.records, in.norm);
  if (Wants(config, "json")) WriteFile(config, "stats.json", report::StatsJson(stats, meta));
  if (Wants(config, "csv")) {
    WriteFile(config, "stats.csv", report::StatsCsv(stats, meta));
    WriteFile(config, "histogram.csv", report::HistogramCsv(stats, meta));
  }
  if (Wants(config, "md")) WriteFile(config, "stats.md", report::StatsMarkdown(stats, meta));
  Log("statistics for " + std::to_string(stats.utterance_count) + " utterance(s) written to " +
      config.out_dir.string());
}

void RunDiagnose(const RunConfig& config) {
  const Inputs in = LoadInputs(config, true);
  const report::OutputMeta meta = MetaFor(config, in.norm);
  std::optional<FormalityLexicon> lexicon;
  if (config.lexicon) lexicon = FormalityLexicon::Load(*config.lexicon, in.norm);
  std::vector<ErrorProfile> profiles;
  for (const HypothesisSet& set : in.systems) {
    const std::vector<UtteranceScore> scores = ScoreSystem(in, set, config.jobs);
    profiles.push_back(BuildErrorProfile(scores, lexicon ? &*lexicon : nullptr, config.taxonomy));
  }
  if (Wants(config, "json")) {
    WriteFile(config, "taxonomy.json",
              report::ProfileJson(profiles, config.taxonomy, lexicon.has_value(), meta));
  }
  if (Wants(config, "csv")) WriteFile(config, "taxonomy.csv", report::ProfileCsv(profiles, meta));
  if (Wants(config, "md")) WriteFile(config, "taxonomy.md", report::ProfileMarkdown(profiles, meta));
  Log("error profiles for " + std::to_string(profiles.size()) + " system(s) written to " +
      config.out_dir.string());
}

void RunCompare(const RunConfig& config) {
  if (config.table) {
    const report::OutputMeta meta{"compare", "n/a (precomputed table)",
                                  std::string(ToString(config.aggregation))};
    WriteComparison(config, CompareSystems(ReadComparisonTable(*config.table)), meta);
    return;
  }
  const Inputs in = LoadInputs(config, true);
  const report::OutputMeta meta = MetaFor(config, in.norm);
  std::vector<CorpusSummary> summaries;
  for (const HypothesisSet& set : in.systems) {
    summaries.push_back(AggregateCorpus(ScoreSystem(in, set, config.jobs), config.aggregation));
  }
  WriteComparison(config, CompareSystems(ToSystemMetrics(summaries)), meta);
}

void Run(const RunConfig& config) {
  switch (config.subcommand) {
    case Subcommand::kEvaluate: return RunEvaluate(config);
    case Subcommand::kBreakdown: return RunBreakdown(config);
    case Subcommand::kStats: return RunStats(config);
    case Subcommand::kDiagnose: return RunDiagnose(config);
    case Subcommand::kCompare: return RunCompare(config);
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"Corpus-scale ASR scoring: WER, CER and substitution-weighted WER"};
  app.set_version_flag("--version", std::string(report::ToolkitVersion()));
  app.require_subcommand(1);

  RunConfig config;
  std::string manifest;
  std::vector<std::string> hyps;
  std::string agg = "macro";
  std::string out_dir = config.out_dir.string();
  std::string lexicon;
  std::string table;
  std::vector<double> duration_range;
  bool strict = true;

  auto add_common = [&](CLI::App* sub, bool with_hyps) {
    sub->add_option("--refs", manifest, "Reference manifest (JSON lines or TSV)");
    if (with_hyps) {
      sub->add_option("--hyps", hyps, "Hypotheses as SYSTEM=PATH (repeatable)");
      sub->add_option("--jobs", config.jobs, "Scoring worker threads")->check(CLI::Range(1u, 256u));
    }
    sub->add_option("--norm", config.norm, "Normalization profile name or config file path");
    sub->add_option("--agg", agg, "Corpus aggregation: macro or micro")
        ->check(CLI::IsMember({"macro", "micro"}));
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--format", config.formats, "Output formats: csv, md, json")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "md", "json"}));
    sub->add_flag("--strict,!--lenient", strict, "Fail on the first invalid row (default)");
    sub->add_option("--duration-range", duration_range, "Allowed duration MIN,MAX in seconds")
        ->delimiter(',')
        ->expected(2);
  };

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score every utterance and summarize per system");
  add_common(evaluate, true);
  evaluate->add_flag("--dump-segments", config.dump_alignments,
                     "Also write substitution segments to segments.jsonl");

  CLI::App* breakdown = app.add_subcommand("breakdown", "Grouped scores over metadata dimensions");
  add_common(breakdown, true);
  breakdown->add_option("--by", config.dimensions, "Grouping dimensions, comma separated")
      ->delimiter(',');

  CLI::App* stats = app.add_subcommand("stats", "Dataset statistics for a manifest");
  add_common(stats, false);

  CLI::App* diagnose = app.add_subcommand("diagnose", "Error taxonomy profile per system");
  add_common(diagnose, true);
  diagnose->add_option("--lexicon", lexicon, "Formality lexicon (informal<TAB>formal per line)");
  diagnose->add_option("--near-match-theta", config.taxonomy.near_match_theta,
                       "Segment CER at or below which a substitution is a near match")
      ->check(CLI::Range(0.0, 1.0));
  diagnose->add_option("--halluc-ins-tau", config.taxonomy.halluc_ins_tau,
                       "Insertion ratio above which an utterance is flagged");
  diagnose->add_option("--halluc-len-rho", config.taxonomy.halluc_len_rho,
                       "Hypothesis/reference length ratio above which an utterance is flagged");

  CLI::App* compare = app.add_subcommand("compare", "Rank systems and mark the best per metric");
  add_common(compare, true);
  compare->add_option("--table", table, "Precomputed CSV with Model,CER,WER,SW-WER columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (evaluate->parsed()) config.subcommand = Subcommand::kEvaluate;
    if (breakdown->parsed()) config.subcommand = Subcommand::kBreakdown;
    if (stats->parsed()) config.subcommand = Subcommand::kStats;
    if (diagnose->parsed()) config.subcommand = Subcommand::kDiagnose;
    if (compare->parsed()) config.subcommand = Subcommand::kCompare;
    config.manifest = manifest;
    for (const auto& h : hyps) config.hypotheses.push_back(ParseSystemInput(h));
    config.aggregation = ParseAggregationMode(agg);
    config.out_dir = out_dir;
    config.strictness = strict ? Strictness::kStrict : Strictness::kLenient;
    if (!lexicon.empty()) config.lexicon = lexicon;
    if (!table.empty()) config.table = table;
    if (duration_range.size() == 2) config.duration_range = {{duration_range[0], duration_range[1]}};
    Run(config);
  } catch (const Error& e) {
    std::cerr << "swwer: error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kIo ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "swwer: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace swwer::cli
