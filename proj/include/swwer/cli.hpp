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

#ifndef SWWER_CLI_HPP_
#define SWWER_CLI_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swwer/corpus.hpp"
#include "swwer/metrics.hpp"
#include "swwer/taxonomy.hpp"

namespace swwer::cli {

enum class Subcommand { kEvaluate, kBreakdown, kStats, kDiagnose, kCompare };

struct SystemInput {
  std::string name;
  std::filesystem::path path;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::kEvaluate;
  std::filesystem::path manifest;
  std::vector<SystemInput> hypotheses;
  std::string norm = "default";
  AggregationMode aggregation = AggregationMode::kMacro;
  std::vector<std::string> dimensions;
  std::filesystem::path out_dir = "swwer-out";
  std::vector<std::string> formats = {"csv", "md", "json"};
  Strictness strictness = Strictness::kStrict;
  TaxonomyOptions taxonomy;
  std::optional<std::filesystem::path> lexicon;
  // compare: precomputed Model,CER,WER,SW-WER rows instead of scoring.
  std::optional<std::filesystem::path> table;
  std::optional<std::pair<double, double>> duration_range;
  unsigned jobs = 1;
  bool dump_alignments = false;
};

// Each Run* writes its files under config.out_dir and throws swwer::Error
// on failure.
void RunEvaluate(const RunConfig& config);
void RunBreakdown(const RunConfig& config);
void RunStats(const RunConfig& config);
void RunDiagnose(const RunConfig& config);
void RunCompare(const RunConfig& config);
void Run(const RunConfig& config);

// "SYSTEM=PATH"; a bare path takes the file stem as the system name.
SystemInput ParseSystemInput(const std::string& spec);

// Parses arguments, runs, and maps failures to exit codes: 0 success,
// 1 validation, 2 I/O.
int Main(int argc, char** argv);

}  // namespace swwer::cli

#endif  // SWWER_CLI_HPP_
