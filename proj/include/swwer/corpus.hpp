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

#ifndef SWWER_CORPUS_HPP_
#define SWWER_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "swwer/textnorm.hpp"

namespace swwer {

enum class Gender { kMale, kFemale, kMix };
enum class AgeGroup { kChild, kTeen, kAdult, kSenior, kMix };
enum class Formality { kFormal, kInformal };
enum class AcousticEnvironment { kClean, kNoisy, kPhone, kReverberant };

std::string_view ToString(Gender v);
std::string_view ToString(AgeGroup v);
std::string_view ToString(Formality v);
std::string_view ToString(AcousticEnvironment v);

// Case-insensitive; nullopt when the label is not in the declared set.
std::optional<Gender> ParseGender(std::string_view s);
std::optional<AgeGroup> ParseAgeGroup(std::string_view s);
std::optional<Formality> ParseFormality(std::string_view s);
std::optional<AcousticEnvironment> ParseAcousticEnvironment(std::string_view s);

// The thirteen accent labels of the benchmark, "Standard" included.
std::span<const std::string_view> CanonicalAccents();
// Canonical spelling for a case-insensitive match, nullopt otherwise.
std::optional<std::string_view> CanonicalAccent(std::string_view s);

// One reference utterance and its metadata. Only id and text are required;
// absent metadata stays nullopt and groups as "n/a".
struct UtteranceRecord {
  std::string id;
  std::string text;
  std::optional<double> duration_s;
  std::optional<int> num_speakers;
  std::optional<Gender> gender;
  std::optional<AgeGroup> age;
  std::optional<std::string> accent;
  std::optional<Formality> formality;
  std::optional<std::string> semantic_content;
  std::optional<std::string> data_source;
  std::optional<AcousticEnvironment> acoustic_environment;
  std::optional<bool> spontaneous;
  std::vector<std::string> speaker_ids;

  friend bool operator==(const UtteranceRecord&, const UtteranceRecord&) = default;
};

// Dimensions usable for grouping: the record's metadata fields plus the
// derived speaker_class (single/multiple) and accent_class
// (standard/accented).
std::span<const std::string_view> MetadataDimensions();
bool IsMetadataDimension(std::string_view name);
// Category label of `record` along `dimension`, nullopt when the record
// does not carry it. Throws Error(kUnknownDimension).
std::optional<std::string> DimensionValue(const UtteranceRecord& record, std::string_view dimension);

enum class Strictness { kStrict, kLenient };

struct ManifestIssue {
  enum class Severity { kWarning, kError };
  std::size_t line = 0;
  Severity severity = Severity::kWarning;
  std::string id;
  std::string message;
};

struct ManifestOptions {
  Strictness mode = Strictness::kStrict;
  // Optional [min, max] duration check in seconds; off by default.
  std::optional<std::pair<double, double>> duration_range;
};

struct Manifest {
  std::vector<UtteranceRecord> records;
  std::vector<ManifestIssue> issues;

  const UtteranceRecord* Find(std::string_view id) const;
  void BuildIndex();

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

// JSON lines, or a tab-separated table with a header row naming the same
// keys. The format is sniffed from the first non-blank line.
Manifest ParseManifest(std::string_view content, const ManifestOptions& options = {});
Manifest LoadManifest(const std::filesystem::path& path, const ManifestOptions& options = {});

// JSON lines in the manifest schema; absent fields are omitted.
void WriteManifestJsonl(std::span<const UtteranceRecord> records, std::ostream& out);

struct HypothesisSet {
  std::string system_name;
  std::map<std::string, std::string> by_id;
};

// `id<TAB>text` lines or JSON lines with "id" and "text".
HypothesisSet ParseHypotheses(std::string_view content, std::string system_name);
HypothesisSet LoadHypotheses(const std::filesystem::path& path, std::string system_name);

// Strict: every hypothesis id must exist in the manifest and every manifest
// id must have a hypothesis (Error kMissingId). Lenient: unknown ids are
// dropped and missing hypotheses become empty strings, each with a warning.
std::vector<ManifestIssue> CheckHypotheses(const Manifest& manifest, HypothesisSet& hyps,
                                           Strictness mode);

struct HistogramBin {
  double lower_s = 0.0;
  double upper_s = 0.0;
  std::size_t count = 0;
};

struct CategoryShare {
  std::size_t count = 0;
  double proportion = 0.0;
};

struct DatasetStats {
  std::size_t utterance_count = 0;
  std::size_t with_duration = 0;
  std::size_t without_duration = 0;
  double total_duration_s = 0.0;
  double total_duration_h = 0.0;
  double min_dur_s = 0.0;
  double max_dur_s = 0.0;
  double avg_dur_s = 0.0;
  std::size_t word_count = 0;
  std::size_t unique_word_count = 0;
  std::optional<std::size_t> speaker_count;
  std::vector<HistogramBin> histogram;
  // dimension -> category -> share, over records carrying that dimension.
  std::map<std::string, std::map<std::string, CategoryShare>> category_proportions;
};

inline constexpr double kHistogramBinSeconds = 2.0;

DatasetStats ComputeDatasetStatistics(std::span<const UtteranceRecord> records,
                                      const NormalizationConfig& norm);

}  // namespace swwer

#endif  // SWWER_CORPUS_HPP_
