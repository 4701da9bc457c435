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

#include "swwer/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "swwer/error.hpp"

namespace swwer {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr std::array<std::string_view, 13> kAccents = {
    "Baluchi", "Dari", "Isfahani", "Jonubi", "Kermani", "Kurdish", "Lori",
    "Mashhadi", "Shirazi", "Shomali", "Standard", "Turkish", "Yazdi",
};

constexpr std::array<std::string_view, 11> kDimensions = {
    "accent", "accent_class", "acoustic_environment", "age", "data_source", "formality",
    "gender", "num_speakers", "semantic_content", "speaker_class", "spontaneous",
};

constexpr std::array<std::string_view, 13> kManifestKeys = {
    "id", "text", "duration_s", "num_speakers", "gender", "age", "accent", "formality",
    "semantic_content", "data_source", "acoustic_environment", "spontaneous", "speaker_ids",
};

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

std::string_view TrimView(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename E, std::size_t N>
std::optional<E> LookupEnum(std::string_view s, const std::array<std::pair<std::string_view, E>, N>& table) {
  s = TrimView(s);
  for (const auto& [name, value] : table) {
    if (EqualsIgnoreCase(name, s)) return value;
  }
  return std::nullopt;
}

constexpr std::array<std::pair<std::string_view, Gender>, 3> kGenders = {{
    {"male", Gender::kMale}, {"female", Gender::kFemale}, {"mix", Gender::kMix}}};
constexpr std::array<std::pair<std::string_view, AgeGroup>, 5> kAges = {{
    {"child", AgeGroup::kChild}, {"teen", AgeGroup::kTeen}, {"adult", AgeGroup::kAdult},
    {"senior", AgeGroup::kSenior}, {"mix", AgeGroup::kMix}}};
constexpr std::array<std::pair<std::string_view, Formality>, 2> kFormalities = {{
    {"formal", Formality::kFormal}, {"informal", Formality::kInformal}}};
constexpr std::array<std::pair<std::string_view, AcousticEnvironment>, 4> kEnvironments = {{
    {"clean", AcousticEnvironment::kClean}, {"noisy", AcousticEnvironment::kNoisy},
    {"phone", AcousticEnvironment::kPhone}, {"reverberant", AcousticEnvironment::kReverberant}}};

template <typename E, std::size_t N>
std::string_view EnumName(E value, const std::array<std::pair<std::string_view, E>, N>& table) {
  for (const auto& [name, v] : table) {
    if (v == value) return name;
  }
  return "?";
}

std::vector<std::string_view> SplitLines(std::string_view content) {
  if (content.starts_with("\xEF\xBB\xBF")) content.remove_prefix(3);
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string ReadFile(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + std::string(what) + " " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "failed reading " + path.string());
  return buf.str();
}

// Collects problems for one manifest row. Errors reject the row, warnings
// only annotate it.
class RowChecker {
 public:
  RowChecker(std::size_t line, const ManifestOptions& options, std::vector<ManifestIssue>& issues)
      : line_(line), options_(options), issues_(issues) {}

  void Fail(const std::string& id, std::string message) {
    if (options_.mode == Strictness::kStrict) {
      throw Error(ErrorKind::kSchema, "line " + std::to_string(line_) +
                                          (id.empty() ? "" : " (id '" + id + "')") + ": " + message);
    }
    issues_.push_back({line_, ManifestIssue::Severity::kError, id, std::move(message)});
    failed_ = true;
  }

  void Warn(const std::string& id, std::string message) {
    issues_.push_back({line_, ManifestIssue::Severity::kWarning, id, std::move(message)});
  }

  bool failed() const { return failed_; }
  bool strict() const { return options_.mode == Strictness::kStrict; }

 private:
  std::size_t line_;
  const ManifestOptions& options_;
  std::vector<ManifestIssue>& issues_;
  bool failed_ = false;
};

std::optional<std::string> AsText(const Json& v) {
  if (v.is_null()) return std::nullopt;
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (TrimView(s).empty()) return std::nullopt;
    return s;
  }
  if (v.is_number() || v.is_boolean()) return v.dump();
  return std::nullopt;
}

// Builds a record from loosely typed fields; TSV cells arrive as strings,
// JSON values keep their types.
std::optional<UtteranceRecord> BuildRecord(const std::map<std::string, Json>& fields,
                                           RowChecker& check) {
  UtteranceRecord rec;
  auto field = [&](std::string_view key) -> const Json* {
    const auto it = fields.find(std::string(key));
    return it == fields.end() || it->second.is_null() ? nullptr : &it->second;
  };

  if (const Json* v = field("id"); v && v->is_string()) {
    rec.id = std::string(TrimView(v->get<std::string>()));
  } else if (v && v->is_number()) {
    rec.id = v->dump();
  }
  if (rec.id.empty()) {
    check.Fail("", "missing or empty id");
    return std::nullopt;
  }
  if (const Json* v = field("text"); v && v->is_string()) rec.text = v->get<std::string>();
  if (TrimView(rec.text).empty()) check.Fail(rec.id, "missing or empty text");

  for (const auto& [key, value] : fields) {
    if (std::find(kManifestKeys.begin(), kManifestKeys.end(), key) == kManifestKeys.end()) {
      check.Warn(rec.id, "unknown field '" + key + "' ignored");
    }
  }

  if (const Json* v = field("duration_s")) {
    std::optional<double> d;
    if (v->is_number()) {
      d = v->get<double>();
    } else if (auto s = AsText(*v)) {
      try {
        std::size_t used = 0;
        const std::string t(TrimView(*s));
        d = std::stod(t, &used);
        if (used != t.size()) d.reset();
      } catch (const std::exception&) {
        d.reset();
      }
    }
    if (!d || !std::isfinite(*d) || *d <= 0.0) {
      check.Fail(rec.id, "duration_s must be a positive number");
    } else {
      rec.duration_s = d;
    }
  }

  if (const Json* v = field("num_speakers")) {
    std::optional<long long> n;
    if (v->is_number_integer()) {
      n = v->get<long long>();
    } else if (auto s = AsText(*v)) {
      try {
        std::size_t used = 0;
        const std::string t(TrimView(*s));
        n = std::stoll(t, &used);
        if (used != t.size()) n.reset();
      } catch (const std::exception&) {
        n.reset();
      }
    }
    if (!n || *n < 1 || *n > 1000000) {
      check.Fail(rec.id, "num_speakers must be an integer >= 1");
    } else {
      rec.num_speakers = static_cast<int>(*n);
    }
  }

  auto parse_enum = [&](std::string_view key, auto parser, auto& target) {
    const Json* v = field(key);
    if (!v) return;
    const auto s = AsText(*v);
    if (!s) return;
    if (auto parsed = parser(*s)) {
      target = *parsed;
    } else {
      check.Fail(rec.id, std::string(key) + " '" + *s + "' is not a declared value");
    }
  };
  parse_enum("gender", ParseGender, rec.gender);
  parse_enum("age", ParseAgeGroup, rec.age);
  parse_enum("formality", ParseFormality, rec.formality);
  parse_enum("acoustic_environment", ParseAcousticEnvironment, rec.acoustic_environment);

  if (const Json* v = field("accent")) {
    if (auto s = AsText(*v)) {
      if (auto canonical = CanonicalAccent(*s)) {
        rec.accent = std::string(*canonical);
      } else if (check.strict()) {
        check.Fail(rec.id, "accent '" + *s + "' is not one of the canonical accents");
      } else {
        rec.accent = std::string(TrimView(*s));
        check.Warn(rec.id, "accent '" + *s + "' is not one of the canonical accents");
      }
    }
  }

  if (const Json* v = field("semantic_content")) rec.semantic_content = AsText(*v);
  if (const Json* v = field("data_source")) rec.data_source = AsText(*v);

  if (const Json* v = field("spontaneous")) {
    if (v->is_boolean()) {
      rec.spontaneous = v->get<bool>();
    } else if (auto s = AsText(*v)) {
      const std::string_view t = TrimView(*s);
      if (EqualsIgnoreCase(t, "true") || t == "1" || EqualsIgnoreCase(t, "yes")) {
        rec.spontaneous = true;
      } else if (EqualsIgnoreCase(t, "false") || t == "0" || EqualsIgnoreCase(t, "no")) {
        rec.spontaneous = false;
      } else {
        check.Fail(rec.id, "spontaneous must be a boolean");
      }
    }
  }

  if (const Json* v = field("speaker_ids")) {
    if (v->is_array()) {
      for (const Json& item : *v) {
        if (auto s = AsText(item)) rec.speaker_ids.push_back(std::string(TrimView(*s)));
      }
    } else if (auto s = AsText(*v)) {
      std::string_view rest = *s;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = TrimView(rest.substr(0, comma));
        if (!item.empty()) rec.speaker_ids.emplace_back(item);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
    }
  }

  if (check.failed()) return std::nullopt;
  return rec;
}

}  // namespace

std::string_view ToString(Gender v) { return EnumName(v, kGenders); }
std::string_view ToString(AgeGroup v) { return EnumName(v, kAges); }
std::string_view ToString(Formality v) { return EnumName(v, kFormalities); }
std::string_view ToString(AcousticEnvironment v) { return EnumName(v, kEnvironments); }

std::optional<Gender> ParseGender(std::string_view s) { return LookupEnum(s, kGenders); }
std::optional<AgeGroup> ParseAgeGroup(std::string_view s) { return LookupEnum(s, kAges); }
std::optional<Formality> ParseFormality(std::string_view s) { return LookupEnum(s, kFormalities); }
std::optional<AcousticEnvironment> ParseAcousticEnvironment(std::string_view s) {
  return LookupEnum(s, kEnvironments);
}

std::span<const std::string_view> CanonicalAccents() { return kAccents; }

std::optional<std::string_view> CanonicalAccent(std::string_view s) {
  s = TrimView(s);
  for (std::string_view accent : kAccents) {
    if (EqualsIgnoreCase(accent, s)) return accent;
  }
  return std::nullopt;
}

std::span<const std::string_view> MetadataDimensions() { return kDimensions; }

bool IsMetadataDimension(std::string_view name) {
  return std::find(kDimensions.begin(), kDimensions.end(), name) != kDimensions.end();
}

std::optional<std::string> DimensionValue(const UtteranceRecord& r, std::string_view dimension) {
  auto str = [](auto v) { return std::optional<std::string>(std::string(ToString(v))); };
  if (dimension == "gender") return r.gender ? str(*r.gender) : std::nullopt;
  if (dimension == "age") return r.age ? str(*r.age) : std::nullopt;
  if (dimension == "formality") return r.formality ? str(*r.formality) : std::nullopt;
  if (dimension == "acoustic_environment") {
    return r.acoustic_environment ? str(*r.acoustic_environment) : std::nullopt;
  }
  if (dimension == "accent") return r.accent;
  if (dimension == "accent_class") {
    if (!r.accent) return std::nullopt;
    return std::string(EqualsIgnoreCase(*r.accent, "Standard") ? "standard" : "accented");
  }
  if (dimension == "semantic_content") return r.semantic_content;
  if (dimension == "data_source") return r.data_source;
  if (dimension == "spontaneous") {
    if (!r.spontaneous) return std::nullopt;
    return std::string(*r.spontaneous ? "spontaneous" : "read");
  }
  if (dimension == "num_speakers") {
    if (!r.num_speakers) return std::nullopt;
    return std::to_string(*r.num_speakers);
  }
  if (dimension == "speaker_class") {
    if (!r.num_speakers) return std::nullopt;
    return std::string(*r.num_speakers > 1 ? "multiple" : "single");
  }
  throw Error(ErrorKind::kUnknownDimension, "unknown dimension '" + std::string(dimension) + "'");
}

const UtteranceRecord* Manifest::Find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &records[it->second];
}

void Manifest::BuildIndex() {
  index_.clear();
  index_.reserve(records.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (!index_.emplace(records[k].id, k).second) {
      throw Error(ErrorKind::kDuplicateId, "duplicate utterance id '" + records[k].id + "'");
    }
  }
}

Manifest ParseManifest(std::string_view content, const ManifestOptions& options) {
  Manifest manifest;
  const std::vector<std::string_view> lines = SplitLines(content);

  std::size_t first = 0;
  while (first < lines.size() && TrimView(lines[first]).empty()) ++first;
  if (first == lines.size()) {
    manifest.BuildIndex();
    return manifest;
  }
  const bool jsonl = TrimView(lines[first]).starts_with('{');

  std::vector<std::string> header;
  std::size_t data_start = first;
  if (!jsonl) {
    std::string_view rest = lines[first];
    while (true) {
      const auto tab = rest.find('\t');
      header.emplace_back(TrimView(rest.substr(0, tab)));
      if (tab == std::string_view::npos) break;
      rest = rest.substr(tab + 1);
    }
    if (std::find(header.begin(), header.end(), "id") == header.end() ||
        std::find(header.begin(), header.end(), "text") == header.end()) {
      throw Error(ErrorKind::kSchema, "line " + std::to_string(first + 1) +
                                          ": table header must name at least id and text");
    }
    data_start = first + 1;
  }

  std::set<std::string> seen;
  for (std::size_t k = data_start; k < lines.size(); ++k) {
    const std::size_t line_no = k + 1;
    if (TrimView(lines[k]).empty()) continue;
    RowChecker check(line_no, options, manifest.issues);

    std::map<std::string, Json> fields;
    if (jsonl) {
      Json row;
      try {
        row = Json::parse(lines[k]);
      } catch (const Json::parse_error&) {
        if (options.mode == Strictness::kStrict) {
          throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": malformed JSON");
        }
        check.Fail("", "malformed JSON");
        continue;
      }
      if (!row.is_object()) {
        check.Fail("", "expected a JSON object");
        continue;
      }
      for (auto it = row.begin(); it != row.end(); ++it) fields.emplace(it.key(), it.value());
    } else {
      std::vector<std::string_view> cells;
      std::string_view rest = lines[k];
      while (true) {
        const auto tab = rest.find('\t');
        cells.push_back(rest.substr(0, tab));
        if (tab == std::string_view::npos) break;
        rest = rest.substr(tab + 1);
      }
      if (cells.size() != header.size()) {
        check.Fail("", "expected " + std::to_string(header.size()) + " columns, found " +
                           std::to_string(cells.size()));
        continue;
      }
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (!TrimView(cells[c]).empty()) fields.emplace(header[c], std::string(cells[c]));
      }
    }

    std::optional<UtteranceRecord> rec = BuildRecord(fields, check);
    if (!rec) continue;
    if (options.duration_range && rec->duration_s) {
      const auto [lo, hi] = *options.duration_range;
      if (*rec->duration_s < lo || *rec->duration_s > hi) {
        check.Fail(rec->id, "duration_s outside the allowed range");
        continue;
      }
    }
    if (!seen.insert(rec->id).second) {
      throw Error(ErrorKind::kDuplicateId,
                  "line " + std::to_string(line_no) + ": duplicate utterance id '" + rec->id + "'");
    }
    manifest.records.push_back(std::move(*rec));
  }
  manifest.BuildIndex();
  return manifest;
}

Manifest LoadManifest(const std::filesystem::path& path, const ManifestOptions& options) {
  return ParseManifest(ReadFile(path, "manifest"), options);
}

void WriteManifestJsonl(std::span<const UtteranceRecord> records, std::ostream& out) {
  for (const UtteranceRecord& r : records) {
    OrderedJson row;
    row["id"] = r.id;
    row["text"] = r.text;
    if (r.duration_s) row["duration_s"] = *r.duration_s;
    if (r.num_speakers) row["num_speakers"] = *r.num_speakers;
    if (r.gender) row["gender"] = ToString(*r.gender);
    if (r.age) row["age"] = ToString(*r.age);
    if (r.accent) row["accent"] = *r.accent;
    if (r.formality) row["formality"] = ToString(*r.formality);
    if (r.semantic_content) row["semantic_content"] = *r.semantic_content;
    if (r.data_source) row["data_source"] = *r.data_source;
    if (r.acoustic_environment) row["acoustic_environment"] = ToString(*r.acoustic_environment);
    if (r.spontaneous) row["spontaneous"] = *r.spontaneous;
    if (!r.speaker_ids.empty()) row["speaker_ids"] = r.speaker_ids;
    out << row.dump() << '\n';
  }
}

HypothesisSet ParseHypotheses(std::string_view content, std::string system_name) {
  HypothesisSet set;
  set.system_name = std::move(system_name);
  const std::vector<std::string_view> lines = SplitLines(content);
  bool jsonl = false;
  for (std::string_view line : lines) {
    if (!TrimView(line).empty()) {
      jsonl = TrimView(line).starts_with('{');
      break;
    }
  }
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::string where = set.system_name + " line " + std::to_string(k + 1);
    if (TrimView(lines[k]).empty()) continue;
    std::string id;
    std::string text;
    if (jsonl) {
      Json row;
      try {
        row = Json::parse(lines[k]);
      } catch (const Json::parse_error&) {
        throw Error(ErrorKind::kParse, where + ": malformed JSON");
      }
      if (!row.is_object() || !row.contains("id") || !row["id"].is_string()) {
        throw Error(ErrorKind::kParse, where + ": expected an object with a string \"id\"");
      }
      id = row["id"].get<std::string>();
      if (row.contains("text") && row["text"].is_string()) {
        text = row["text"].get<std::string>();
      } else if (row.contains("text") && !row["text"].is_null()) {
        throw Error(ErrorKind::kParse, where + ": \"text\" must be a string");
      }
    } else {
      const auto tab = lines[k].find('\t');
      if (tab == std::string_view::npos) {
        throw Error(ErrorKind::kParse, where + ": expected id<TAB>text");
      }
      id = std::string(TrimView(lines[k].substr(0, tab)));
      text = std::string(lines[k].substr(tab + 1));
    }
    if (id.empty()) throw Error(ErrorKind::kParse, where + ": empty id");
    if (!set.by_id.emplace(id, std::move(text)).second) {
      throw Error(ErrorKind::kDuplicateId, where + ": duplicate id '" + id + "'");
    }
  }
  return set;
}

HypothesisSet LoadHypotheses(const std::filesystem::path& path, std::string system_name) {
  return ParseHypotheses(ReadFile(path, "hypothesis file"), std::move(system_name));
}

std::vector<ManifestIssue> CheckHypotheses(const Manifest& manifest, HypothesisSet& hyps,
                                           Strictness mode) {
  std::vector<ManifestIssue> issues;
  for (auto it = hyps.by_id.begin(); it != hyps.by_id.end();) {
    if (manifest.Find(it->first) != nullptr) {
      ++it;
      continue;
    }
    if (mode == Strictness::kStrict) {
      throw Error(ErrorKind::kMissingId, "system '" + hyps.system_name + "': hypothesis id '" +
                                             it->first + "' is not in the manifest");
    }
    issues.push_back({0, ManifestIssue::Severity::kWarning, it->first,
                      "hypothesis id not in manifest; ignored"});
    it = hyps.by_id.erase(it);
  }
  for (const UtteranceRecord& rec : manifest.records) {
    if (hyps.by_id.count(rec.id) != 0) continue;
    if (mode == Strictness::kStrict) {
      throw Error(ErrorKind::kMissingId, "system '" + hyps.system_name + "': no hypothesis for id '" +
                                             rec.id + "'");
    }
    issues.push_back({0, ManifestIssue::Severity::kWarning, rec.id,
                      "no hypothesis; scored as empty output"});
    hyps.by_id.emplace(rec.id, std::string());
  }
  return issues;
}

DatasetStats ComputeDatasetStatistics(std::span<const UtteranceRecord> records,
                                      const NormalizationConfig& norm) {
  if (records.empty()) throw Error(ErrorKind::kEmptyCorpus, "manifest has no records");

  // Walk records in id order so floating-point sums do not depend on input
  // order.
  std::vector<const UtteranceRecord*> ordered;
  ordered.reserve(records.size());
  for (const auto& r : records) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](const UtteranceRecord* a, const UtteranceRecord* b) { return a->id < b->id; });

  DatasetStats stats;
  stats.utterance_count = records.size();
  std::set<std::string> vocabulary;
  std::set<std::string> speakers;
  bool any_speakers = false;
  std::map<std::string, std::map<std::string, std::size_t>> category_counts;
  std::map<std::string, std::size_t> carrying;

  for (const UtteranceRecord* r : ordered) {
    if (r->duration_s) {
      const double d = *r->duration_s;
      if (stats.with_duration == 0) {
        stats.min_dur_s = stats.max_dur_s = d;
      } else {
        stats.min_dur_s = std::min(stats.min_dur_s, d);
        stats.max_dur_s = std::max(stats.max_dur_s, d);
      }
      stats.total_duration_s += d;
      ++stats.with_duration;
    }
    const std::vector<std::string> words = TokenizeWords(NormalizeText(r->text, norm));
    stats.word_count += words.size();
    vocabulary.insert(words.begin(), words.end());
    if (!r->speaker_ids.empty()) {
      any_speakers = true;
      speakers.insert(r->speaker_ids.begin(), r->speaker_ids.end());
    }
    for (std::string_view dim : kDimensions) {
      if (auto value = DimensionValue(*r, dim)) {
        ++category_counts[std::string(dim)][*value];
        ++carrying[std::string(dim)];
      }
    }
  }
  stats.without_duration = stats.utterance_count - stats.with_duration;
  stats.total_duration_h = stats.total_duration_s / 3600.0;
  stats.unique_word_count = vocabulary.size();
  if (any_speakers) stats.speaker_count = speakers.size();

  if (stats.with_duration > 0) {
    stats.avg_dur_s = stats.total_duration_s / static_cast<double>(stats.with_duration);
    const std::size_t bins = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(stats.max_dur_s / kHistogramBinSeconds)));
    stats.histogram.resize(bins);
    for (std::size_t b = 0; b < bins; ++b) {
      stats.histogram[b].lower_s = kHistogramBinSeconds * static_cast<double>(b);
      stats.histogram[b].upper_s = kHistogramBinSeconds * static_cast<double>(b + 1);
    }
    for (const UtteranceRecord* r : ordered) {
      if (!r->duration_s) continue;
      const auto b = std::min(bins - 1, static_cast<std::size_t>(*r->duration_s / kHistogramBinSeconds));
      ++stats.histogram[b].count;
    }
  }

  for (const auto& [dim, counts] : category_counts) {
    const double total = static_cast<double>(carrying[dim]);
    for (const auto& [category, count] : counts) {
      stats.category_proportions[dim][category] = {count, static_cast<double>(count) / total};
    }
  }
  return stats;
}

}  // namespace swwer
