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

#include "swwer/report.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace swwer::report {
namespace {

using Json = nlohmann::ordered_json;

Json MetaJson(const OutputMeta& meta) {
  Json j;
  j["toolkit"] = "swwer";
  j["version"] = ToolkitVersion();
  j["command"] = meta.command;
  j["normalization"] = meta.normalization;
  j["aggregation"] = meta.aggregation;
  return j;
}

std::string CsvHeader(const OutputMeta& meta) {
  std::string out = "# swwer " + std::string(ToolkitVersion()) + "\n";
  out += "# command: " + meta.command + "\n";
  out += "# normalization: " + meta.normalization + "\n";
  out += "# aggregation: " + meta.aggregation + "\n";
  return out;
}

std::string MarkdownHeader(const OutputMeta& meta) {
  return "<!-- swwer " + std::string(ToolkitVersion()) + " | command: " + meta.command +
         " | normalization: " + meta.normalization + " | aggregation: " + meta.aggregation +
         " -->\n\n";
}

std::string Bold(const std::string& text, bool bold) { return bold ? "**" + text + "**" : text; }

Json CellJson(const GroupCell& cell) {
  Json j;
  j["count"] = cell.count;
  j["cer"] = cell.cer;
  j["wer"] = cell.wer;
  j["sw_wer"] = cell.sw_wer;
  return j;
}

std::string CellRow(const std::optional<GroupCell>& cell) {
  if (!cell) return " - | - | - |";
  return " " + FormatPercent(cell->cer) + " | " + FormatPercent(cell->wer) + " | " +
         FormatPercent(cell->sw_wer) + " |";
}

}  // namespace

std::string_view ToolkitVersion() { return SWWER_VERSION; }

std::string FormatPercent(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string ScoreJsonLine(const UtteranceScore& s) {
  Json j;
  j["id"] = s.utterance_id;
  j["system"] = s.system_name;
  j["wer"] = s.wer;
  j["cer"] = s.cer;
  j["sw_wer"] = s.sw_wer;
  j["C"] = s.counts.hits;
  j["S_count"] = s.counts.substitutions;
  j["S_weighted"] = s.s_weighted;
  j["I"] = s.counts.insertions;
  j["D"] = s.counts.deletions;
  j["N_sub"] = s.n_sub;
  j["seg_count"] = s.seg_count;
  return j.dump();
}

std::string ScoresJsonl(std::span<const UtteranceScore> scores, const OutputMeta& meta) {
  Json head;
  head["meta"] = MetaJson(meta);
  std::string out = head.dump() + "\n";
  for (const auto& s : scores) out += ScoreJsonLine(s) + "\n";
  return out;
}

std::string SegmentsJsonl(std::span<const UtteranceScore> scores, const OutputMeta& meta) {
  Json head;
  head["meta"] = MetaJson(meta);
  std::string out = head.dump() + "\n";
  for (const auto& s : scores) {
    for (const auto& seg : s.segments) {
      Json j;
      j["id"] = s.utterance_id;
      j["system"] = s.system_name;
      j["ref_range"] = {seg.ref_begin, seg.ref_end};
      j["hyp_range"] = {seg.hyp_begin, seg.hyp_end};
      j["n_words"] = seg.n_words;
      j["ref_str"] = seg.ref_str;
      j["hyp_str"] = seg.hyp_str;
      j["segment_cer"] = seg.segment_cer;
      out += j.dump() + "\n";
    }
  }
  return out;
}

std::string SummaryJson(std::span<const CorpusSummary> summaries, const Comparison& comparison,
                        std::span<const SystemCorrelation> correlations, const OutputMeta& meta) {
  Json j;
  j["meta"] = MetaJson(meta);
  Json systems = Json::array();
  for (std::size_t k = 0; k < summaries.size(); ++k) {
    const CorpusSummary& s = summaries[k];
    Json e;
    e["system"] = s.system_name;
    e["utterances"] = s.utterance_count;
    e["aggregation"] = ToString(s.mode);
    e["cer"] = s.Cer();
    e["wer"] = s.Wer();
    e["sw_wer"] = s.SwWer();
    e["macro"] = {{"cer", s.macro_cer}, {"wer", s.macro_wer}, {"sw_wer", s.macro_sw_wer}};
    e["micro"] = {{"cer", s.micro_cer}, {"wer", s.micro_wer}, {"sw_wer", s.micro_sw_wer}};
    if (k < comparison.rows.size()) {
      const ComparisonRow& row = comparison.rows[k];
      e["rank"] = row.rank;
      e["best"] = {{"cer", row.best_cer}, {"wer", row.best_wer}, {"sw_wer", row.best_sw_wer}};
    }
    for (const auto& c : correlations) {
      if (c.system_name != s.system_name) continue;
      if (c.report) {
        e["correlation"] = {{"wer_sw_wer", c.report->wer_sw_wer},
                            {"cer_sw_wer", c.report->cer_sw_wer},
                            {"wer_cer", c.report->wer_cer}};
      } else {
        e["correlation"] = nullptr;
        e["correlation_note"] = c.note;
      }
    }
    systems.push_back(std::move(e));
  }
  j["systems"] = std::move(systems);
  return j.dump(2) + "\n";
}

std::string ComparisonCsv(const Comparison& comparison, const OutputMeta& meta) {
  std::string out = CsvHeader(meta);
  out += "Model,CER,WER,SW-WER,rank,best_cer,best_wer,best_sw_wer\n";
  for (const auto& row : comparison.rows) {
    out += CsvField(row.metrics.name) + "," + FormatPercent(row.metrics.cer) + "," +
           FormatPercent(row.metrics.wer) + "," + FormatPercent(row.metrics.sw_wer) + "," +
           std::to_string(row.rank) + "," + (row.best_cer ? "1" : "0") + "," +
           (row.best_wer ? "1" : "0") + "," + (row.best_sw_wer ? "1" : "0") + "\n";
  }
  return out;
}

std::string ComparisonMarkdown(const Comparison& comparison, const OutputMeta& meta) {
  std::string out = MarkdownHeader(meta);
  out += "| Model | CER | WER | SW-WER |\n|---|---:|---:|---:|\n";
  for (const auto& row : comparison.rows) {
    out += "| " + row.metrics.name + " | " + Bold(FormatPercent(row.metrics.cer), row.best_cer) +
           " | " + Bold(FormatPercent(row.metrics.wer), row.best_wer) + " | " +
           Bold(FormatPercent(row.metrics.sw_wer), row.best_sw_wer) + " |\n";
  }
  return out;
}

std::string ComparisonJson(const Comparison& comparison, const OutputMeta& meta) {
  Json j;
  j["meta"] = MetaJson(meta);
  Json rows = Json::array();
  for (const auto& row : comparison.rows) {
    Json e;
    e["system"] = row.metrics.name;
    e["cer"] = row.metrics.cer;
    e["wer"] = row.metrics.wer;
    e["sw_wer"] = row.metrics.sw_wer;
    e["rank"] = row.rank;
    e["best"] = {{"cer", row.best_cer}, {"wer", row.best_wer}, {"sw_wer", row.best_sw_wer}};
    rows.push_back(std::move(e));
  }
  j["systems"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string ScatterCsv(std::span<const SystemCorrelation> correlations, const OutputMeta& meta) {
  std::string out = CsvHeader(meta);
  out += "system,id,wer,cer,sw_wer\n";
  char buf[128];
  for (const auto& c : correlations) {
    if (!c.report) continue;
    for (const auto& row : c.report->rows) {
      std::snprintf(buf, sizeof(buf), ",%.17g,%.17g,%.17g\n", row.wer, row.cer, row.sw_wer);
      out += CsvField(c.system_name) + "," + CsvField(row.utterance_id) + buf;
    }
  }
  return out;
}

std::string BreakdownCsv(const BreakdownTable& table, const OutputMeta& meta) {
  std::string out = CsvHeader(meta);
  out += "system";
  for (const auto& dim : table.dimensions) out += "," + CsvField(dim);
  out += ",count,CER,WER,SW-WER,best_cer,best_wer,best_sw_wer\n";
  for (const auto& row : table.rows) {
    out += CsvField(row.system_name);
    for (const auto& part : row.key.parts) out += "," + CsvField(part.second);
    out += "," + std::to_string(row.cell.count) + "," + FormatPercent(row.cell.cer) + "," +
           FormatPercent(row.cell.wer) + "," + FormatPercent(row.cell.sw_wer) + "," +
           (row.best_cer ? "1" : "0") + "," + (row.best_wer ? "1" : "0") + "," +
           (row.best_sw_wer ? "1" : "0") + "\n";
  }
  return out;
}

std::string BreakdownMarkdown(const BreakdownTable& table, const OutputMeta& meta) {
  std::string out = MarkdownHeader(meta);
  out += "| Model |";
  for (const auto& dim : table.dimensions) out += " " + dim + " |";
  out += " N | CER | WER | SW-WER |\n|---|";
  for (std::size_t k = 0; k < table.dimensions.size(); ++k) out += "---|";
  out += "---:|---:|---:|---:|\n";
  for (const auto& row : table.rows) {
    out += "| " + row.system_name + " |";
    for (const auto& part : row.key.parts) out += " " + part.second + " |";
    out += " " + std::to_string(row.cell.count) + " | " +
           Bold(FormatPercent(row.cell.cer), row.best_cer) + " | " +
           Bold(FormatPercent(row.cell.wer), row.best_wer) + " | " +
           Bold(FormatPercent(row.cell.sw_wer), row.best_sw_wer) + " |\n";
  }

  if (table.dimensions.size() == 2) {
    const std::vector<CrossTab> tabs = CrossTabulate(table);
    if (tabs.empty()) return out;
    const CrossTab& shape = tabs.front();
    // One block per column category plus an average block; inside each
    // block, one CER/WER/SW-WER triple per row category plus the margin.
    auto block = [&](const std::string& title,
                     const std::function<std::optional<GroupCell>(const CrossTab&, std::size_t)>& cell,
                     const std::function<std::optional<GroupCell>(const CrossTab&)>& margin) {
      out += "\n### " + shape.column_dimension + ": " + title + "\n\n| Model |";
      std::string rule = "|---|";
      for (const auto& label : shape.row_labels) {
        out += " " + label + " CER | " + label + " WER | " + label + " SW-WER |";
        rule += "---:|---:|---:|";
      }
      out += " Avg CER | Avg WER | Avg SW-WER |\n" + rule + "---:|---:|---:|\n";
      for (const auto& tab : tabs) {
        out += "| " + tab.system_name + " |";
        for (std::size_t r = 0; r < tab.row_labels.size(); ++r) out += CellRow(cell(tab, r));
        out += CellRow(margin(tab)) + "\n";
      }
    };
    for (std::size_t c = 0; c < shape.column_labels.size(); ++c) {
      block(
          shape.column_labels[c],
          [c](const CrossTab& t, std::size_t r) { return t.cells[r][c]; },
          [c](const CrossTab& t) { return t.column_margins[c]; });
    }
    block(
        "Average", [](const CrossTab& t, std::size_t r) { return t.row_margins[r]; },
        [](const CrossTab& t) { return std::optional<GroupCell>(t.grand); });
  }
  return out;
}

std::string BreakdownJson(const BreakdownTable& table, const OutputMeta& meta) {
  Json j;
  j["meta"] = MetaJson(meta);
  j["dimensions"] = table.dimensions;
  j["systems"] = table.systems;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json e;
    e["system"] = row.system_name;
    Json key;
    for (const auto& [dim, value] : row.key.parts) key[dim] = value;
    e["key"] = std::move(key);
    e["count"] = row.cell.count;
    e["cer"] = row.cell.cer;
    e["wer"] = row.cell.wer;
    e["sw_wer"] = row.cell.sw_wer;
    e["best"] = {{"cer", row.best_cer}, {"wer", row.best_wer}, {"sw_wer", row.best_sw_wer}};
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  if (table.dimensions.size() == 2) {
    Json tabs = Json::array();
    for (const CrossTab& tab : CrossTabulate(table)) {
      Json t;
      t["system"] = tab.system_name;
      t["row_dimension"] = tab.row_dimension;
      t["column_dimension"] = tab.column_dimension;
      t["row_labels"] = tab.row_labels;
      t["column_labels"] = tab.column_labels;
      Json cells = Json::array();
      for (const auto& line : tab.cells) {
        Json jl = Json::array();
        for (const auto& cell : line) jl.push_back(cell ? CellJson(*cell) : Json(nullptr));
        cells.push_back(std::move(jl));
      }
      t["cells"] = std::move(cells);
      Json rm = Json::array();
      for (const auto& m : tab.row_margins) rm.push_back(m ? CellJson(*m) : Json(nullptr));
      Json cm = Json::array();
      for (const auto& m : tab.column_margins) cm.push_back(m ? CellJson(*m) : Json(nullptr));
      t["row_margins"] = std::move(rm);
      t["column_margins"] = std::move(cm);
      t["grand"] = CellJson(tab.grand);
      tabs.push_back(std::move(t));
    }
    j["crosstabs"] = std::move(tabs);
  }
  return j.dump(2) + "\n";
}

std::string DistributionCsv(const BreakdownTable& table, std::span<const BoxStats> boxes,
                            const OutputMeta& meta) {
  std::string out = CsvHeader(meta);
  out += "system";
  for (const auto& dim : table.dimensions) out += "," + CsvField(dim);
  out += ",count,min,q1,median,q3,max,lower_whisker,upper_whisker,outliers\n";
  char buf[256];
  for (const auto& box : boxes) {
    out += CsvField(box.system_name);
    for (const auto& part : box.key.parts) out += "," + CsvField(part.second);
    std::snprintf(buf, sizeof(buf), ",%zu,%.4f,%.4f,%.4f,%.4f,%.4f,%.4f,%.4f,", box.count, box.min,
                  box.q1, box.median, box.q3, box.max, box.lower_whisker, box.upper_whisker);
    out += buf;
    std::string outliers;
    for (std::size_t k = 0; k < box.outliers.size(); ++k) {
      if (k) outliers += ';';
      std::snprintf(buf, sizeof(buf), ":%.4f", box.outliers[k].second);
      outliers += box.outliers[k].first + buf;
    }
    out += CsvField(outliers) + "\n";
  }
  return out;
}

std::string StatsJson(const DatasetStats& stats, const OutputMeta& meta) {
  Json j;
  j["meta"] = MetaJson(meta);
  j["utterance_count"] = stats.utterance_count;
  j["with_duration"] = stats.with_duration;
  j["without_duration"] = stats.without_duration;
  j["total_duration_h"] = stats.total_duration_h;
  j["total_duration_s"] = stats.total_duration_s;
  j["min_dur_s"] = stats.min_dur_s;
  j["max_dur_s"] = stats.max_dur_s;
  j["avg_dur_s"] = stats.avg_dur_s;
  j["word_count"] = stats.word_count;
  j["unique_word_count"] = stats.unique_word_count;
  j["speaker_count"] = stats.speaker_count ? Json(*stats.speaker_count) : Json(nullptr);
  Json hist = Json::array();
  for (const auto& bin : stats.histogram) {
    hist.push_back({{"lower_s", bin.lower_s}, {"upper_s", bin.upper_s}, {"count", bin.count}});
  }
  j["histogram"] = std::move(hist);
  Json cats;
  for (const auto& [dim, shares] : stats.category_proportions) {
    Json d;
    for (const auto& [category, share] : shares) {
      d[category] = {{"count", share.count}, {"proportion", share.proportion}};
    }
    cats[dim] = std::move(d);
  }
  j["category_proportions"] = std::move(cats);
  return j.dump(2) + "\n";
}

std::string StatsCsv(const DatasetStats& stats, const OutputMeta& meta) {
  std::string out = CsvHeader(meta);
  out += "dimension,category,count,proportion\n";
  char buf[64];
  for (const auto& [dim, shares] : stats.category_proportions) {
    for (const auto& [category, share] : shares) {
      std::snprintf(buf, sizeof(buf), ",%zu,%.6f\n", share.count, share.proportion);
      out += CsvField(dim) + "," + CsvField(category) + buf;
    }
  }
  return out;
}

std::string StatsMarkdown(const DatasetStats& stats, const OutputMeta& meta) {
  std::string out = MarkdownHeader(meta);
  char buf[256];
  out += "| Duration (h) | Utterances | Min/Max Dur. (s) | Avg. Dur. (s) | Words | Unique words | Speakers |\n";
  out += "|---:|---:|---:|---:|---:|---:|---:|\n";
  std::snprintf(buf, sizeof(buf), "| %.2f | %zu | %.1f / %.1f | %.2f | %zu | %zu | %s |\n",
                stats.total_duration_h, stats.utterance_count, stats.min_dur_s, stats.max_dur_s,
                stats.avg_dur_s, stats.word_count, stats.unique_word_count,
                stats.speaker_count ? std::to_string(*stats.speaker_count).c_str() : "-");
  out += buf;
  if (stats.without_duration > 0) {
    out += "\n" + std::to_string(stats.without_duration) +
           " record(s) without duration are excluded from duration figures.\n";
  }
  for (const auto& [dim, shares] : stats.category_proportions) {
    out += "\n### " + dim + "\n\n| Category | Count | Share |\n|---|---:|---:|\n";
    for (const auto& [category, share] : shares) {
      out += "| " + category + " | " + std::to_string(share.count) + " | " +
             FormatPercent(100.0 * share.proportion) + "% |\n";
    }
  }
  return out;
}

std::string HistogramCsv(const DatasetStats& stats, const OutputMeta& meta) {
  std::string out = CsvHeader(meta);
  out += "lower_s,upper_s,count\n";
  char buf[96];
  for (const auto& bin : stats.histogram) {
    std::snprintf(buf, sizeof(buf), "%.1f,%.1f,%zu\n", bin.lower_s, bin.upper_s, bin.count);
    out += buf;
  }
  return out;
}

std::string ProfileJson(std::span<const ErrorProfile> profiles, const TaxonomyOptions& options,
                        bool lexicon_loaded, const OutputMeta& meta) {
  Json j;
  j["meta"] = MetaJson(meta);
  j["options"] = {{"near_match_theta", options.near_match_theta},
                  {"halluc_ins_tau", options.halluc_ins_tau},
                  {"halluc_len_rho", options.halluc_len_rho},
                  {"lexicon", lexicon_loaded}};
  Json systems = Json::array();
  for (const auto& p : profiles) {
    Json e;
    e["system"] = p.system_name;
    e["segment_count"] = p.segment_count;
    Json counts;
    Json proportions;
    for (std::size_t c = 0; c < kSegmentCategoryCount; ++c) {
      const auto name = std::string(ToString(static_cast<ErrorCategory>(c)));
      counts[name] = p.counts[c];
      proportions[name] = p.proportions[c];
    }
    e["counts"] = std::move(counts);
    e["proportions"] = std::move(proportions);
    e["hallucination_flagged"] = p.flagged_utterance_ids;
    Json segs = Json::array();
    for (const auto& s : p.segments) {
      segs.push_back({{"id", s.utterance_id},
                      {"segment", s.segment_index},
                      {"category", ToString(s.label.category)},
                      {"evidence", s.label.evidence}});
    }
    e["segments"] = std::move(segs);
    systems.push_back(std::move(e));
  }
  j["systems"] = std::move(systems);
  return j.dump(2) + "\n";
}

std::string ProfileCsv(std::span<const ErrorProfile> profiles, const OutputMeta& meta) {
  std::string out = CsvHeader(meta);
  out += "system,category,count,proportion\n";
  char buf[64];
  for (const auto& p : profiles) {
    for (std::size_t c = 0; c < kSegmentCategoryCount; ++c) {
      std::snprintf(buf, sizeof(buf), ",%zu,%.6f\n", p.counts[c], p.proportions[c]);
      out += CsvField(p.system_name) + "," + std::string(ToString(static_cast<ErrorCategory>(c))) + buf;
    }
    out += CsvField(p.system_name) + ",hallucination_flag," +
           std::to_string(p.flagged_utterance_ids.size()) + ",\n";
  }
  return out;
}

std::string ProfileMarkdown(std::span<const ErrorProfile> profiles, const OutputMeta& meta) {
  std::string out = MarkdownHeader(meta);
  out += "| Model | Segments |";
  std::string rule = "|---|---:|";
  for (std::size_t c = 0; c < kSegmentCategoryCount; ++c) {
    out += " " + std::string(ToString(static_cast<ErrorCategory>(c))) + " |";
    rule += "---:|";
  }
  out += " Hallucination flags |\n" + rule + "---:|\n";
  for (const auto& p : profiles) {
    out += "| " + p.system_name + " | " + std::to_string(p.segment_count) + " |";
    for (std::size_t c = 0; c < kSegmentCategoryCount; ++c) {
      out += " " + std::to_string(p.counts[c]) + " (" + FormatPercent(100.0 * p.proportions[c]) +
             "%) |";
    }
    out += " " + std::to_string(p.flagged_utterance_ids.size()) + " |\n";
  }
  for (const auto& p : profiles) {
    if (p.flagged_utterance_ids.empty()) continue;
    out += "\nFlagged for possible hallucination (" + p.system_name + "): ";
    for (std::size_t k = 0; k < p.flagged_utterance_ids.size(); ++k) {
      if (k) out += ", ";
      out += p.flagged_utterance_ids[k];
    }
    out += "\n";
  }
  return out;
}

}  // namespace swwer::report
