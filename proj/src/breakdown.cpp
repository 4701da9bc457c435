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

#include "swwer/breakdown.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <unordered_map>

#include "swwer/error.hpp"

namespace swwer {
namespace {

double MetricValue(const UtteranceScore& s, MetricKind metric) {
  switch (metric) {
    case MetricKind::kCer: return s.cer;
    case MetricKind::kWer: return s.wer;
    case MetricKind::kSwWer: return s.sw_wer;
  }
  return 0.0;
}

std::unordered_map<std::string_view, const UtteranceRecord*> IndexRecords(
    std::span<const UtteranceRecord> records) {
  std::unordered_map<std::string_view, const UtteranceRecord*> index;
  index.reserve(records.size());
  for (const auto& r : records) index.emplace(r.id, &r);
  return index;
}

void CheckDimensions(std::span<const std::string> dimensions) {
  for (const auto& dim : dimensions) {
    if (!IsMetadataDimension(dim)) {
      throw Error(ErrorKind::kUnknownDimension, "unknown dimension '" + dim + "'");
    }
  }
}

GroupKey KeyFor(const UtteranceRecord& record, std::span<const std::string> dimensions) {
  GroupKey key;
  for (const auto& dim : dimensions) {
    key.parts.emplace_back(dim, DimensionValue(record, dim).value_or(std::string(kMissingCategory)));
  }
  return key;
}

// Scores grouped by (system index, key), each group sorted by utterance id.
using Groups = std::map<std::pair<std::size_t, GroupKey>, std::vector<const UtteranceScore*>>;

Groups Partition(std::span<const UtteranceScore> scores, std::span<const UtteranceRecord> records,
                 std::span<const std::string> dimensions, std::vector<std::string>& systems) {
  CheckDimensions(dimensions);
  const auto index = IndexRecords(records);
  Groups groups;
  for (const UtteranceScore& s : scores) {
    const auto rec = index.find(s.utterance_id);
    if (rec == index.end()) {
      throw Error(ErrorKind::kUnresolvedId,
                  "score id '" + s.utterance_id + "' has no manifest record");
    }
    auto sys = std::find(systems.begin(), systems.end(), s.system_name);
    if (sys == systems.end()) sys = systems.insert(systems.end(), s.system_name);
    const auto sys_index = static_cast<std::size_t>(sys - systems.begin());
    groups[{sys_index, KeyFor(*rec->second, dimensions)}].push_back(&s);
  }
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), [](const UtteranceScore* a, const UtteranceScore* b) {
      return std::tie(a->utterance_id, a->wer, a->cer, a->sw_wer) <
             std::tie(b->utterance_id, b->wer, b->cer, b->sw_wer);
    });
  }
  return groups;
}

double Quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

}  // namespace

std::string GroupKey::Label() const {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += parts[k].first + "=" + parts[k].second;
  }
  return out;
}

const BreakdownRow* BreakdownTable::Find(std::string_view system, const GroupKey& key) const {
  for (const auto& row : rows) {
    if (row.system_name == system && row.key == key) return &row;
  }
  return nullptr;
}

BreakdownTable GroupScores(std::span<const UtteranceScore> scores,
                           std::span<const UtteranceRecord> records,
                           std::span<const std::string> dimensions) {
  BreakdownTable table;
  table.dimensions.assign(dimensions.begin(), dimensions.end());
  const Groups groups = Partition(scores, records, dimensions, table.systems);

  for (const auto& [id, members] : groups) {
    GroupCell cell;
    cell.count = members.size();
    for (const UtteranceScore* s : members) {
      cell.cer += s->cer;
      cell.wer += s->wer;
      cell.sw_wer += s->sw_wer;
    }
    const double n = static_cast<double>(cell.count);
    cell.cer = 100.0 * cell.cer / n;
    cell.wer = 100.0 * cell.wer / n;
    cell.sw_wer = 100.0 * cell.sw_wer / n;
    table.rows.push_back({table.systems[id.first], id.second, cell});
  }

  std::map<GroupKey, GroupCell> best;
  for (const auto& row : table.rows) {
    auto [it, fresh] = best.try_emplace(row.key, row.cell);
    if (!fresh) {
      it->second.cer = std::min(it->second.cer, row.cell.cer);
      it->second.wer = std::min(it->second.wer, row.cell.wer);
      it->second.sw_wer = std::min(it->second.sw_wer, row.cell.sw_wer);
    }
  }
  for (auto& row : table.rows) {
    const GroupCell& b = best.at(row.key);
    row.best_cer = row.cell.cer == b.cer;
    row.best_wer = row.cell.wer == b.wer;
    row.best_sw_wer = row.cell.sw_wer == b.sw_wer;
  }
  return table;
}

GroupCell WeightedMerge(std::span<const GroupCell> cells) {
  GroupCell merged;
  for (const GroupCell& c : cells) {
    const double w = static_cast<double>(c.count);
    merged.cer += w * c.cer;
    merged.wer += w * c.wer;
    merged.sw_wer += w * c.sw_wer;
    merged.count += c.count;
  }
  if (merged.count > 0) {
    const double n = static_cast<double>(merged.count);
    merged.cer /= n;
    merged.wer /= n;
    merged.sw_wer /= n;
  }
  return merged;
}

std::vector<CrossTab> CrossTabulate(const BreakdownTable& table) {
  if (table.dimensions.size() != 2) {
    throw Error(ErrorKind::kDimensionality,
                "cross tabulation needs exactly two dimensions, got " +
                    std::to_string(table.dimensions.size()));
  }
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  for (const auto& row : table.rows) {
    row_labels.push_back(row.key.parts[0].second);
    column_labels.push_back(row.key.parts[1].second);
  }
  auto unique_sorted = [](std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  unique_sorted(row_labels);
  unique_sorted(column_labels);

  std::vector<CrossTab> tabs;
  for (const auto& system : table.systems) {
    CrossTab tab;
    tab.system_name = system;
    tab.row_dimension = table.dimensions[0];
    tab.column_dimension = table.dimensions[1];
    tab.row_labels = row_labels;
    tab.column_labels = column_labels;
    tab.cells.assign(row_labels.size(), std::vector<std::optional<GroupCell>>(column_labels.size()));
    for (const auto& row : table.rows) {
      if (row.system_name != system) continue;
      const auto r = std::lower_bound(row_labels.begin(), row_labels.end(), row.key.parts[0].second) -
                     row_labels.begin();
      const auto c = std::lower_bound(column_labels.begin(), column_labels.end(),
                                      row.key.parts[1].second) -
                     column_labels.begin();
      tab.cells[r][c] = row.cell;
    }

    std::vector<GroupCell> all;
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
      std::vector<GroupCell> line;
      for (const auto& cell : tab.cells[r]) {
        if (cell) line.push_back(*cell);
      }
      all.insert(all.end(), line.begin(), line.end());
      tab.row_margins.push_back(line.empty() ? std::nullopt : std::optional(WeightedMerge(line)));
    }
    for (std::size_t c = 0; c < column_labels.size(); ++c) {
      std::vector<GroupCell> line;
      for (std::size_t r = 0; r < row_labels.size(); ++r) {
        if (tab.cells[r][c]) line.push_back(*tab.cells[r][c]);
      }
      tab.column_margins.push_back(line.empty() ? std::nullopt : std::optional(WeightedMerge(line)));
    }
    tab.grand = WeightedMerge(all);
    tabs.push_back(std::move(tab));
  }
  return tabs;
}

Comparison CompareSystems(std::span<const SystemMetrics> systems) {
  if (systems.empty()) throw Error(ErrorKind::kEmptyInput, "no systems to compare");
  double best_cer = systems.front().cer;
  double best_wer = systems.front().wer;
  double best_sw = systems.front().sw_wer;
  for (const auto& s : systems) {
    best_cer = std::min(best_cer, s.cer);
    best_wer = std::min(best_wer, s.wer);
    best_sw = std::min(best_sw, s.sw_wer);
  }
  Comparison comparison;
  for (const auto& s : systems) {
    ComparisonRow row;
    row.metrics = s;
    row.best_cer = s.cer == best_cer;
    row.best_wer = s.wer == best_wer;
    row.best_sw_wer = s.sw_wer == best_sw;
    row.rank = 1;
    for (const auto& other : systems) row.rank += other.sw_wer < s.sw_wer;
    comparison.rows.push_back(std::move(row));
  }
  return comparison;
}

std::vector<SystemMetrics> ToSystemMetrics(std::span<const CorpusSummary> summaries) {
  std::vector<SystemMetrics> out;
  out.reserve(summaries.size());
  for (const auto& s : summaries) out.push_back({s.system_name, s.Cer(), s.Wer(), s.SwWer()});
  return out;
}

std::string_view ToString(MetricKind metric) {
  switch (metric) {
    case MetricKind::kCer: return "cer";
    case MetricKind::kWer: return "wer";
    case MetricKind::kSwWer: return "sw_wer";
  }
  return "?";
}

std::vector<BoxStats> MetricDistribution(std::span<const UtteranceScore> scores,
                                         std::span<const UtteranceRecord> records,
                                         std::span<const std::string> dimensions, MetricKind metric) {
  std::vector<std::string> systems;
  const Groups groups = Partition(scores, records, dimensions, systems);
  std::vector<BoxStats> out;
  for (const auto& [id, members] : groups) {
    std::vector<std::pair<double, std::string>> points;
    points.reserve(members.size());
    for (const UtteranceScore* s : members) {
      points.emplace_back(100.0 * MetricValue(*s, metric), s->utterance_id);
    }
    std::sort(points.begin(), points.end());
    std::vector<double> values;
    for (const auto& p : points) values.push_back(p.first);

    BoxStats box;
    box.system_name = systems[id.first];
    box.key = id.second;
    box.count = values.size();
    box.min = values.front();
    box.max = values.back();
    box.q1 = Quantile(values, 0.25);
    box.median = Quantile(values, 0.5);
    box.q3 = Quantile(values, 0.75);
    const double iqr = box.q3 - box.q1;
    const double lo_fence = box.q1 - 1.5 * iqr;
    const double hi_fence = box.q3 + 1.5 * iqr;
    box.lower_whisker = box.max;
    box.upper_whisker = box.min;
    for (const auto& [value, uid] : points) {
      if (value < lo_fence || value > hi_fence) {
        box.outliers.emplace_back(uid, value);
      } else {
        box.lower_whisker = std::min(box.lower_whisker, value);
        box.upper_whisker = std::max(box.upper_whisker, value);
      }
    }
    out.push_back(std::move(box));
  }
  return out;
}

}  // namespace swwer
