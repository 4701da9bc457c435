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

#include "swwer/align.hpp"

#include "swwer/textnorm.hpp"

namespace swwer {
namespace {

std::string JoinWords(std::span<const std::string> tokens, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t k = begin; k < end; ++k) {
    if (k > begin) out += ' ';
    out += tokens[k];
  }
  return out;
}

}  // namespace

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch: return "match";
    case EditKind::kSubstitute: return "substitute";
    case EditKind::kInsert: return "insert";
    case EditKind::kDelete: return "delete";
  }
  return "unknown";
}

std::size_t AlignmentPath::Distance() const {
  std::size_t d = 0;
  for (const EditOp& op : ops) d += op.kind != EditKind::kMatch;
  return d;
}

AlignmentCounts Summarize(const AlignmentPath& path) {
  AlignmentCounts counts;
  for (const EditOp& op : path.ops) {
    switch (op.kind) {
      case EditKind::kMatch: ++counts.hits; break;
      case EditKind::kSubstitute: ++counts.substitutions; break;
      case EditKind::kInsert: ++counts.insertions; break;
      case EditKind::kDelete: ++counts.deletions; break;
    }
  }
  return counts;
}

double ClampedCharErrorRate(std::string_view ref, std::string_view hyp) {
  const std::u32string r = CharSequence(ref);
  const std::u32string h = CharSequence(hyp);
  if (r.empty()) return h.empty() ? 0.0 : 1.0;
  const double cer = static_cast<double>(LevenshteinDistance(r, h)) / static_cast<double>(r.size());
  return std::clamp(cer, 0.0, 1.0);
}

std::vector<SubstitutionSegment> SubstitutionSegments(const AlignmentPath& path,
                                                      std::span<const std::string> ref_tokens,
                                                      std::span<const std::string> hyp_tokens) {
  std::vector<SubstitutionSegment> segments;
  const auto& ops = path.ops;
  std::size_t k = 0;
  while (k < ops.size()) {
    if (ops[k].kind != EditKind::kSubstitute) {
      ++k;
      continue;
    }
    std::size_t run_end = k;
    while (run_end < ops.size() && ops[run_end].kind == EditKind::kSubstitute) ++run_end;

    SubstitutionSegment seg;
    seg.ref_begin = *ops[k].ref_index;
    seg.ref_end = *ops[run_end - 1].ref_index + 1;
    seg.hyp_begin = *ops[k].hyp_index;
    seg.hyp_end = *ops[run_end - 1].hyp_index + 1;
    seg.n_words = run_end - k;
    seg.ref_str = JoinWords(ref_tokens, seg.ref_begin, seg.ref_end);
    seg.hyp_str = JoinWords(hyp_tokens, seg.hyp_begin, seg.hyp_end);
    const std::u32string r = CharSequence(seg.ref_str);
    const std::u32string h = CharSequence(seg.hyp_str);
    seg.ref_chars = r.size();
    seg.char_distance = LevenshteinDistance(r, h);
    if (seg.ref_chars == 0) {
      seg.segment_cer = h.empty() ? 0.0 : 1.0;
    } else {
      seg.segment_cer = std::clamp(
          static_cast<double>(seg.char_distance) / static_cast<double>(seg.ref_chars), 0.0, 1.0);
    }

    // Widen to the surrounding non-match region.
    std::size_t lo = k;
    while (lo > 0 && ops[lo - 1].kind != EditKind::kMatch) --lo;
    std::size_t hi = run_end;
    while (hi < ops.size() && ops[hi].kind != EditKind::kMatch) ++hi;
    std::vector<std::string> region_ref;
    std::vector<std::string> region_hyp;
    for (std::size_t q = lo; q < hi; ++q) {
      if (ops[q].ref_index) region_ref.push_back(ref_tokens[*ops[q].ref_index]);
      if (ops[q].hyp_index) region_hyp.push_back(hyp_tokens[*ops[q].hyp_index]);
    }
    seg.region_ref_str = JoinWords(region_ref, 0, region_ref.size());
    seg.region_hyp_str = JoinWords(region_hyp, 0, region_hyp.size());

    segments.push_back(std::move(seg));
    k = run_end;
  }
  return segments;
}

std::string PathToJsonLines(const AlignmentPath& path) {
  std::string out;
  auto index = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("null");
  };
  for (const EditOp& op : path.ops) {
    out += "{\"kind\":\"";
    out += EditKindName(op.kind);
    out += "\",\"ref_index\":" + index(op.ref_index);
    out += ",\"hyp_index\":" + index(op.hyp_index) + "}\n";
  }
  return out;
}

}  // namespace swwer
