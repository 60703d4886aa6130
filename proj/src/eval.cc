// Copyright 2026 The VidThinker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vidthinker/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <tuple>

#include "vidthinker/errors.h"
#include "vidthinker/selector.h"

namespace vidthinker {
namespace {

std::set<int64_t> CheckedSet(std::span<const int64_t> frames,
                             std::optional<int64_t> frame_count,
                             const char* what) {
  std::set<int64_t> out;
  for (int64_t f : frames) {
    if (f < 0 || (frame_count && f >= *frame_count)) {
      throw ValidationError(std::string(what) + ": frame " +
                            std::to_string(f) + " out of range");
    }
    out.insert(f);
  }
  return out;
}

size_t IntersectionSize(const std::set<int64_t>& a, const std::set<int64_t>& b) {
  size_t n = 0;
  for (int64_t x : a) n += b.contains(x) ? 1 : 0;
  return n;
}

std::vector<Interval> Merge(std::span<const Interval> intervals) {
  std::vector<Interval> sorted(intervals.begin(), intervals.end());
  for (const Interval& i : sorted) {
    if (!std::isfinite(i.start_s) || !std::isfinite(i.end_s) ||
        i.start_s >= i.end_s) {
      throw ValidationError("interval must satisfy start < end");
    }
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& a, const Interval& b) {
              return a.start_s < b.start_s;
            });
  std::vector<Interval> merged;
  for (const Interval& i : sorted) {
    if (!merged.empty() && i.start_s <= merged.back().end_s) {
      merged.back().end_s = std::max(merged.back().end_s, i.end_s);
    } else {
      merged.push_back(i);
    }
  }
  return merged;
}

double Length(const std::vector<Interval>& merged) {
  double total = 0.0;
  for (const Interval& i : merged) total += i.end_s - i.start_s;
  return total;
}

std::string Fixed(double value, int digits = 4) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string PadRight(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string PadLeft(std::string s, size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

}  // namespace

double FrameIou(std::span<const int64_t> pred, std::span<const int64_t> gt,
                int64_t frame_count) {
  const auto p = CheckedSet(pred, frame_count, "frame_iou");
  const auto g = CheckedSet(gt, frame_count, "frame_iou");
  if (p.empty() && g.empty()) return 1.0;
  const size_t inter = IntersectionSize(p, g);
  return static_cast<double>(inter) /
         static_cast<double>(p.size() + g.size() - inter);
}

double SegmentIou(std::span<const Interval> pred,
                  std::span<const Interval> gt) {
  const auto p = Merge(pred);
  const auto g = Merge(gt);
  if (p.empty() && g.empty()) return 1.0;
  double inter = 0.0;
  for (size_t i = 0, j = 0; i < p.size() && j < g.size();) {
    const double lo = std::max(p[i].start_s, g[j].start_s);
    const double hi = std::min(p[i].end_s, g[j].end_s);
    if (hi > lo) inter += hi - lo;
    if (p[i].end_s < g[j].end_s) {
      ++i;
    } else {
      ++j;
    }
  }
  const double uni = Length(p) + Length(g) - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

double RecallAtK(std::span<const int64_t> selected,
                 std::span<const int64_t> gt, int64_t k,
                 std::optional<int64_t> frame_count) {
  if (k < 1) throw ValidationError("recall@k: k must be >= 1");
  const auto s = CheckedSet(selected, frame_count, "recall@k");
  const auto g = CheckedSet(gt, frame_count, "recall@k");
  if (g.empty()) return 1.0;
  const size_t denominator = std::min(g.size(), static_cast<size_t>(k));
  const size_t hits = std::min(IntersectionSize(s, g), denominator);
  return static_cast<double>(hits) / static_cast<double>(denominator);
}

EvalReport ComparePolicies(const std::vector<GroundingAnnotation>& pred,
                           const std::vector<GroundingAnnotation>& gt,
                           int64_t k) {
  if (k < 1) throw ValidationError("compare_policies: k must be >= 1");
  using Key = std::pair<std::string, std::string>;
  std::map<Key, const GroundingAnnotation*> truth;
  for (const GroundingAnnotation& g : gt) truth[{g.video_id, g.qa_id}] = &g;

  EvalReport report;
  report.k = k;
  std::set<Key> matched;
  std::map<Key, RecordComparison> rows;
  for (const GroundingAnnotation& p : pred) {
    const Key key{p.video_id, p.qa_id};
    auto it = truth.find(key);
    if (it == truth.end()) {
      report.unmatched_pred.push_back(p.video_id + "/" + p.qa_id);
      continue;
    }
    const GroundingAnnotation& g = *it->second;
    const int64_t frames = std::max(p.frame_count, g.frame_count);
    const std::vector<int64_t> uniform =
        SelectUniform(frames, k).frame_indices;
    RecordComparison row;
    row.video_id = p.video_id;
    row.qa_id = p.qa_id;
    row.topk_iou = FrameIou(p.frame_indices, g.frame_indices, frames);
    row.topk_recall = RecallAtK(p.frame_indices, g.frame_indices, k, frames);
    row.uniform_iou = FrameIou(uniform, g.frame_indices, frames);
    row.uniform_recall = RecallAtK(uniform, g.frame_indices, k, frames);
    rows[key] = row;
    matched.insert(key);
  }
  for (const auto& [key, _] : truth) {
    if (!matched.contains(key)) {
      report.unmatched_gt.push_back(key.first + "/" + key.second);
    }
  }
  std::sort(report.unmatched_pred.begin(), report.unmatched_pred.end());

  for (auto& [_, row] : rows) {
    report.topk.mean_iou += row.topk_iou;
    report.topk.mean_recall += row.topk_recall;
    report.uniform.mean_iou += row.uniform_iou;
    report.uniform.mean_recall += row.uniform_recall;
    report.records.push_back(row);
  }
  if (!report.records.empty()) {
    const auto n = static_cast<double>(report.records.size());
    report.topk.mean_iou /= n;
    report.topk.mean_recall /= n;
    report.uniform.mean_iou /= n;
    report.uniform.mean_recall /= n;
  }
  return report;
}

std::string RenderReportText(const EvalReport& report) {
  const std::string k = std::to_string(report.k);
  std::string out;
  out += "policy     mean_iou  mean_recall@" + k + "\n";
  out += PadRight("Top-" + k, 10) + " " +
         PadLeft(Fixed(report.topk.mean_iou), 8) + "  " +
         PadLeft(Fixed(report.topk.mean_recall), 8) + "\n";
  out += PadRight("Uni-" + k, 10) + " " +
         PadLeft(Fixed(report.uniform.mean_iou), 8) + "  " +
         PadLeft(Fixed(report.uniform.mean_recall), 8) + "\n";
  out += PadRight("delta", 10) + " " +
         PadLeft(Fixed(report.topk.mean_iou - report.uniform.mean_iou), 8) +
         "  " +
         PadLeft(Fixed(report.topk.mean_recall - report.uniform.mean_recall),
                 8) +
         "\n\n";
  out += "records: " + std::to_string(report.records.size()) + "\n";
  out += "video_id\tqa_id\ttopk_iou\tuni_iou\tdelta_iou\ttopk_recall\t"
         "uni_recall\tdelta_recall\n";
  for (const RecordComparison& r : report.records) {
    out += r.video_id + "\t" + r.qa_id + "\t" + Fixed(r.topk_iou) + "\t" +
           Fixed(r.uniform_iou) + "\t" + Fixed(r.delta_iou()) + "\t" +
           Fixed(r.topk_recall) + "\t" + Fixed(r.uniform_recall) + "\t" +
           Fixed(r.delta_recall()) + "\n";
  }
  out += "\nunmatched predictions: " +
         std::to_string(report.unmatched_pred.size()) + "\n";
  for (const std::string& key : report.unmatched_pred) out += "  " + key + "\n";
  out += "unmatched ground truth: " +
         std::to_string(report.unmatched_gt.size()) + "\n";
  for (const std::string& key : report.unmatched_gt) out += "  " + key + "\n";
  return out;
}

std::string RenderReportJson(const EvalReport& report) {
  using nlohmann::json;
  json records = json::array();
  for (const RecordComparison& r : report.records) {
    records.push_back({{"video_id", r.video_id},
                       {"qa_id", r.qa_id},
                       {"topk_iou", r.topk_iou},
                       {"topk_recall", r.topk_recall},
                       {"uniform_iou", r.uniform_iou},
                       {"uniform_recall", r.uniform_recall},
                       {"delta_iou", r.delta_iou()},
                       {"delta_recall", r.delta_recall()}});
  }
  const json j = {
      {"k", report.k},
      {"policies",
       {{"topk",
         {{"mean_iou", report.topk.mean_iou},
          {"mean_recall", report.topk.mean_recall}}},
        {"uniform",
         {{"mean_iou", report.uniform.mean_iou},
          {"mean_recall", report.uniform.mean_recall}}}}},
      {"delta",
       {{"mean_iou", report.topk.mean_iou - report.uniform.mean_iou},
        {"mean_recall",
         report.topk.mean_recall - report.uniform.mean_recall}}},
      {"records", records},
      {"unmatched_gt", report.unmatched_gt},
      {"unmatched_pred", report.unmatched_pred}};
  return j.dump(2) + "\n";
}

TimingTable TimingReport(
    const std::vector<std::pair<std::string, double>>& stages) {
  TimingTable table;
  table.stages = stages;
  std::vector<std::string> headers;
  std::vector<std::string> cells;
  for (const auto& [name, seconds] : stages) {
    if (!std::isfinite(seconds) || seconds < 0.0) {
      throw ValidationError("timing for '" + name +
                            "' must be a non-negative number");
    }
    table.overall_s += seconds;
    headers.push_back(name);
    cells.push_back(Fixed(seconds, 2) + "s");
  }
  if (stages.empty()) return table;
  headers.emplace_back("Overall");
  cells.push_back(Fixed(table.overall_s, 2) + "s");

  std::string head = "|";
  std::string rule = "|";
  std::string body = "|";
  for (size_t i = 0; i < headers.size(); ++i) {
    const size_t width = std::max(headers[i].size(), cells[i].size());
    head += " " + PadRight(headers[i], width) + " |";
    rule += std::string(width + 2, '-') + "|";
    body += " " + PadLeft(cells[i], width) + " |";
  }
  table.text = head + "\n" + rule + "\n" + body + "\n";
  return table;
}

}  // namespace vidthinker
