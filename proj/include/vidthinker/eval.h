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

#ifndef VIDTHINKER_EVAL_H_
#define VIDTHINKER_EVAL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vidthinker/pipeline.h"

namespace vidthinker {

// |pred ∩ gt| / |pred ∪ gt| over frame index sets. Both empty scores 1, one
// empty scores 0. Throws ValidationError for indices outside
// [0, frame_count).
double FrameIou(std::span<const int64_t> pred, std::span<const int64_t> gt,
                int64_t frame_count);

// Half-open time interval in seconds.
struct Interval {
  double start_s = 0.0;
  double end_s = 0.0;
};

// Intersection over union of the total lengths covered by each interval
// list (overlaps within a list are merged first). Same empty-set convention
// as FrameIou. Throws ValidationError when start >= end.
double SegmentIou(std::span<const Interval> pred, std::span<const Interval> gt);

// min(|selected ∩ gt|, d) / d with d = min(|gt|, k): the share of the ground
// truth that k picks could possibly cover. An empty gt scores 1. When `frame_count` is given,
// indices are range-checked.
double RecallAtK(std::span<const int64_t> selected,
                 std::span<const int64_t> gt, int64_t k,
                 std::optional<int64_t> frame_count = {});

struct RecordComparison {
  std::string video_id;
  std::string qa_id;
  double topk_iou = 0.0;
  double topk_recall = 0.0;
  double uniform_iou = 0.0;
  double uniform_recall = 0.0;

  double delta_iou() const { return topk_iou - uniform_iou; }
  double delta_recall() const { return topk_recall - uniform_recall; }
};

struct PolicyAggregate {
  double mean_iou = 0.0;
  double mean_recall = 0.0;
};

struct EvalReport {
  int64_t k = 0;
  std::vector<RecordComparison> records;  // sorted by (video, qa)
  PolicyAggregate topk;     // the predicted frames
  PolicyAggregate uniform;  // Uni-k baseline over each record's timeline
  std::vector<std::string> unmatched_pred;  // "video_id/qa_id"
  std::vector<std::string> unmatched_gt;
};

// Joins predictions and ground truth on (video_id, qa_id) and scores the
// predicted frames against a Uni-k baseline.
EvalReport ComparePolicies(const std::vector<GroundingAnnotation>& pred,
                           const std::vector<GroundingAnnotation>& gt,
                           int64_t k);

std::string RenderReportText(const EvalReport& report);
std::string RenderReportJson(const EvalReport& report);

// Stage timing table: one column per stage, in the given order, plus an
// "Overall" column with the sum; no stages give an empty table. Throws ValidationError on negative or
// non-finite timings.
struct TimingTable {
  std::vector<std::pair<std::string, double>> stages;
  double overall_s = 0.0;
  std::string text;
};
TimingTable TimingReport(
    const std::vector<std::pair<std::string, double>>& stages);

}  // namespace vidthinker

#endif  // VIDTHINKER_EVAL_H_
