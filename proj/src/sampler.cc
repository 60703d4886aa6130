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

#include "vidthinker/sampler.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "vidthinker/errors.h"
#include "vidthinker/keyframe.h"
#include "vidthinker/selector.h"

namespace vidthinker {
namespace {

std::vector<int64_t> AllFrames(int64_t frame_count) {
  std::vector<int64_t> frames(static_cast<size_t>(frame_count));
  std::iota(frames.begin(), frames.end(), int64_t{0});
  return frames;
}

void CheckFeatures(const SamplePlan& plan, const FrameFeatureSet& features) {
  if (features.frame_count() != plan.frame_count) {
    throw ValidationError("sampler: features have " +
                          std::to_string(features.frame_count()) +
                          " frames, plan expects " +
                          std::to_string(plan.frame_count));
  }
}

// Grows `chosen` to `target` with farthest-point picks from each tier in turn.
void FillDiverse(const FrameFeatureSet& features,
                 const std::vector<std::vector<int64_t>>& tiers,
                 int64_t target, std::vector<int64_t>& chosen) {
  for (const std::vector<int64_t>& tier : tiers) {
    const int64_t deficit = target - static_cast<int64_t>(chosen.size());
    if (deficit <= 0) break;
    for (int64_t pick : ExtendDiverse(features, tier, chosen, deficit)) {
      chosen.push_back(pick);
    }
  }
}

std::vector<int64_t> Sorted(std::vector<int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int64_t> StridedClipFrames(const std::vector<Clip>& clips,
                                       int64_t stride) {
  std::set<int64_t> taken;
  for (const Clip& clip : clips) {
    for (int64_t f = clip.start_frame; f < clip.end_frame_exclusive;
         f += stride) {
      taken.insert(f);
    }
  }
  return {taken.begin(), taken.end()};
}

// Keeps `k` of `frames` at the Uni-k positions.
std::vector<int64_t> UniformSubsample(const std::vector<int64_t>& frames,
                                      int64_t k) {
  if (static_cast<int64_t>(frames.size()) <= k) return frames;
  std::vector<int64_t> out;
  for (int64_t pos :
       SelectUniform(static_cast<int64_t>(frames.size()), k).frame_indices) {
    out.push_back(frames[static_cast<size_t>(pos)]);
  }
  return out;
}

// Fixed-rate picks confined to the clips; may return fewer than `k`.
std::vector<int64_t> MotionWithinClips(const SamplePlan& plan, int64_t k) {
  int64_t stride = plan.MotionStride();
  std::vector<int64_t> taken = StridedClipFrames(plan.relevant_clips, stride);
  while (static_cast<int64_t>(taken.size()) < k && stride > 1) {
    stride = std::max<int64_t>(1, stride / 2);
    taken = StridedClipFrames(plan.relevant_clips, stride);
  }
  return UniformSubsample(taken, k);
}

// Unused frames ordered by distance to the nearest chosen frame, then index.
void FillNearest(int64_t frame_count, int64_t target,
                 std::vector<int64_t>& chosen) {
  const int64_t deficit = target - static_cast<int64_t>(chosen.size());
  if (deficit <= 0) return;
  const std::vector<int64_t> anchors = Sorted(chosen);
  std::vector<std::pair<int64_t, int64_t>> ranked;  // (distance, frame)
  for (int64_t f = 0; f < frame_count; ++f) {
    auto it = std::lower_bound(anchors.begin(), anchors.end(), f);
    if (it != anchors.end() && *it == f) continue;
    int64_t distance = frame_count;
    if (it != anchors.end()) distance = *it - f;
    if (it != anchors.begin()) distance = std::min(distance, f - *(it - 1));
    ranked.emplace_back(distance, f);
  }
  std::sort(ranked.begin(), ranked.end());
  for (int64_t i = 0; i < deficit && i < static_cast<int64_t>(ranked.size());
       ++i) {
    chosen.push_back(ranked[static_cast<size_t>(i)].second);
  }
}

std::vector<int64_t> SemanticPool(const SamplePlan& plan) {
  return plan.candidate_pool.empty() ? ClipFrames(plan.relevant_clips)
                                     : Sorted(plan.candidate_pool);
}

}  // namespace

int64_t SamplePlan::output_size() const {
  return std::min(budget, frame_count);
}

int64_t SamplePlan::MotionStride() const {
  if (fixed_stride.has_value()) return std::max<int64_t>(1, *fixed_stride);
  return std::max<int64_t>(
      1, static_cast<int64_t>(std::llround(sample_fps / fixed_rate_fps)));
}

void SamplePlan::Validate() const {
  if (budget < 1) throw ValidationError("sample plan: budget must be >= 1");
  if (frame_count < 1) {
    throw ValidationError("sample plan: video has no frames");
  }
  if (!std::isfinite(fixed_rate_fps) || fixed_rate_fps <= 0.0) {
    throw ValidationError("sample plan: fixed rate must be positive");
  }
  if (!std::isfinite(sample_fps) || sample_fps <= 0.0) {
    throw ValidationError("sample plan: sample fps must be positive");
  }
  if (fixed_stride.has_value() && *fixed_stride < 1) {
    throw ValidationError("sample plan: fixed stride must be >= 1");
  }
  for (const Clip& clip : relevant_clips) {
    if (clip.start_frame < 0 || clip.start_frame >= clip.end_frame_exclusive ||
        clip.end_frame_exclusive > frame_count) {
      throw ValidationError("sample plan: clip " + std::to_string(clip.index) +
                            " lies outside the video");
    }
  }
  for (int64_t f : candidate_pool) {
    if (f < 0 || f >= frame_count) {
      throw ValidationError("sample plan: candidate frame " +
                            std::to_string(f) + " lies outside the video");
    }
  }
}

std::vector<int64_t> ClipFrames(const std::vector<Clip>& clips) {
  return StridedClipFrames(clips, 1);
}

std::vector<int64_t> SampleSemantic(const SamplePlan& plan,
                                    const FrameFeatureSet& features) {
  plan.Validate();
  CheckFeatures(plan, features);
  std::vector<int64_t> chosen;
  FillDiverse(features,
              {SemanticPool(plan), ClipFrames(plan.relevant_clips),
               AllFrames(plan.frame_count)},
              plan.output_size(), chosen);
  return Sorted(std::move(chosen));
}

std::vector<int64_t> SampleMotion(const SamplePlan& plan) {
  plan.Validate();
  if (plan.relevant_clips.empty()) {
    throw ValidationError("motion sampling needs at least one relevant clip");
  }
  std::vector<int64_t> chosen = MotionWithinClips(plan, plan.output_size());
  FillNearest(plan.frame_count, plan.output_size(), chosen);
  return Sorted(std::move(chosen));
}

std::vector<int64_t> SampleHybrid(const SamplePlan& plan,
                                  const FrameFeatureSet& features) {
  plan.Validate();
  CheckFeatures(plan, features);
  if (plan.relevant_clips.empty()) {
    throw ValidationError("hybrid sampling needs at least one relevant clip");
  }
  const int64_t k = plan.output_size();
  const int64_t motion_budget = (k + 1) / 2;
  const int64_t semantic_budget = k - motion_budget;

  std::vector<int64_t> chosen = MotionWithinClips(plan, motion_budget);
  if (semantic_budget > 0) {
    for (int64_t pick : ExtendDiverse(features, SemanticPool(plan), {},
                                      semantic_budget)) {
      chosen.push_back(pick);
    }
  }
  chosen = Sorted(std::move(chosen));
  FillDiverse(features,
              {ClipFrames(plan.relevant_clips), AllFrames(plan.frame_count)}, k,
              chosen);
  return Sorted(std::move(chosen));
}

std::vector<int64_t> SampleNonClues(const SamplePlan& plan,
                                    const FrameFeatureSet& features) {
  plan.Validate();
  CheckFeatures(plan, features);
  const int64_t n = plan.frame_count;
  const int64_t k = plan.output_size();
  const std::vector<int64_t> all = AllFrames(n);
  if (k >= n) return all;

  // Seeding at the earliest frame covers the first decile.
  std::vector<int64_t> chosen = ExtendDiverse(features, all, {}, 1);
  if (k >= 3) {
    const int64_t decile = std::max<int64_t>(1, (n + 9) / 10);
    const std::vector<int64_t> tail(all.end() - decile, all.end());
    for (int64_t pick : ExtendDiverse(features, tail, chosen, 1)) {
      chosen.push_back(pick);
    }
  }
  FillDiverse(features, {all}, k, chosen);
  return Sorted(std::move(chosen));
}

std::vector<int64_t> SampleFrames(const SamplePlan& plan,
                                  const FrameFeatureSet& features) {
  switch (plan.instruction_type) {
    case InstructionType::kSemanticOnly:
      return SampleSemantic(plan, features);
    case InstructionType::kMotionOnly:
      return SampleMotion(plan);
    case InstructionType::kSemanticMotion:
      return SampleHybrid(plan, features);
    case InstructionType::kNonClues:
      return SampleNonClues(plan, features);
  }
  throw ValidationError("unknown instruction type");
}

}  // namespace vidthinker
