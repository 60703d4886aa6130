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

#ifndef VIDTHINKER_SAMPLER_H_
#define VIDTHINKER_SAMPLER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "vidthinker/domain.h"
#include "vidthinker/features.h"

namespace vidthinker {

inline constexpr int64_t kDefaultBudget = 32;
inline constexpr double kDefaultRateFps = 1.0;

// Everything a sampler needs to pick frames for one instruction.
struct SamplePlan {
  InstructionType instruction_type = InstructionType::kSemanticOnly;
  int64_t budget = kDefaultBudget;  // K
  // Motion sampling rate within the localized segments.
  double fixed_rate_fps = kDefaultRateFps;
  // When set, motion sampling takes every `fixed_stride`-th frame instead of
  // deriving the stride from fixed_rate_fps.
  std::optional<int64_t> fixed_stride;
  double sample_fps = 1.0;  // rate at which the features were extracted
  int64_t frame_count = 0;
  std::vector<Clip> relevant_clips;
  // Preferred frames for semantic picks (e.g. frames judged relevant). Empty
  // means every frame of the relevant clips.
  std::vector<int64_t> candidate_pool;

  // min(budget, frame_count): the exact size of every sampler's output.
  int64_t output_size() const;
  // Frame step used by motion sampling.
  int64_t MotionStride() const;
  void Validate() const;
};

// Every index inside the plan's relevant clips, ascending.
std::vector<int64_t> ClipFrames(const std::vector<Clip>& clips);

// Diverse frames from the candidate pool, backfilled from the relevant clips
// and then the whole video.
std::vector<int64_t> SampleSemantic(const SamplePlan& plan,
                                    const FrameFeatureSet& features);

// Fixed-rate frames within the relevant clips. Too many are thinned with the
// Uni-k rule; too few trigger stride halving, then the unused frames nearest
// to the picks.
std::vector<int64_t> SampleMotion(const SamplePlan& plan);

// ceil(K/2) motion frames plus floor(K/2) semantic frames over the same
// clips; overlaps are backfilled diversely from the clips, then the video.
std::vector<int64_t> SampleHybrid(const SamplePlan& plan,
                                  const FrameFeatureSet& features);

// Diverse frames over the whole video. For K >= 3 the first and last tenth
// of the timeline each contribute at least one frame.
std::vector<int64_t> SampleNonClues(const SamplePlan& plan,
                                    const FrameFeatureSet& features);

// Dispatches on plan.instruction_type.
std::vector<int64_t> SampleFrames(const SamplePlan& plan,
                                  const FrameFeatureSet& features);

}  // namespace vidthinker

#endif  // VIDTHINKER_SAMPLER_H_
