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

#ifndef VIDTHINKER_KEYFRAME_H_
#define VIDTHINKER_KEYFRAME_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vidthinker/features.h"

namespace vidthinker {

struct KeyframeParams {
  // A frame whose similarity to the last keyframe falls below this is a
  // scene-change candidate.
  double scene_change_threshold = 0.85;
  // A candidate is kept once some later frame is less similar than this.
  double diversity_threshold = 0.80;
  // Caps how many later frames the diversity scan inspects. Unset scans to
  // the end of the video.
  std::optional<int64_t> lookahead;

  void Validate() const;
};

// Bidirectional-similarity keyframe extraction. Returns strictly increasing
// frame indices that always start with 0. Requires a normalized, non-empty
// feature set.
std::vector<int64_t> ExtractKeyframes(const FrameFeatureSet& features,
                                      const KeyframeParams& params = {});

// Greedy farthest-point selection under cosine distance (1 - sim). Seeds with
// the earliest candidate, then repeatedly adds the candidate whose minimum
// distance to the chosen set is largest, breaking ties toward the smaller
// frame index. Returns min(k, |candidates|) indices sorted ascending.
std::vector<int64_t> SelectDiverse(const FrameFeatureSet& features,
                                   std::span<const int64_t> candidates,
                                   int64_t k);

// Continues a farthest-point selection: picks up to `count` indices from
// `candidates` (skipping anything in `chosen`) that are far from everything
// already in `chosen`. With an empty `chosen`, the earliest candidate is the
// first pick. Returns the new picks in selection order.
std::vector<int64_t> ExtendDiverse(const FrameFeatureSet& features,
                                   std::span<const int64_t> candidates,
                                   std::span<const int64_t> chosen,
                                   int64_t count);

}  // namespace vidthinker

#endif  // VIDTHINKER_KEYFRAME_H_
