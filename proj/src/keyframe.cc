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

#include "vidthinker/keyframe.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "vidthinker/errors.h"

namespace vidthinker {

void KeyframeParams::Validate() const {
  if (!std::isfinite(scene_change_threshold) ||
      !std::isfinite(diversity_threshold)) {
    throw ValidationError("keyframe thresholds must be finite");
  }
  if (lookahead.has_value() && *lookahead < 1) {
    throw ValidationError("keyframe lookahead must be >= 1");
  }
}

std::vector<int64_t> ExtractKeyframes(const FrameFeatureSet& features,
                                      const KeyframeParams& params) {
  params.Validate();
  const int64_t n = features.frame_count();
  if (n == 0) throw ValidationError("keyframes: empty feature set");
  if (!features.normalized()) {
    throw ValidationError("keyframes: features must be normalized");
  }

  std::vector<int64_t> selected = {0};
  int64_t prev = 0;
  for (int64_t i = 1; i < n; ++i) {
    const auto curr = features.Row(i);
    if (CosineSim(curr, features.Row(prev)) >=
        params.scene_change_threshold) {
      continue;
    }
    const int64_t scan_end =
        params.lookahead ? std::min(n, i + 1 + *params.lookahead) : n;
    for (int64_t j = i + 1; j < scan_end; ++j) {
      if (CosineSim(curr, features.Row(j)) < params.diversity_threshold) {
        selected.push_back(i);
        prev = i;
        break;
      }
    }
  }
  const int64_t last = n - 1;
  if (CosineSim(features.Row(last), features.Row(prev)) <
          params.scene_change_threshold &&
      selected.back() != last) {
    selected.push_back(last);
  }
  return selected;
}

std::vector<int64_t> ExtendDiverse(const FrameFeatureSet& features,
                                   std::span<const int64_t> candidates,
                                   std::span<const int64_t> chosen,
                                   int64_t count) {
  auto check = [&](int64_t frame) {
    if (frame < 0 || frame >= features.frame_count()) {
      throw ValidationError("frame " + std::to_string(frame) +
                            " is outside [0, " +
                            std::to_string(features.frame_count()) + ")");
    }
  };
  for (int64_t c : candidates) check(c);
  for (int64_t c : chosen) check(c);
  const std::set<int64_t> taken(chosen.begin(), chosen.end());
  std::vector<int64_t> pool;
  pool.reserve(candidates.size());
  for (int64_t c : std::set<int64_t>(candidates.begin(), candidates.end())) {
    if (!taken.contains(c)) pool.push_back(c);
  }

  std::vector<int64_t> picks;
  if (count <= 0 || pool.empty()) return picks;

  // min_dist[p] is the distance from pool[p] to the nearest chosen frame.
  std::vector<double> min_dist(pool.size(),
                               std::numeric_limits<double>::infinity());
  std::vector<bool> used(pool.size(), false);
  auto absorb = [&](int64_t frame) {
    const auto row = features.Row(frame);
    for (size_t p = 0; p < pool.size(); ++p) {
      if (used[p]) continue;
      min_dist[p] =
          std::min(min_dist[p], 1.0 - CosineSim(features.Row(pool[p]), row));
    }
  };
  for (int64_t c : taken) absorb(c);

  const size_t limit = std::min(pool.size(), static_cast<size_t>(count));
  while (picks.size() < limit) {
    size_t best = pool.size();
    for (size_t p = 0; p < pool.size(); ++p) {
      // Strict '>' keeps the lowest index on ties; pool is sorted ascending.
      if (!used[p] && (best == pool.size() || min_dist[p] > min_dist[best])) {
        best = p;
      }
    }
    used[best] = true;
    picks.push_back(pool[best]);
    absorb(pool[best]);
  }
  return picks;
}

std::vector<int64_t> SelectDiverse(const FrameFeatureSet& features,
                                   std::span<const int64_t> candidates,
                                   int64_t k) {
  if (k < 1) throw ValidationError("select_diverse: k must be >= 1");
  if (candidates.empty()) {
    throw ValidationError("select_diverse: candidate set is empty");
  }
  std::vector<int64_t> picks =
      ExtendDiverse(features, candidates, std::span<const int64_t>(), k);
  std::sort(picks.begin(), picks.end());
  return picks;
}

}  // namespace vidthinker
