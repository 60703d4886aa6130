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

#ifndef VIDTHINKER_SELECTOR_H_
#define VIDTHINKER_SELECTOR_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vidthinker/backends.h"
#include "vidthinker/features.h"

namespace vidthinker {

// One relevance score per frame.
using RelevanceScores = std::vector<double>;

enum class SelectionPolicy { kTopK, kUniformK };

std::string_view SelectionPolicyName(SelectionPolicy policy);  // "topk"/"uniform"
SelectionPolicy ParseSelectionPolicy(std::string_view name);

struct SelectionResult {
  SelectionPolicy policy = SelectionPolicy::kTopK;
  int64_t k = 0;
  std::vector<int64_t> frame_indices;  // sorted ascending
};

// The k highest-scoring frames, ties toward the lower index, returned in
// temporal order. Throws ValidationError on k < 1 or a non-finite score.
SelectionResult SelectTopK(std::span<const double> scores, int64_t k);

// Center-of-cell uniform sampling: floor((j + 0.5) * frame_count / k) for
// j in [0, k). k >= frame_count yields every frame.
SelectionResult SelectUniform(int64_t frame_count, int64_t k);

// Cosine similarity of every frame to `query`.
RelevanceScores ScoreByQuerySimilarity(const FrameFeatureSet& features,
                                       std::span<const float> query);

// A relevance model behind some transport. Receives one representation per
// frame and the question; returns one score per frame.
class FrameScorer {
 public:
  virtual ~FrameScorer() = default;
  virtual RelevanceScores Score(const FrameFeatureSet& frames,
                                const std::string& question) = 0;
};

// POSTs {"question", "dim", "frames": [[...], ...]} and expects
// {"scores": [...]}. Transport failures raise TransportError.
class HttpFrameScorer : public FrameScorer {
 public:
  explicit HttpFrameScorer(std::string url, HttpOptions options = {});

  RelevanceScores Score(const FrameFeatureSet& frames,
                        const std::string& question) override;

 private:
  std::string base_;
  std::string path_;
  HttpOptions options_;
};

// Scores frames through `scorer`, checking that exactly one finite score
// comes back per frame (ProtocolError otherwise).
RelevanceScores ScoreFramesRemote(const FrameFeatureSet& features,
                                  const std::string& question,
                                  FrameScorer& scorer);

// Same, but frames are represented by their pooled anchor vectors.
RelevanceScores ScoreFramesRemote(const GridFeatureSet& grids,
                                  const std::string& question,
                                  FrameScorer& scorer);

}  // namespace vidthinker

#endif  // VIDTHINKER_SELECTOR_H_
