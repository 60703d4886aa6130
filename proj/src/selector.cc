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

#include "vidthinker/selector.h"

#include <algorithm>
#include <cmath>
#include <httplib.h>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>

#include "vidthinker/errors.h"

namespace vidthinker {
namespace {

using nlohmann::json;

void CheckScores(std::span<const double> scores, const char* what,
                 bool protocol) {
  for (size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      const std::string message = std::string(what) + ": score " +
                                  std::to_string(i) + " is not finite";
      if (protocol) throw ProtocolError(message);
      throw ValidationError(message);
    }
  }
}

}  // namespace

std::string_view SelectionPolicyName(SelectionPolicy policy) {
  return policy == SelectionPolicy::kTopK ? "topk" : "uniform";
}

SelectionPolicy ParseSelectionPolicy(std::string_view name) {
  if (name == "topk") return SelectionPolicy::kTopK;
  if (name == "uniform") return SelectionPolicy::kUniformK;
  throw ValidationError("policy must be topk or uniform, got '" +
                        std::string(name) + "'");
}

SelectionResult SelectTopK(std::span<const double> scores, int64_t k) {
  if (k < 1) throw ValidationError("select_topk: k must be >= 1");
  CheckScores(scores, "select_topk", /*protocol=*/false);
  std::vector<int64_t> order(scores.size());
  std::iota(order.begin(), order.end(), int64_t{0});
  const size_t take = std::min(order.size(), static_cast<size_t>(k));
  std::partial_sort(order.begin(), order.begin() + static_cast<ptrdiff_t>(take),
                    order.end(), [&](int64_t a, int64_t b) {
                      const double sa = scores[static_cast<size_t>(a)];
                      const double sb = scores[static_cast<size_t>(b)];
                      return sa != sb ? sa > sb : a < b;
                    });
  order.resize(take);
  std::sort(order.begin(), order.end());
  return SelectionResult{SelectionPolicy::kTopK, k, std::move(order)};
}

SelectionResult SelectUniform(int64_t frame_count, int64_t k) {
  if (k < 1) throw ValidationError("select_uniform: k must be >= 1");
  if (frame_count < 0) {
    throw ValidationError("select_uniform: negative frame count");
  }
  SelectionResult result{SelectionPolicy::kUniformK, k, {}};
  if (k >= frame_count) {
    result.frame_indices.resize(static_cast<size_t>(frame_count));
    std::iota(result.frame_indices.begin(), result.frame_indices.end(),
              int64_t{0});
    return result;
  }
  std::set<int64_t> picked;
  for (int64_t j = 0; j < k; ++j) {
    // floor((j + 0.5) * n / k) in exact integer arithmetic.
    picked.insert((2 * j + 1) * frame_count / (2 * k));
  }
  // Collisions cannot happen for k < frame_count, but keep the size contract
  // regardless: fill from the nearest unused index.
  for (int64_t j = 0; static_cast<int64_t>(picked.size()) < k; ++j) {
    const int64_t target = (2 * j + 1) * frame_count / (2 * k);
    for (int64_t d = 1; d < frame_count; ++d) {
      if (target - d >= 0 && !picked.contains(target - d)) {
        picked.insert(target - d);
        break;
      }
      if (target + d < frame_count && !picked.contains(target + d)) {
        picked.insert(target + d);
        break;
      }
    }
  }
  result.frame_indices.assign(picked.begin(), picked.end());
  return result;
}

RelevanceScores ScoreByQuerySimilarity(const FrameFeatureSet& features,
                                       std::span<const float> query) {
  if (query.size() != features.dim()) {
    throw ValidationError("query dim " + std::to_string(query.size()) +
                          " does not match feature dim " +
                          std::to_string(features.dim()));
  }
  RelevanceScores scores(static_cast<size_t>(features.frame_count()));
  for (int64_t i = 0; i < features.frame_count(); ++i) {
    scores[static_cast<size_t>(i)] = CosineSim(features.Row(i), query);
  }
  return scores;
}

HttpFrameScorer::HttpFrameScorer(std::string url, HttpOptions options)
    : options_(options) {
  std::tie(base_, path_) = SplitUrl(url);
}

RelevanceScores HttpFrameScorer::Score(const FrameFeatureSet& frames,
                                       const std::string& question) {
  json rows = json::array();
  for (int64_t i = 0; i < frames.frame_count(); ++i) {
    const auto row = frames.Row(i);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  const json body = {
      {"question", question}, {"dim", frames.dim()}, {"frames", rows}};
  httplib::Client client(base_);
  client.set_connection_timeout(options_.connect_timeout);
  client.set_read_timeout(options_.read_timeout);
  auto result = client.Post(path_, body.dump(), "application/json");
  if (!result) {
    throw TransportError("scorer " + base_ + path_ + ": " +
                         httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw TransportError("scorer " + base_ + path_ + ": HTTP " +
                         std::to_string(result->status));
  }
  json reply = json::parse(result->body, nullptr, /*allow_exceptions=*/false);
  if (reply.is_discarded() || !reply.is_object() ||
      !reply.contains("scores") || !reply["scores"].is_array()) {
    throw ProtocolError("scorer reply must be {\"scores\": [numbers]}");
  }
  RelevanceScores scores;
  for (const json& s : reply["scores"]) {
    if (!s.is_number()) throw ProtocolError("scorer reply: non-numeric score");
    scores.push_back(s.get<double>());
  }
  return scores;
}

RelevanceScores ScoreFramesRemote(const FrameFeatureSet& features,
                                  const std::string& question,
                                  FrameScorer& scorer) {
  RelevanceScores scores = scorer.Score(features, question);
  if (static_cast<int64_t>(scores.size()) != features.frame_count()) {
    throw ProtocolError("scorer returned " + std::to_string(scores.size()) +
                        " scores for " +
                        std::to_string(features.frame_count()) + " frames");
  }
  CheckScores(scores, "scorer", /*protocol=*/true);
  return scores;
}

RelevanceScores ScoreFramesRemote(const GridFeatureSet& grids,
                                  const std::string& question,
                                  FrameScorer& scorer) {
  return ScoreFramesRemote(AnchorPoolAll(grids), question, scorer);
}

}  // namespace vidthinker
