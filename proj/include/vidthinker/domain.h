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

#ifndef VIDTHINKER_DOMAIN_H_
#define VIDTHINKER_DOMAIN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vidthinker {

inline constexpr double kDefaultClipSeconds = 5.0;

// The sampled frame grid of one video. Frame i sits at the left edge of its
// sampling interval, i.e. at i / sample_fps seconds.
class VideoTimeline {
 public:
  // Validates and builds a timeline. When `frame_count` is omitted it is
  // floor(duration_s * sample_fps), raised to 1 for sub-frame durations.
  static VideoTimeline Create(std::string video_id, double duration_s,
                              double sample_fps,
                              std::optional<int64_t> frame_count = {});

  // Timeline for a feature file of `frame_count` rows sampled at `sample_fps`.
  static VideoTimeline FromFrameCount(std::string video_id,
                                      int64_t frame_count, double sample_fps);

  const std::string& video_id() const { return video_id_; }
  double duration_s() const { return duration_s_; }
  double sample_fps() const { return sample_fps_; }
  int64_t frame_count() const { return frame_count_; }

  // floor(t_s * sample_fps) clamped to [0, frame_count - 1].
  int64_t FrameOfTime(double t_s) const;
  double TimeOfFrame(int64_t frame) const;

 private:
  VideoTimeline(std::string video_id, double duration_s, double sample_fps,
                int64_t frame_count)
      : video_id_(std::move(video_id)),
        duration_s_(duration_s),
        sample_fps_(sample_fps),
        frame_count_(frame_count) {}

  std::string video_id_;
  double duration_s_;
  double sample_fps_;
  int64_t frame_count_;
};

// A contiguous, left-closed/right-open run of frames.
struct Clip {
  int64_t index = 0;
  int64_t start_frame = 0;
  int64_t end_frame_exclusive = 0;
  double start_s = 0.0;
  double end_s = 0.0;

  int64_t frame_count() const { return end_frame_exclusive - start_frame; }
  bool Contains(int64_t frame) const {
    return frame >= start_frame && frame < end_frame_exclusive;
  }

  friend bool operator==(const Clip&, const Clip&) = default;
};

// Splits the timeline into consecutive clips of `clip_seconds`. The clips tile
// [0, frame_count) exactly; a clip that would hold no frames is merged into
// its predecessor (or, for the first clip, its successor).
std::vector<Clip> SegmentUniform(const VideoTimeline& timeline,
                                 double clip_seconds = kDefaultClipSeconds);

struct QAPair {
  std::string qa_id;
  std::string question;
  std::string answer;
  std::vector<std::string> options;

  // Throws ValidationError when question or answer is blank.
  void Validate() const;
};

enum class InstructionType {
  kSemanticOnly,
  kMotionOnly,
  kSemanticMotion,
  kNonClues,
};

inline constexpr InstructionType kAllInstructionTypes[] = {
    InstructionType::kSemanticOnly, InstructionType::kMotionOnly,
    InstructionType::kSemanticMotion, InstructionType::kNonClues};

// Stable wire names: "semantic_only", "motion_only", "semantic_motion",
// "non_clues".
std::string_view InstructionTypeName(InstructionType type);
InstructionType ParseInstructionType(std::string_view name);

std::string_view TrimWhitespace(std::string_view text);

}  // namespace vidthinker

#endif  // VIDTHINKER_DOMAIN_H_
