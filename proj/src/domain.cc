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

#include "vidthinker/domain.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "vidthinker/errors.h"

namespace vidthinker {
namespace {

// floor() that forgives the last-ulp error of products such as (i / fps) * fps.
int64_t StableFloor(double x) {
  return static_cast<int64_t>(
      std::floor(x + 1e-9 * std::max(1.0, std::fabs(x))));
}

}  // namespace

VideoTimeline VideoTimeline::Create(std::string video_id, double duration_s,
                                    double sample_fps,
                                    std::optional<int64_t> frame_count) {
  if (!std::isfinite(duration_s) || duration_s <= 0.0) {
    throw ValidationError("timeline '" + video_id +
                          "': duration must be positive, got " +
                          std::to_string(duration_s));
  }
  if (!std::isfinite(sample_fps) || sample_fps <= 0.0) {
    throw ValidationError("timeline '" + video_id +
                          "': sample_fps must be positive, got " +
                          std::to_string(sample_fps));
  }
  int64_t count;
  if (frame_count.has_value()) {
    count = *frame_count;
    if (count < 1) {
      throw ValidationError("timeline '" + video_id +
                            "': frame_count must be >= 1");
    }
    // The last frame must start before the end of the final sampling
    // interval.
    if (static_cast<double>(count - 1) / sample_fps >=
        duration_s + 1.0 / sample_fps) {
      throw ValidationError("timeline '" + video_id + "': frame_count " +
                            std::to_string(count) +
                            " overruns the video duration");
    }
  } else {
    count = std::max<int64_t>(1, StableFloor(duration_s * sample_fps));
  }
  return VideoTimeline(std::move(video_id), duration_s, sample_fps, count);
}

VideoTimeline VideoTimeline::FromFrameCount(std::string video_id,
                                            int64_t frame_count,
                                            double sample_fps) {
  if (!std::isfinite(sample_fps) || sample_fps <= 0.0) {
    throw ValidationError("timeline '" + video_id +
                          "': sample_fps must be positive");
  }
  return Create(std::move(video_id),
                static_cast<double>(frame_count) / sample_fps, sample_fps,
                frame_count);
}

int64_t VideoTimeline::FrameOfTime(double t_s) const {
  const double limit =
      std::max(duration_s_, TimeOfFrame(frame_count_ - 1));
  if (!std::isfinite(t_s) || t_s < 0.0 || t_s > limit) {
    throw RangeError("time " + std::to_string(t_s) + "s outside [0, " +
                     std::to_string(limit) + "] for '" + video_id_ + "'");
  }
  return std::clamp<int64_t>(StableFloor(t_s * sample_fps_), 0,
                             frame_count_ - 1);
}

double VideoTimeline::TimeOfFrame(int64_t frame) const {
  if (frame < 0 || frame >= frame_count_) {
    throw RangeError("frame " + std::to_string(frame) + " outside [0, " +
                     std::to_string(frame_count_) + ") for '" + video_id_ +
                     "'");
  }
  return static_cast<double>(frame) / sample_fps_;
}

std::vector<Clip> SegmentUniform(const VideoTimeline& timeline,
                                 double clip_seconds) {
  if (!std::isfinite(clip_seconds) || clip_seconds <= 0.0) {
    throw ValidationError("clip_seconds must be positive");
  }
  const double duration = timeline.duration_s();
  const int64_t frames = timeline.frame_count();
  const int64_t n = std::max<int64_t>(
      1, static_cast<int64_t>(std::ceil(duration / clip_seconds - 1e-9)));

  std::vector<Clip> raw;
  raw.reserve(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) {
    Clip clip;
    clip.start_s = static_cast<double>(i) * clip_seconds;
    clip.end_s = std::min(static_cast<double>(i + 1) * clip_seconds, duration);
    clip.start_frame = std::min(
        frames, StableFloor(clip.start_s * timeline.sample_fps()));
    raw.push_back(clip);
  }
  for (size_t i = 0; i < raw.size(); ++i) {
    raw[i].end_frame_exclusive =
        i + 1 < raw.size() ? raw[i + 1].start_frame : frames;
  }

  std::vector<Clip> clips;
  clips.reserve(raw.size());
  bool pending_head = false;  // first clip was empty; next one starts at 0
  for (const Clip& clip : raw) {
    if (clip.frame_count() > 0) {
      Clip out = clip;
      if (pending_head) {
        out.start_s = 0.0;
        out.start_frame = 0;
        pending_head = false;
      }
      out.index = static_cast<int64_t>(clips.size());
      clips.push_back(out);
    } else if (!clips.empty()) {
      clips.back().end_s = clip.end_s;
      clips.back().end_frame_exclusive = clip.end_frame_exclusive;
    } else {
      pending_head = true;
    }
  }
  return clips;
}

void QAPair::Validate() const {
  if (TrimWhitespace(question).empty()) {
    throw ValidationError("qa '" + qa_id + "': question is empty");
  }
  if (TrimWhitespace(answer).empty()) {
    throw ValidationError("qa '" + qa_id + "': answer is empty");
  }
}

std::string_view InstructionTypeName(InstructionType type) {
  switch (type) {
    case InstructionType::kSemanticOnly:
      return "semantic_only";
    case InstructionType::kMotionOnly:
      return "motion_only";
    case InstructionType::kSemanticMotion:
      return "semantic_motion";
    case InstructionType::kNonClues:
      return "non_clues";
  }
  return "unknown";
}

InstructionType ParseInstructionType(std::string_view name) {
  for (InstructionType type : kAllInstructionTypes) {
    if (InstructionTypeName(type) == name) return type;
  }
  throw ValidationError("unknown instruction type '" + std::string(name) +
                        "'");
}

std::string_view TrimWhitespace(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end &&
         std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return text.substr(begin, end - begin);
}

}  // namespace vidthinker
