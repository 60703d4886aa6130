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

#ifndef VIDTHINKER_PIPELINE_H_
#define VIDTHINKER_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vidthinker/domain.h"
#include "vidthinker/errors.h"
#include "vidthinker/features.h"
#include "vidthinker/reasoner.h"
#include "vidthinker/sampler.h"
#include "vidthinker/taxonomy.h"

namespace vidthinker {

// Stage names as they appear in provenance and failure records.
namespace stage {
inline constexpr char kLoadFeatures[] = "load_features";
inline constexpr char kLoadQA[] = "load_qa";
inline constexpr char kManifest[] = "manifest";
inline constexpr char kValidate[] = "validate";
inline constexpr char kSegment[] = "segment";
inline constexpr char kKeyPhrases[] = "key_phrases";
inline constexpr char kCaption[] = "caption";
inline constexpr char kRetrieval[] = "retrieval";
inline constexpr char kClassify[] = "classify";
inline constexpr char kLocalize[] = "localize";
inline constexpr char kSample[] = "sample";
}  // namespace stage

// Raised by Annotate; names the stage that failed.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& cause)
      : Error(stage + ": " + cause), stage_(std::move(stage)), cause_(cause) {}

  const std::string& stage() const { return stage_; }
  const std::string& cause() const { return cause_; }

 private:
  std::string stage_;
  std::string cause_;
};

struct PipelineConfig {
  double clip_seconds = kDefaultClipSeconds;
  int64_t budget = kDefaultBudget;
  double rate_fps = kDefaultRateFps;
  std::optional<int64_t> motion_stride;
  // Granularity of the per-frame relevance verdicts.
  double verdict_fps = 1.0;
  // Feature sampling rate when the manifest does not give one.
  double sample_fps = 1.0;
  int workers = 4;

  void Validate() const;
};

struct Provenance {
  std::vector<std::string> stages;  // in execution order
  std::string key_phrases;
  std::vector<std::string> captions;
  std::string retrieval_explanation;
  std::string retrieval_clip_num;  // canonical rendering of the parsed answer
  TaxonomySignals signals;
  bool clues_widened = false;
  std::vector<int64_t> verdict_frames;
  std::vector<bool> verdict_bitmap;  // aligned with verdict_frames
  // Selected frames outside every relevant clip.
  std::vector<int64_t> backfill_frames;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct GroundingAnnotation {
  std::string video_id;
  std::string qa_id;
  InstructionType instruction_type = InstructionType::kNonClues;
  int64_t frame_count = 0;
  double sample_fps = 1.0;
  std::vector<int64_t> relevant_clip_indices;
  std::vector<int64_t> frame_indices;
  std::vector<double> frame_timestamps_s;
  Provenance provenance;

  friend bool operator==(const GroundingAnnotation&,
                         const GroundingAnnotation&) = default;
};

struct FailureRecord {
  std::string video_id;
  std::string qa_id;
  std::string stage;
  std::string cause;
};

// Accumulated wall-clock seconds per stage. Not synchronized.
class StageTimings {
 public:
  void Add(const std::string& stage, double seconds);
  void Merge(const StageTimings& other);
  std::vector<std::pair<std::string, double>> Entries() const;

 private:
  std::map<std::string, double> seconds_;
};

// Runs the three reasoning stages for one QA pair and assembles the
// annotation. `features` must be normalized and match the timeline.
// Reasoner exchanges are appended to `trace`; stage durations to `timings`.
// Throws StageError.
GroundingAnnotation Annotate(const VideoTimeline& timeline,
                             const FrameFeatureSet& features, const QAPair& qa,
                             const PipelineConfig& config,
                             ReasonerClient& client, CallLog* trace = nullptr,
                             StageTimings* timings = nullptr);

// One JSON object per line; keys sorted; LF-terminated files that open with
// a header line.
std::string SerializeAnnotation(const GroundingAnnotation& annotation);
// Accepts the full record or a reduced ground-truth form without provenance
// and timestamps.
GroundingAnnotation ParseAnnotation(std::string_view line);

std::string AnnotationFileHeader();
std::string FailureFileHeader();
std::string SerializeFailure(const FailureRecord& failure);

void WriteAnnotationFile(const std::filesystem::path& path,
                         const std::vector<GroundingAnnotation>& records);
std::vector<GroundingAnnotation> ReadAnnotationFile(
    const std::filesystem::path& path);
std::string EncodeAnnotationFile(
    const std::vector<GroundingAnnotation>& records);
std::vector<GroundingAnnotation> DecodeAnnotationFile(std::string_view text);

// QA file: JSON list of {qa_id, question, answer, options?}.
std::vector<QAPair> ParseQAList(std::string_view text);
std::vector<QAPair> LoadQAFile(const std::filesystem::path& path);

// Manifest: tab-separated video_id, feature path, QA path and an optional
// fourth column with the feature sampling rate. Relative paths resolve
// against the manifest's directory; blank lines and '#' comments are skipped.
struct ManifestEntry {
  std::string video_id;
  std::filesystem::path features;
  std::filesystem::path qa;
  std::optional<double> sample_fps;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::vector<FailureRecord> rejected;  // malformed lines
};

Manifest ReadManifest(const std::filesystem::path& path);

struct TraceEntry {
  std::string video_id;
  std::string qa_id;
  int64_t sequence = 0;
  CallRecord call;
};

struct BatchResult {
  std::vector<GroundingAnnotation> annotations;  // sorted by (video, qa)
  std::vector<FailureRecord> failures;           // sorted
  std::vector<TraceEntry> trace;                 // sorted by (video, qa, seq)
  StageTimings timings;
};

// Annotates every (video, QA) pair in the manifest on config.workers threads.
// Failures are isolated per record. Output order is independent of the
// worker count.
BatchResult AnnotateBatch(const Manifest& manifest,
                          const PipelineConfig& config,
                          ReasonerClient& client);

std::string EncodeFailureFile(const std::vector<FailureRecord>& failures);
std::string EncodeTraceFile(const std::vector<TraceEntry>& trace);

}  // namespace vidthinker

#endif  // VIDTHINKER_PIPELINE_H_
