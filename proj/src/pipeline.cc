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

#include "vidthinker/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "vidthinker/backends.h"

namespace vidthinker {
namespace {

using nlohmann::json;

constexpr char kAnnotationFormat[] = "vidthinker-annotations";
constexpr char kFailureFormat[] = "vidthinker-failures";
constexpr char kTraceFormat[] = "vidthinker-trace";
constexpr int kFileVersion = 1;

// Runs `body` as `name`, recording its duration and wrapping any library
// error in a StageError.
template <typename Fn>
auto RunStage(const char* name, Provenance& provenance, StageTimings* timings,
              Fn&& body) {
  provenance.stages.emplace_back(name);
  const auto start = std::chrono::steady_clock::now();
  struct Record {
    const char* name;
    StageTimings* timings;
    std::chrono::steady_clock::time_point start;
    ~Record() {
      if (timings != nullptr) {
        timings->Add(name, std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count());
      }
    }
  } record{name, timings, start};
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

std::vector<Clip> PickClips(const std::vector<Clip>& clips,
                            const std::vector<int64_t>& indices) {
  std::vector<Clip> out;
  for (int64_t i : indices) out.push_back(clips[static_cast<size_t>(i)]);
  return out;
}

// Adds the neighbors of every retrieved clip.
std::vector<int64_t> WidenClips(const std::vector<int64_t>& clips,
                                int64_t clip_count) {
  std::set<int64_t> widened;
  for (int64_t c : clips) {
    for (int64_t n = c - 1; n <= c + 1; ++n) {
      if (n >= 0 && n < clip_count) widened.insert(n);
    }
  }
  return {widened.begin(), widened.end()};
}

// Frames probed for relevance: every stride-th frame of each clip.
int64_t VerdictStride(double sample_fps, double verdict_fps) {
  return std::max<int64_t>(
      1, static_cast<int64_t>(std::llround(sample_fps / verdict_fps)));
}

std::vector<int64_t> VerdictCandidates(const std::vector<Clip>& clips,
                                       int64_t stride) {
  std::vector<int64_t> frames;
  for (const Clip& clip : clips) {
    for (int64_t f = clip.start_frame; f < clip.end_frame_exclusive;
         f += stride) {
      frames.push_back(f);
    }
  }
  return frames;
}

// Shrinks each clip to the span of its relevant frames, each covering
// `stride` frames, dropping clips without any. Falls back to the clips
// themselves if nothing was relevant.
std::vector<Clip> LocalizeSegments(const std::vector<Clip>& clips,
                                   const std::vector<int64_t>& relevant,
                                   int64_t stride) {
  std::vector<Clip> segments;
  for (const Clip& clip : clips) {
    auto first = std::lower_bound(relevant.begin(), relevant.end(),
                                  clip.start_frame);
    auto last = std::lower_bound(relevant.begin(), relevant.end(),
                                 clip.end_frame_exclusive);
    if (first == last) continue;
    Clip segment = clip;
    segment.start_frame = *first;
    segment.end_frame_exclusive =
        std::min(clip.end_frame_exclusive, *(last - 1) + stride);
    segments.push_back(segment);
  }
  return segments.empty() ? clips : segments;
}

json SignalsToJson(const TaxonomySignals& s) {
  return json{{"holistic", s.holistic},
              {"motion", s.motion},
              {"nonexistence", s.nonexistence},
              {"retrieval_breadth", s.retrieval_breadth
                                        ? json(*s.retrieval_breadth)
                                        : json(nullptr)},
              {"retrieval_none", s.retrieval_none},
              {"semantic", s.semantic}};
}

TaxonomySignals SignalsFromJson(const json& j) {
  TaxonomySignals s;
  s.holistic = j.at("holistic").get<bool>();
  s.motion = j.at("motion").get<bool>();
  s.nonexistence = j.at("nonexistence").get<bool>();
  s.semantic = j.at("semantic").get<bool>();
  s.retrieval_none = j.at("retrieval_none").get<bool>();
  if (!j.at("retrieval_breadth").is_null()) {
    s.retrieval_breadth = j.at("retrieval_breadth").get<double>();
  }
  return s;
}

json ProvenanceToJson(const Provenance& p) {
  return json{{"backfill_frames", p.backfill_frames},
              {"captions", p.captions},
              {"clues_widened", p.clues_widened},
              {"key_phrases", p.key_phrases},
              {"retrieval_clip_num", p.retrieval_clip_num},
              {"retrieval_explanation", p.retrieval_explanation},
              {"signals", SignalsToJson(p.signals)},
              {"stages", p.stages},
              {"verdict_bitmap", p.verdict_bitmap},
              {"verdict_frames", p.verdict_frames}};
}

Provenance ProvenanceFromJson(const json& j) {
  Provenance p;
  p.backfill_frames = j.at("backfill_frames").get<std::vector<int64_t>>();
  p.captions = j.at("captions").get<std::vector<std::string>>();
  p.clues_widened = j.at("clues_widened").get<bool>();
  p.key_phrases = j.at("key_phrases").get<std::string>();
  p.retrieval_clip_num = j.at("retrieval_clip_num").get<std::string>();
  p.retrieval_explanation = j.at("retrieval_explanation").get<std::string>();
  p.signals = SignalsFromJson(j.at("signals"));
  p.stages = j.at("stages").get<std::vector<std::string>>();
  p.verdict_bitmap = j.at("verdict_bitmap").get<std::vector<bool>>();
  p.verdict_frames = j.at("verdict_frames").get<std::vector<int64_t>>();
  if (p.verdict_bitmap.size() != p.verdict_frames.size()) {
    throw FormatError(FormatError::Code::kBadRecord,
                      "verdict_bitmap and verdict_frames differ in length");
  }
  return p;
}

void CheckSortedUnique(const std::vector<int64_t>& v, int64_t upper,
                       const char* what) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || (upper >= 0 && v[i] >= upper) ||
        (i > 0 && v[i] <= v[i - 1])) {
      throw FormatError(FormatError::Code::kBadRecord,
                        std::string(what) +
                            " must be sorted, unique and in range");
    }
  }
}

std::string HeaderLine(const char* format) {
  return json{{"format", format}, {"version", kFileVersion}}.dump() + "\n";
}

// Splits on '\n', validates the header line, and returns the record lines.
std::vector<std::string_view> RecordLines(std::string_view text,
                                          const char* format) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view()
                                        : text.substr(nl + 1);
  }
  if (lines.empty()) {
    throw FormatError(FormatError::Code::kBadHeader, "missing header line");
  }
  json header = json::parse(lines.front(), nullptr, false);
  if (header.is_discarded() || !header.is_object() ||
      header.value("format", "") != format ||
      header.value("version", 0) != kFileVersion) {
    throw FormatError(FormatError::Code::kBadHeader,
                      std::string("expected a ") + format +
                          " version 1 header line");
  }
  lines.erase(lines.begin());
  std::erase_if(lines, [](std::string_view l) { return l.empty(); });
  return lines;
}

std::tuple<const std::string&, const std::string&, const std::string&>
FailureKey(const FailureRecord& f) {
  return {f.video_id, f.qa_id, f.stage};
}

}  // namespace

void PipelineConfig::Validate() const {
  if (!std::isfinite(clip_seconds) || clip_seconds <= 0.0) {
    throw ValidationError("clip_seconds must be positive");
  }
  if (budget < 1) throw ValidationError("budget must be >= 1");
  if (!std::isfinite(rate_fps) || rate_fps <= 0.0) {
    throw ValidationError("rate_fps must be positive");
  }
  if (motion_stride.has_value() && *motion_stride < 1) {
    throw ValidationError("motion stride must be >= 1");
  }
  if (!std::isfinite(verdict_fps) || verdict_fps <= 0.0) {
    throw ValidationError("verdict_fps must be positive");
  }
  if (!std::isfinite(sample_fps) || sample_fps <= 0.0) {
    throw ValidationError("sample_fps must be positive");
  }
  if (workers < 1) throw ValidationError("workers must be >= 1");
}

void StageTimings::Add(const std::string& stage, double seconds) {
  seconds_[stage] += seconds;
}

void StageTimings::Merge(const StageTimings& other) {
  for (const auto& [stage, seconds] : other.seconds_) {
    seconds_[stage] += seconds;
  }
}

std::vector<std::pair<std::string, double>> StageTimings::Entries() const {
  return {seconds_.begin(), seconds_.end()};
}

GroundingAnnotation Annotate(const VideoTimeline& timeline,
                             const FrameFeatureSet& features, const QAPair& qa,
                             const PipelineConfig& config,
                             ReasonerClient& client, CallLog* trace,
                             StageTimings* timings) {
  GroundingAnnotation out;
  out.video_id = timeline.video_id();
  out.qa_id = qa.qa_id;
  out.frame_count = timeline.frame_count();
  out.sample_fps = timeline.sample_fps();
  Provenance& prov = out.provenance;

  RunStage(stage::kValidate, prov, timings, [&] {
    config.Validate();
    qa.Validate();
    if (features.frame_count() != timeline.frame_count()) {
      throw ValidationError(
          "feature rows (" + std::to_string(features.frame_count()) +
          ") do not match the timeline (" +
          std::to_string(timeline.frame_count()) + ")");
    }
    if (!features.normalized()) {
      throw ValidationError("features must be normalized");
    }
  });

  const std::vector<Clip> clips = RunStage(stage::kSegment, prov, timings, [&] {
    return SegmentUniform(timeline, config.clip_seconds);
  });
  const auto clip_count = static_cast<int64_t>(clips.size());

  prov.key_phrases = RunStage(stage::kKeyPhrases, prov, timings, [&] {
    return ExtractKeyPhrases(client, qa, trace);
  });

  prov.captions = RunStage(stage::kCaption, prov, timings, [&] {
    std::vector<std::string> captions;
    for (const Clip& clip : clips) {
      captions.push_back(
          CaptionClip(client, prov.key_phrases, timeline.video_id(), clip,
                      trace));
    }
    return captions;
  });

  const RetrievalResult retrieval =
      RunStage(stage::kRetrieval, prov, timings, [&] {
        return RetrieveClips(client, prov.captions, qa, trace);
      });
  prov.retrieval_explanation = retrieval.explanation;
  prov.retrieval_clip_num = RenderClipNum(retrieval.clips);

  RunStage(stage::kClassify, prov, timings, [&] {
    prov.signals = ProbeSignals(client, qa, trace);
    ApplyRetrieval(prov.signals, retrieval, clip_count);
    out.instruction_type = Classify(prov.signals);
    prov.clues_widened = NeedsClueWidening(prov.signals);
  });

  if (out.instruction_type != InstructionType::kNonClues) {
    out.relevant_clip_indices =
        prov.clues_widened ? WidenClips(retrieval.clips, clip_count)
                           : retrieval.clips;
  }
  const std::vector<Clip> relevant = PickClips(clips, out.relevant_clip_indices);

  std::vector<int64_t> relevant_frames;
  RunStage(stage::kLocalize, prov, timings, [&] {
    if (relevant.empty()) return;
    prov.verdict_frames = VerdictCandidates(
        relevant, VerdictStride(timeline.sample_fps(), config.verdict_fps));
    for (int64_t frame : prov.verdict_frames) {
      const FrameVerdict verdict =
          VerdictFrame(client, timeline.video_id(), frame,
                       timeline.TimeOfFrame(frame), qa, trace);
      prov.verdict_bitmap.push_back(verdict.relevant);
      if (verdict.relevant) relevant_frames.push_back(frame);
    }
  });

  out.frame_indices = RunStage(stage::kSample, prov, timings, [&] {
    SamplePlan plan;
    plan.instruction_type = out.instruction_type;
    plan.budget = config.budget;
    plan.fixed_rate_fps = config.rate_fps;
    plan.fixed_stride = config.motion_stride;
    plan.sample_fps = timeline.sample_fps();
    plan.frame_count = timeline.frame_count();
    const bool motion = out.instruction_type == InstructionType::kMotionOnly ||
                        out.instruction_type ==
                            InstructionType::kSemanticMotion;
    plan.relevant_clips =
        motion ? LocalizeSegments(relevant, relevant_frames,
                                  VerdictStride(timeline.sample_fps(),
                                                config.verdict_fps))
               : relevant;
    // All-"no" verdicts leave the pool empty, i.e. every relevant-clip frame.
    plan.candidate_pool = relevant_frames;
    return SampleFrames(plan, features);
  });

  for (int64_t frame : out.frame_indices) {
    out.frame_timestamps_s.push_back(timeline.TimeOfFrame(frame));
    const bool inside = std::any_of(
        relevant.begin(), relevant.end(),
        [frame](const Clip& clip) { return clip.Contains(frame); });
    if (!inside) prov.backfill_frames.push_back(frame);
  }
  return out;
}

std::string SerializeAnnotation(const GroundingAnnotation& a) {
  const json j = {{"frame_count", a.frame_count},
                  {"frame_indices", a.frame_indices},
                  {"frame_timestamps_s", a.frame_timestamps_s},
                  {"instruction_type", InstructionTypeName(a.instruction_type)},
                  {"provenance", ProvenanceToJson(a.provenance)},
                  {"qa_id", a.qa_id},
                  {"relevant_clip_indices", a.relevant_clip_indices},
                  {"sample_fps", a.sample_fps},
                  {"video_id", a.video_id}};
  return j.dump();
}

GroundingAnnotation ParseAnnotation(std::string_view line) {
  const json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw FormatError(FormatError::Code::kBadRecord,
                      "annotation line is not a JSON object");
  }
  try {
    GroundingAnnotation a;
    a.video_id = j.at("video_id").get<std::string>();
    a.qa_id = j.at("qa_id").get<std::string>();
    a.instruction_type =
        ParseInstructionType(j.at("instruction_type").get<std::string>());
    a.frame_count = j.at("frame_count").get<int64_t>();
    a.sample_fps = j.value("sample_fps", 1.0);
    a.frame_indices = j.at("frame_indices").get<std::vector<int64_t>>();
    a.relevant_clip_indices =
        j.value("relevant_clip_indices", std::vector<int64_t>{});
    if (j.contains("frame_timestamps_s")) {
      a.frame_timestamps_s =
          j.at("frame_timestamps_s").get<std::vector<double>>();
    } else {
      for (int64_t f : a.frame_indices) {
        a.frame_timestamps_s.push_back(static_cast<double>(f) / a.sample_fps);
      }
    }
    if (j.contains("provenance")) {
      a.provenance = ProvenanceFromJson(j.at("provenance"));
    }
    if (a.frame_count < 1 || !(a.sample_fps > 0.0)) {
      throw FormatError(FormatError::Code::kBadRecord,
                        "frame_count and sample_fps must be positive");
    }
    CheckSortedUnique(a.frame_indices, a.frame_count, "frame_indices");
    CheckSortedUnique(a.relevant_clip_indices, -1, "relevant_clip_indices");
    if (a.frame_timestamps_s.size() != a.frame_indices.size()) {
      throw FormatError(FormatError::Code::kBadRecord,
                        "frame_timestamps_s must align with frame_indices");
    }
    return a;
  } catch (const json::exception& e) {
    throw FormatError(FormatError::Code::kBadRecord,
                      std::string("annotation record: ") + e.what());
  } catch (const ValidationError& e) {
    throw FormatError(FormatError::Code::kBadRecord,
                      std::string("annotation record: ") + e.what());
  }
}

std::string AnnotationFileHeader() { return HeaderLine(kAnnotationFormat); }

std::string FailureFileHeader() { return HeaderLine(kFailureFormat); }

std::string SerializeFailure(const FailureRecord& f) {
  return json{{"cause", f.cause},
              {"qa_id", f.qa_id},
              {"stage", f.stage},
              {"video_id", f.video_id}}
      .dump();
}

std::string EncodeAnnotationFile(
    const std::vector<GroundingAnnotation>& records) {
  std::string out = AnnotationFileHeader();
  for (const GroundingAnnotation& a : records) {
    out += SerializeAnnotation(a);
    out += '\n';
  }
  return out;
}

std::vector<GroundingAnnotation> DecodeAnnotationFile(std::string_view text) {
  std::vector<GroundingAnnotation> records;
  for (std::string_view line : RecordLines(text, kAnnotationFormat)) {
    records.push_back(ParseAnnotation(line));
  }
  return records;
}

void WriteAnnotationFile(const std::filesystem::path& path,
                         const std::vector<GroundingAnnotation>& records) {
  WriteFileBytes(path, EncodeAnnotationFile(records));
}

std::vector<GroundingAnnotation> ReadAnnotationFile(
    const std::filesystem::path& path) {
  return DecodeAnnotationFile(ReadFileBytes(path));
}

std::vector<QAPair> ParseQAList(std::string_view text) {
  const json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_array()) {
    throw FormatError(FormatError::Code::kBadRecord,
                      "QA file must be a JSON list");
  }
  std::vector<QAPair> out;
  try {
    for (const json& item : j) {
      QAPair qa;
      qa.qa_id = item.at("qa_id").get<std::string>();
      qa.question = item.at("question").get<std::string>();
      qa.answer = item.at("answer").get<std::string>();
      if (item.contains("options") && !item["options"].is_null()) {
        qa.options = item["options"].get<std::vector<std::string>>();
      }
      out.push_back(std::move(qa));
    }
  } catch (const json::exception& e) {
    throw FormatError(FormatError::Code::kBadRecord,
                      std::string("QA entry: ") + e.what());
  }
  return out;
}

std::vector<QAPair> LoadQAFile(const std::filesystem::path& path) {
  return ParseQAList(ReadFileBytes(path));
}

Manifest ReadManifest(const std::filesystem::path& path) {
  const std::string text = ReadFileBytes(path);
  const std::filesystem::path base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path resolved(p);
    return resolved.is_absolute() ? resolved : base / resolved;
  };

  Manifest manifest;
  std::istringstream in(text);
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (TrimWhitespace(line).empty() || TrimWhitespace(line).front() == '#') {
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream cols(line);
    for (std::string field; std::getline(cols, field, '\t');) {
      fields.push_back(field);
    }
    const std::string id = fields.empty() ? std::string() : fields[0];
    if (fields.size() < 3 || fields.size() > 4 || id.empty()) {
      manifest.rejected.push_back(
          {id, "", stage::kManifest,
           "line " + std::to_string(line_no) +
               ": expected video_id<TAB>features<TAB>qa[<TAB>fps]"});
      continue;
    }
    ManifestEntry entry{id, resolve(fields[1]), resolve(fields[2]), {}};
    if (fields.size() == 4) {
      try {
        size_t used = 0;
        const double fps = std::stod(fields[3], &used);
        if (used != fields[3].size() || !(fps > 0.0) || !std::isfinite(fps)) {
          throw std::invalid_argument("bad fps");
        }
        entry.sample_fps = fps;
      } catch (const std::exception&) {
        manifest.rejected.push_back(
            {id, "", stage::kManifest,
             "line " + std::to_string(line_no) + ": bad sample fps '" +
                 fields[3] + "'"});
        continue;
      }
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

BatchResult AnnotateBatch(const Manifest& manifest,
                          const PipelineConfig& config,
                          ReasonerClient& client) {
  config.Validate();

  struct VideoOutput {
    std::vector<GroundingAnnotation> annotations;
    std::vector<FailureRecord> failures;
    std::vector<TraceEntry> trace;
    StageTimings timings;
  };
  std::vector<VideoOutput> outputs(manifest.entries.size());

  auto process = [&](const ManifestEntry& entry, VideoOutput& out) {
    std::optional<FrameFeatureSet> features;
    std::optional<VideoTimeline> timeline;
    try {
      features = Normalize(LoadFeatures(entry.features).WithVideoId(entry.video_id));
      timeline = VideoTimeline::FromFrameCount(
          entry.video_id, features->frame_count(),
          entry.sample_fps.value_or(config.sample_fps));
    } catch (const std::exception& e) {
      out.failures.push_back(
          {entry.video_id, "", stage::kLoadFeatures, e.what()});
      return;
    }
    std::vector<QAPair> qas;
    try {
      qas = LoadQAFile(entry.qa);
    } catch (const std::exception& e) {
      out.failures.push_back({entry.video_id, "", stage::kLoadQA, e.what()});
      return;
    }
    for (const QAPair& qa : qas) {
      CallLog log;
      try {
        out.annotations.push_back(Annotate(*timeline, *features, qa, config,
                                           client, &log, &out.timings));
      } catch (const StageError& e) {
        out.failures.push_back({entry.video_id, qa.qa_id, e.stage(), e.cause()});
      }
      for (size_t i = 0; i < log.size(); ++i) {
        out.trace.push_back({entry.video_id, qa.qa_id,
                             static_cast<int64_t>(i), std::move(log[i])});
      }
    }
  };

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < manifest.entries.size();
         i = next.fetch_add(1)) {
      process(manifest.entries[i], outputs[i]);
    }
  };
  {
    const size_t threads = std::min<size_t>(
        static_cast<size_t>(config.workers),
        std::max<size_t>(1, manifest.entries.size()));
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  BatchResult result;
  result.failures = manifest.rejected;
  for (VideoOutput& out : outputs) {
    std::move(out.annotations.begin(), out.annotations.end(),
              std::back_inserter(result.annotations));
    std::move(out.failures.begin(), out.failures.end(),
              std::back_inserter(result.failures));
    std::move(out.trace.begin(), out.trace.end(),
              std::back_inserter(result.trace));
    result.timings.Merge(out.timings);
  }
  std::stable_sort(result.annotations.begin(), result.annotations.end(),
                   [](const GroundingAnnotation& a,
                      const GroundingAnnotation& b) {
                     return std::tie(a.video_id, a.qa_id) <
                            std::tie(b.video_id, b.qa_id);
                   });
  std::stable_sort(result.failures.begin(), result.failures.end(),
                   [](const FailureRecord& a, const FailureRecord& b) {
                     return FailureKey(a) < FailureKey(b);
                   });
  std::stable_sort(result.trace.begin(), result.trace.end(),
                   [](const TraceEntry& a, const TraceEntry& b) {
                     return std::tie(a.video_id, a.qa_id, a.sequence) <
                            std::tie(b.video_id, b.qa_id, b.sequence);
                   });
  return result;
}

std::string EncodeFailureFile(const std::vector<FailureRecord>& failures) {
  std::string out = FailureFileHeader();
  for (const FailureRecord& f : failures) {
    out += SerializeFailure(f);
    out += '\n';
  }
  return out;
}

std::string EncodeTraceFile(const std::vector<TraceEntry>& trace) {
  std::string out = HeaderLine(kTraceFormat);
  for (const TraceEntry& t : trace) {
    const ReasonRequest request{t.call.role, t.call.prompt,
                                t.call.attachments};
    out += json{{"attachments", t.call.attachments},
                {"key", PromptKey(request)},
                {"prompt", t.call.prompt},
                {"qa_id", t.qa_id},
                {"response", t.call.response},
                {"role", ReasonRoleName(t.call.role)},
                {"sequence", t.sequence},
                {"video_id", t.video_id}}
               .dump();
    out += '\n';
  }
  return out;
}

}  // namespace vidthinker
