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

#include "testing.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "vidthinker/backends.h"
#include "vidthinker/domain.h"
#include "vidthinker/prompts.h"

namespace vidthinker::testing {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<float> UnitRow(Rng& rng, uint32_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v(dim);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double& x : v) {
      x = gauss(rng);
      norm += x * x;
    }
  } while (norm < 1e-6);
  norm = std::sqrt(norm);
  std::vector<float> row(dim);
  for (uint32_t c = 0; c < dim; ++c) row[c] = static_cast<float>(v[c] / norm);
  return row;
}

std::vector<float> Renormalized(std::vector<double> v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  std::vector<float> out(v.size());
  for (size_t c = 0; c < v.size(); ++c) {
    out[c] = static_cast<float>(v[c] / norm);
  }
  return out;
}

}  // namespace

FrameFeatureSet RandomUnitFeatures(Rng& rng, int64_t frames, uint32_t dim,
                                   const std::string& video_id) {
  std::vector<std::vector<float>> rows;
  for (int64_t i = 0; i < frames; ++i) rows.push_back(UnitRow(rng, dim));
  return FeaturesFromRows(rows, true, video_id);
}

FrameFeatureSet FeaturesFromRows(const std::vector<std::vector<float>>& rows,
                                 bool normalized, const std::string& video_id) {
  if (rows.empty()) throw std::invalid_argument("FeaturesFromRows: no rows");
  std::vector<float> values;
  for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
  return FrameFeatureSet(video_id, static_cast<uint32_t>(rows[0].size()),
                         std::move(values), normalized);
}

FrameFeatureSet PlanarDriftFeatures(Rng& rng, int64_t frames, uint32_t dim) {
  std::uniform_real_distribution<double> step(0.0, 1.0);
  std::vector<double> angles(static_cast<size_t>(frames));
  double total = 0.0;
  for (double& a : angles) {
    a = total;
    total += 0.01 + step(rng);
  }
  const double span = 0.95 * std::numbers::pi;
  std::vector<std::vector<float>> rows;
  for (double a : angles) {
    std::vector<float> row(dim, 0.0f);
    const double theta = total > 0.0 ? a / total * span : 0.0;
    row[0] = static_cast<float>(std::cos(theta));
    row[1] = static_cast<float>(std::sin(theta));
    rows.push_back(row);
  }
  return FeaturesFromRows(rows, true, "drift");
}

std::vector<float> Basis(uint32_t dim, uint32_t axis) {
  std::vector<float> v(dim, 0.0f);
  v[axis] = 1.0f;
  return v;
}

std::vector<std::vector<double>> RowsOf(const FrameFeatureSet& features) {
  std::vector<std::vector<double>> rows;
  for (int64_t i = 0; i < features.frame_count(); ++i) {
    auto row = features.Row(i);
    rows.emplace_back(row.begin(), row.end());
  }
  return rows;
}

namespace {

double OracleSim(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t c = 0; c < a.size(); ++c) {
    dot += a[c] * b[c];
    na += a[c] * a[c];
    nb += b[c] * b[c];
  }
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

}  // namespace

std::vector<int64_t> OracleKeyframes(
    const std::vector<std::vector<double>>& frames, double t1, double t2) {
  std::vector<int64_t> sel = {0};
  std::vector<double> prev = frames[0];
  for (size_t i = 1; i < frames.size(); ++i) {
    const std::vector<double>& curr = frames[i];
    const double s = OracleSim(curr, prev);
    if (s < t1) {
      for (size_t f = i + 1; f < frames.size(); ++f) {
        const std::vector<double>& fut = frames[f];
        if (OracleSim(curr, fut) < t2) {
          sel.push_back(static_cast<int64_t>(i));
          prev = curr;
          break;
        }
      }
    }
  }
  if (OracleSim(frames.back(), prev) < t1) {
    const int64_t last = static_cast<int64_t>(frames.size()) - 1;
    if (sel.back() != last) sel.push_back(last);
  }
  return sel;
}

std::vector<int64_t> NaiveTopK(const std::vector<double>& scores, int64_t k) {
  std::vector<int64_t> order(scores.size());
  std::iota(order.begin(), order.end(), int64_t{0});
  std::stable_sort(order.begin(), order.end(), [&](int64_t a, int64_t b) {
    return scores[static_cast<size_t>(a)] > scores[static_cast<size_t>(b)];
  });
  order.resize(std::min<size_t>(order.size(), static_cast<size_t>(k)));
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<double> RandomScores(Rng& rng, int64_t n, bool with_ties) {
  std::vector<double> scores(static_cast<size_t>(n));
  if (with_ties) {
    std::uniform_int_distribution<int> level(0, 4);
    for (double& s : scores) s = 0.25 * level(rng);
  } else {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& s : scores) s = u(rng);
  }
  return scores;
}

std::string FuzzText(Rng& rng) {
  static const std::vector<std::string> kSeeds = {
      R"({"explanation": "x", "clip_num": "One clip: [Clip-2]"})",
      R"({"explanation": "x", "clip_num": "Multiple clips: [Clip-1, Clip-7, Clip-8]"})",
      R"({"explanation": "x", "clip_num": "None."})",
      "```json\n{'explanation': 'y', 'clip_num': 'One clip: [Clip-0]'}\n```",
      "Yes.", "No", "{{{{", "}", "\"clip_num\"", "[Clip-", "Clip-99999999999999999999"};
  static const std::string kAlphabet =
      "{}[]\"':,.-0123456789 \n\\ClipNoneOMultiplecs";
  std::uniform_int_distribution<int> mode(0, 3);
  std::uniform_int_distribution<int> byte(0, 255);
  std::string text;
  const int m = mode(rng);
  if (m == 0) {
    const size_t len = rng() % 200;
    for (size_t i = 0; i < len; ++i) text.push_back(static_cast<char>(byte(rng)));
    return text;
  }
  text = kSeeds[rng() % kSeeds.size()];
  const int edits = 1 + static_cast<int>(rng() % 6);
  for (int e = 0; e < edits; ++e) {
    const size_t pos = text.empty() ? 0 : rng() % (text.size() + 1);
    switch (rng() % 4) {
      case 0:
        text.insert(pos, 1, kAlphabet[rng() % kAlphabet.size()]);
        break;
      case 1:
        if (pos < text.size()) text.erase(pos, 1 + rng() % 5);
        break;
      case 2:
        if (pos < text.size()) text[pos] = static_cast<char>(byte(rng));
        break;
      default:
        text.insert(pos, kSeeds[rng() % kSeeds.size()]);
        break;
    }
  }
  return text;
}

RandomPlanCase RandomPlan(Rng& rng) {
  static constexpr double kFps[] = {0.5, 1.0, 2.0, 3.0, 4.0, 30.0};
  static constexpr double kRates[] = {0.5, 1.0, 2.0};
  const double fps = kFps[rng() % std::size(kFps)];
  const int64_t n = 1 + static_cast<int64_t>(rng() % 300);
  const auto timeline = VideoTimeline::FromFrameCount("plan", n, fps);
  const std::vector<Clip> clips =
      SegmentUniform(timeline, 1.0 + static_cast<double>(rng() % 8));

  SamplePlan plan;
  plan.instruction_type = kAllInstructionTypes[rng() % 4];
  plan.budget = 1 + static_cast<int64_t>(rng() % 64);
  plan.fixed_rate_fps = kRates[rng() % std::size(kRates)];
  plan.sample_fps = fps;
  plan.frame_count = n;
  if (rng() % 5 == 0) plan.fixed_stride = 1 + static_cast<int64_t>(rng() % 6);
  if (plan.instruction_type != InstructionType::kNonClues || rng() % 2 == 0) {
    for (const Clip& clip : clips) {
      if (rng() % 3 == 0) plan.relevant_clips.push_back(clip);
    }
    if (plan.relevant_clips.empty()) {
      plan.relevant_clips.push_back(clips[rng() % clips.size()]);
    }
    if (rng() % 2 == 0) {
      for (int64_t f : ClipFrames(plan.relevant_clips)) {
        if (rng() % 4 == 0) plan.candidate_pool.push_back(f);
      }
    }
  }

  // A few distinct scenes with repeated frames so ties are common.
  const uint32_t dim = 4;
  const int64_t scenes = 1 + static_cast<int64_t>(rng() % 6);
  std::vector<std::vector<float>> scene_rows;
  for (int64_t s = 0; s < scenes; ++s) scene_rows.push_back(UnitRow(rng, dim));
  std::vector<std::vector<float>> rows;
  for (int64_t i = 0; i < n; ++i) {
    rows.push_back(rng() % 4 == 0 ? UnitRow(rng, dim)
                                  : scene_rows[static_cast<size_t>(
                                        i * scenes / n)]);
  }
  return {plan, FeaturesFromRows(rows, true, "plan")};
}

std::string SamplerContractViolation(const SamplePlan& plan,
                                     const FrameFeatureSet& features) {
  const std::vector<int64_t> out = SampleFrames(plan, features);
  const int64_t n = plan.frame_count;
  const int64_t k = std::min(plan.budget, n);
  if (static_cast<int64_t>(out.size()) != k) {
    return "size " + std::to_string(out.size()) + " != " + std::to_string(k);
  }
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || out[i] >= n) return "index out of range";
    if (i > 0 && out[i] <= out[i - 1]) return "not strictly increasing";
  }
  const std::vector<int64_t> clip_frames = ClipFrames(plan.relevant_clips);
  auto in_clips = [&](int64_t f) {
    return std::binary_search(clip_frames.begin(), clip_frames.end(), f);
  };

  switch (plan.instruction_type) {
    case InstructionType::kSemanticOnly: {
      std::vector<int64_t> pool = plan.candidate_pool;
      std::sort(pool.begin(), pool.end());
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
      if (static_cast<int64_t>(pool.size()) >= k) {
        for (int64_t f : out) {
          if (!std::binary_search(pool.begin(), pool.end(), f)) {
            return "semantic pick outside a saturated candidate pool";
          }
        }
      }
      if (static_cast<int64_t>(clip_frames.size()) >= k) {
        for (int64_t f : out) {
          if (!in_clips(f)) return "semantic pick outside saturated clips";
        }
      }
      break;
    }
    case InstructionType::kMotionOnly: {
      if (plan.relevant_clips.size() != 1) break;
      const Clip& clip = plan.relevant_clips[0];
      auto strided = [&](int64_t s) {
        return (clip.frame_count() + s - 1) / s;
      };
      int64_t stride = plan.MotionStride();
      while (strided(stride) < k && stride > 1) stride = std::max<int64_t>(1, stride / 2);
      std::vector<int64_t> picks;
      for (int64_t f : out) {
        if (clip.Contains(f)) picks.push_back(f);
      }
      if (static_cast<int64_t>(picks.size()) != std::min(k, strided(stride))) {
        return "motion picks inside the clip: " + std::to_string(picks.size());
      }
      int64_t lo = std::numeric_limits<int64_t>::max(), hi = 0;
      for (size_t i = 0; i < picks.size(); ++i) {
        if ((picks[i] - clip.start_frame) % stride != 0) {
          return "motion pick off the stride grid";
        }
        if (i > 0) {
          const int64_t gap = (picks[i] - picks[i - 1]) / stride;
          lo = std::min(lo, gap);
          hi = std::max(hi, gap);
        }
      }
      if (picks.size() > 1 && hi - lo > 1) {
        return "motion stride deviation " + std::to_string(hi - lo);
      }
      break;
    }
    case InstructionType::kSemanticMotion:
      if (static_cast<int64_t>(clip_frames.size()) >= k) {
        for (int64_t f : out) {
          if (!in_clips(f)) return "hybrid pick outside saturated clips";
        }
      }
      break;
    case InstructionType::kNonClues: {
      if (k < 3) break;
      const int64_t decile = std::max<int64_t>(1, (n + 9) / 10);
      if (out.front() >= decile) return "first decile uncovered";
      if (out.back() < n - decile) return "last decile uncovered";
      break;
    }
  }
  if (SampleFrames(plan, features) != out) return "non-deterministic";
  return "";
}

double MonotoneMap::operator()(double x) const {
  return a * x + b * x * x * x + c * std::atan(d * x) + e;
}

MonotoneMap RandomMonotoneMap(Rng& rng) {
  std::uniform_real_distribution<double> pos(0.05, 20.0);
  std::uniform_real_distribution<double> any(-100.0, 100.0);
  return {pos(rng), rng() % 2 ? pos(rng) : 0.0, rng() % 2 ? pos(rng) : 0.0,
          pos(rng), any(rng)};
}

PlantedVideo MakePlantedVideo(Rng& rng, const std::string& video_id,
                              int64_t frames, uint32_t dim, int64_t min_length,
                              int64_t max_length) {
  std::uniform_int_distribution<int64_t> len_dist(min_length, max_length);
  const int64_t length = len_dist(rng);
  std::uniform_int_distribution<int64_t> start_dist(0, frames - length);
  const int64_t start = start_dist(rng);
  std::normal_distribution<double> noise(0.0, 0.05);

  const std::vector<float> query = Basis(dim, 0);
  std::vector<float> values;
  for (int64_t i = 0; i < frames; ++i) {
    const bool planted = i >= start && i < start + length;
    std::vector<double> v(dim);
    for (double& x : v) x = noise(rng);
    v[planted ? 0 : 1] += 1.0;
    const std::vector<float> row = Renormalized(v);
    values.insert(values.end(), row.begin(), row.end());
  }
  return {FrameFeatureSet(video_id, dim, std::move(values), true), query,
          start, length};
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = fs::temp_directory_path() /
          ("vidthinker-test-" + std::to_string(rd()) + "-" +
           std::to_string(counter.fetch_add(1)));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

fs::path GoldenDir(const fs::path& data_root) { return data_root / "golden"; }

namespace {

// Frames of clip c sit near basis axis (c % dim), with a small deterministic
// wobble so neighbors are not identical.
FrameFeatureSet ClusteredFeatures(const std::string& video_id, int64_t frames,
                                  int64_t frames_per_clip, uint32_t dim) {
  std::vector<float> values;
  for (int64_t i = 0; i < frames; ++i) {
    std::vector<double> v(dim, 0.0);
    const int64_t clip = i / frames_per_clip;
    v[static_cast<size_t>(clip % dim)] = 1.0;
    const int64_t within = i % frames_per_clip;
    v[static_cast<size_t>((clip + 1) % dim)] += 0.05 * static_cast<double>(within);
    v[static_cast<size_t>((clip + 3) % dim)] += 0.02 * static_cast<double>(i % 3);
    const std::vector<float> row = Renormalized(v);
    values.insert(values.end(), row.begin(), row.end());
  }
  return FrameFeatureSet(video_id, dim, std::move(values), true);
}

json QAJson(const QAPair& qa) {
  json j = {{"qa_id", qa.qa_id}, {"question", qa.question}, {"answer", qa.answer}};
  if (!qa.options.empty()) j["options"] = qa.options;
  return j;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string Key(ReasonRole role, const std::string& prompt) {
  return PromptKey(ReasonRequest{role, prompt, {}});
}

std::string RetrievalJson(const std::string& explanation,
                          const std::string& clip_num) {
  return json{{"explanation", explanation}, {"clip_num", clip_num}}.dump();
}

}  // namespace

void WriteGoldenInputs(const fs::path& dir) {
  fs::create_directories(dir);

  // drums: 40 frames at 1 fps -> 8 clips of 5 frames.
  // kitchen: 60 frames at 2 fps -> 6 clips of 10 frames.
  SaveFeatures(ClusteredFeatures("drums", 40, 5, 8), dir / "drums.vitg");
  SaveFeatures(ClusteredFeatures("kitchen", 60, 10, 8), dir / "kitchen.vitg");

  const QAPair feet{"q1_feet",
                    "What does the man playing the drums do with his feet as "
                    "he plays the drum?",
                    "moves his feet",
                    {}};
  const QAPair camera{"q2_camera",
                      "Could you describe the camera movement in the video?",
                      "It pans from the drummer's hands down to the pedals.",
                      {}};
  const QAPair mood{"q3_mood",
                    "What is the overall mood of the performance?",
                    "Energetic and joyful.",
                    {"Calm", "Energetic and joyful.", "Sad"}};
  const QAPair stir{"q4_stir", "How many times does the chef stir the pot?",
                    "Three times.", {}};
  const QAPair knife{"q5_knife", "Does the chef use a knife in the video?",
                     "No, the chef never uses a knife.", {}};
  const QAPair apron{"q6_apron", "What color is the chef's apron?", "Blue.",
                     {}};

  WriteText(dir / "drums_qa.json",
            json::array({QAJson(feet), QAJson(camera), QAJson(mood)}).dump(2) +
                "\n");
  WriteText(dir / "kitchen_qa.json",
            json::array({QAJson(stir), QAJson(knife), QAJson(apron)}).dump(2) +
                "\n");
  WriteText(dir / "manifest.tsv",
            "# video_id\tfeatures\tqa\tsample_fps\n"
            "drums\tdrums.vitg\tdrums_qa.json\t1\n"
            "kitchen\tkitchen.vitg\tkitchen_qa.json\t2\n");

  json responses = json::object();
  auto pin = [&](ReasonRole role, const std::string& prompt,
                 const std::string& text) {
    responses[Key(role, prompt)] = text;
  };

  const std::string drum_cue =
      "The man playing the drums moves his feet and hits the drums with his "
      "hands.";
  pin(ReasonRole::kKeyPhrases, BuildKeyPhrasePrompt(feet), drum_cue);
  pin(ReasonRole::kKeyPhrases, BuildKeyPhrasePrompt(camera),
      "The camera pans from the hands to the pedals.");
  pin(ReasonRole::kKeyPhrases, BuildKeyPhrasePrompt(stir),
      "The chef stirs the pot three times.");
  pin(ReasonRole::kKeyPhrases, BuildKeyPhrasePrompt(apron),
      "The chef wears a blue apron.");

  auto captions = [](const std::string& video, int64_t clips) {
    std::vector<std::string> out;
    for (int64_t c = 0; c < clips; ++c) {
      out.push_back("Scene of " + ClipRef(video, c) + ".");
    }
    return out;
  };
  const auto drum_captions = captions("drums", 8);
  const auto kitchen_captions = captions("kitchen", 6);

  pin(ReasonRole::kClipRetrieval, BuildRetrievalPrompt(drum_captions, feet),
      "Here is my analysis:\n```json\n" +
          RetrievalJson("Clip-2 shows the drummer's feet on the pedals.",
                        "One clip: [Clip-2]") +
          "\n```\n");
  pin(ReasonRole::kClipRetrieval, BuildRetrievalPrompt(drum_captions, camera),
      RetrievalJson("The pan happens across Clip-4 and Clip-5.",
                    "Multiple clips: [Clip-5, Clip-4]"));
  pin(ReasonRole::kClipRetrieval, BuildRetrievalPrompt(kitchen_captions, stir),
      RetrievalJson("Stirring is visible in Clip-3.", "One clip: [Clip-3]"));
  pin(ReasonRole::kClipRetrieval, BuildRetrievalPrompt(kitchen_captions, knife),
      RetrievalJson("No knife appears; the closest clue is the cutting board "
                    "in Clip-1.",
                    "One clip: [Clip-1]"));
  pin(ReasonRole::kClipRetrieval, BuildRetrievalPrompt(kitchen_captions, apron),
      "{'explanation': 'The apron is visible in the first and last clips.', "
      "'clip_num': 'Multiple clips: [Clip-0, Clip-5]'}");

  pin(ReasonRole::kClassifySemantic, BuildSemanticPrompt(feet), "Yes.");
  pin(ReasonRole::kClassifyMotion, BuildMotionPrompt(camera), "Yes.");
  pin(ReasonRole::kClassifySemantic, BuildSemanticPrompt(camera), "Yes");
  pin(ReasonRole::kClassifyHolistic, BuildHolisticPrompt(mood), "Yes.");
  pin(ReasonRole::kClassifyMotion, BuildMotionPrompt(stir), "yes");
  pin(ReasonRole::kClassifyNonExistence, BuildNonExistencePrompt(knife),
      "Yes.");
  pin(ReasonRole::kClassifySemantic, BuildSemanticPrompt(knife), "Yes.");
  pin(ReasonRole::kClassifySemantic, BuildSemanticPrompt(apron), "Yes.");

  // Drum feet: only frames 11 and 13 of clip 2 are relevant.
  for (int64_t frame : {10, 12, 14}) {
    pin(ReasonRole::kFrameVerdict,
        BuildFrameVerdictPrompt(frame, static_cast<double>(frame), feet), "No.");
  }
  // Knife: every verdict in the widened clips 0-2 is negative.
  for (int64_t frame = 0; frame < 30; frame += 2) {
    pin(ReasonRole::kFrameVerdict,
        BuildFrameVerdictPrompt(frame, static_cast<double>(frame) / 2.0, knife),
        "No, there is no knife.");
  }

  const json scenario = {
      {"responses", responses},
      {"defaults",
       {{"key_phrases", ""},
        {"clip_caption", "Scene of {attachments}."},
        {"clip_retrieval", RetrievalJson("Nothing specific.", "None.")},
        {"frame_verdict", "Yes."},
        {"classify_motion", "No."},
        {"classify_nonexistence", "No."},
        {"classify_holistic", "No."},
        {"classify_semantic", "No."}}}};
  WriteText(dir / "scenario.json", scenario.dump(2) + "\n");
}

PipelineConfig GoldenConfig(int workers) {
  PipelineConfig config;
  config.budget = 8;
  config.workers = workers;
  return config;
}

std::string RunGolden(const fs::path& dir, int parallelism) {
  ClientOptions options;
  options.max_parallelism = parallelism;
  ReasonerClient client(
      std::make_shared<MockBackend>(MockScenario::Load(dir / "scenario.json")),
      options);
  const BatchResult result = AnnotateBatch(ReadManifest(dir / "manifest.tsv"),
                                           GoldenConfig(parallelism), client);
  if (!result.failures.empty()) {
    throw std::runtime_error("golden run failed: " + result.failures[0].stage +
                             ": " + result.failures[0].cause);
  }
  return EncodeAnnotationFile(result.annotations);
}

namespace {

std::string RandomText(Rng& rng) {
  static const std::vector<std::string> kPieces = {
      "a", "Z", "7", " ", "-", "_", "/", "\"", "\\", "\n", "\t", "{", "]",
      "\xc3\xa9", "\xe2\x82\xac", "\xf0\x9f\x8e\xb5", "Clip-3", "None."};
  std::string out;
  const size_t len = rng() % 12;
  for (size_t i = 0; i < len; ++i) out += kPieces[rng() % kPieces.size()];
  return out;
}

std::vector<int64_t> RandomSubset(Rng& rng, int64_t upper, int64_t max_size) {
  std::set<int64_t> picked;
  const int64_t size = static_cast<int64_t>(rng() % (max_size + 1));
  for (int64_t i = 0; i < size && upper > 0; ++i) {
    picked.insert(static_cast<int64_t>(rng() % upper));
  }
  return {picked.begin(), picked.end()};
}

}  // namespace

GroundingAnnotation RandomAnnotation(Rng& rng) {
  static const std::vector<double> kFps = {0.5, 1.0, 2.0, 3.0, 29.97, 30.0};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  GroundingAnnotation a;
  a.video_id = "v" + RandomText(rng);
  a.qa_id = "q" + RandomText(rng);
  a.instruction_type = static_cast<InstructionType>(rng() % 4);
  a.frame_count = 1 + static_cast<int64_t>(rng() % 2000);
  a.sample_fps = kFps[rng() % kFps.size()];
  a.relevant_clip_indices = RandomSubset(rng, 64, 6);
  a.frame_indices = RandomSubset(rng, a.frame_count, 40);
  for (int64_t f : a.frame_indices) {
    a.frame_timestamps_s.push_back(static_cast<double>(f) / a.sample_fps);
  }
  Provenance& p = a.provenance;
  const size_t stages = rng() % 9;
  for (size_t i = 0; i < stages; ++i) p.stages.push_back(RandomText(rng));
  p.key_phrases = RandomText(rng);
  const size_t captions = rng() % 5;
  for (size_t i = 0; i < captions; ++i) p.captions.push_back(RandomText(rng));
  p.retrieval_explanation = RandomText(rng);
  p.retrieval_clip_num = RandomText(rng);
  p.signals.motion = rng() % 2;
  p.signals.nonexistence = rng() % 2;
  p.signals.holistic = rng() % 2;
  p.signals.semantic = rng() % 2;
  p.signals.retrieval_none = rng() % 2;
  if (rng() % 3) p.signals.retrieval_breadth = unit(rng);
  p.clues_widened = rng() % 2;
  p.verdict_frames = RandomSubset(rng, a.frame_count, 20);
  for (size_t i = 0; i < p.verdict_frames.size(); ++i) {
    p.verdict_bitmap.push_back(rng() % 2);
  }
  p.backfill_frames = RandomSubset(rng, a.frame_count, 5);
  return a;
}

}  // namespace vidthinker::testing
