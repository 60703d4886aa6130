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

#include "vidthinker/cli.h"

#include <CLI11.hpp>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "vidthinker/backends.h"
#include "vidthinker/errors.h"
#include "vidthinker/eval.h"
#include "vidthinker/features.h"
#include "vidthinker/keyframe.h"
#include "vidthinker/pipeline.h"
#include "vidthinker/selector.h"
#include "vidthinker/taxonomy.h"

namespace vidthinker {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct KeyframesArgs {
  std::string features;
  KeyframeParams params;
  std::optional<int64_t> lookahead;
};

struct ClassifyArgs {
  std::string qa;
  std::string reasoner = "http";
  int retries = 3;
};

struct AnnotateArgs {
  std::string manifest;
  std::string out;
  std::string failures;
  std::string reasoner = "http";
  PipelineConfig config;
  std::optional<int64_t> motion_stride;
  int parallelism = 8;
  int retries = 3;
  bool trace = false;
  bool timings = false;
};

struct SelectArgs {
  std::string features;
  bool grid = false;
  std::string scores;
  std::string query_embedding;
  std::string scorer;
  std::string question;
  std::string video_id;
  int64_t k = kDefaultBudget;
  std::string policy = "topk";
  std::string out;
};

struct EvalArgs {
  std::string pred;
  std::string gt;
  int64_t k = kDefaultBudget;
  std::string report;
  std::string json_out;
};

int RunKeyframes(const KeyframesArgs& args, std::ostream& out) {
  KeyframeParams params = args.params;
  params.lookahead = args.lookahead;
  const FrameFeatureSet features = Normalize(LoadFeatures(args.features));
  for (int64_t index : ExtractKeyframes(features, params)) {
    out << index << "\n";
  }
  return 0;
}

int RunClassify(const ClassifyArgs& args, std::ostream& out) {
  ClientOptions options;
  options.retry.max_retries = args.retries;
  ReasonerClient client(MakeReasonerBackend(args.reasoner), options);
  for (const QAPair& qa : LoadQAFile(args.qa)) {
    qa.Validate();
    out << InstructionTypeName(Classify(ProbeSignals(client, qa))) << "\n";
  }
  return 0;
}

int RunAnnotate(const AnnotateArgs& args, std::ostream& err) {
  PipelineConfig config = args.config;
  config.motion_stride = args.motion_stride;
  config.Validate();
  ClientOptions options;
  options.retry.max_retries = args.retries;
  options.max_parallelism = args.parallelism;
  ReasonerClient client(MakeReasonerBackend(args.reasoner), options);

  const BatchResult result =
      AnnotateBatch(ReadManifest(args.manifest), config, client);
  WriteFileBytes(args.out, EncodeAnnotationFile(result.annotations));
  const std::string failures =
      args.failures.empty() ? args.out + ".failures.jsonl" : args.failures;
  WriteFileBytes(failures, EncodeFailureFile(result.failures));
  if (args.trace) {
    WriteFileBytes(args.out + ".trace.jsonl", EncodeTraceFile(result.trace));
  }
  err << "annotated " << result.annotations.size() << " record(s), "
      << result.failures.size() << " failure(s)\n";
  if (args.timings) err << TimingReport(result.timings.Entries()).text;
  return 0;
}

RelevanceScores ReadScoresFile(const std::string& path) {
  const json j = json::parse(ReadFileBytes(path), nullptr, false);
  const json* list = &j;
  if (j.is_object() && j.contains("scores")) list = &j["scores"];
  if (j.is_discarded() || !list->is_array()) {
    throw ValidationError("scores file must be a JSON list of numbers or "
                          "{\"scores\": [...]}");
  }
  RelevanceScores scores;
  for (const json& s : *list) {
    if (!s.is_number()) throw ValidationError("scores file: non-numeric entry");
    scores.push_back(s.get<double>());
  }
  return scores;
}

int RunSelect(const SelectArgs& args, std::ostream& out) {
  const SelectionPolicy policy = ParseSelectionPolicy(args.policy);
  std::optional<FrameFeatureSet> features;
  std::optional<GridFeatureSet> grids;
  if (args.grid) {
    grids = LoadGridFeatures(args.features);
  } else {
    features = LoadFeatures(args.features);
  }
  const int64_t frame_count =
      grids ? grids->frame_count() : features->frame_count();
  const std::string video_id =
      !args.video_id.empty() ? args.video_id : fs::path(args.features).stem().string();

  SelectionResult selection;
  if (policy == SelectionPolicy::kUniformK) {
    selection = SelectUniform(frame_count, args.k);
  } else {
    const int sources = !args.scores.empty() + !args.query_embedding.empty() +
                        !args.scorer.empty();
    if (sources != 1) {
      throw ValidationError("topk needs exactly one of --scores, "
                            "--query-embedding, --scorer");
    }
    RelevanceScores scores;
    if (!args.scores.empty()) {
      scores = ReadScoresFile(args.scores);
      if (static_cast<int64_t>(scores.size()) != frame_count) {
        throw ValidationError("scores file has " +
                              std::to_string(scores.size()) + " entries for " +
                              std::to_string(frame_count) + " frames");
      }
    } else if (!args.query_embedding.empty()) {
      const FrameFeatureSet frames =
          grids ? AnchorPoolAll(*grids) : *features;
      const FrameFeatureSet query = LoadFeatures(args.query_embedding);
      if (query.frame_count() < 1) {
        throw ValidationError("query embedding file has no rows");
      }
      scores = ScoreByQuerySimilarity(frames, query.Row(0));
    } else {
      std::string url = args.scorer;
      if (url.starts_with("http:") && !url.starts_with("http://")) {
        url = url.substr(5);
      }
      HttpFrameScorer scorer(url);
      scores = grids ? ScoreFramesRemote(*grids, args.question, scorer)
                     : ScoreFramesRemote(*features, args.question, scorer);
    }
    selection = SelectTopK(scores, args.k);
  }

  const std::string body =
      json{{"video_id", video_id},
           {"policy", SelectionPolicyName(selection.policy)},
           {"k", selection.k},
           {"frame_indices", selection.frame_indices}}
          .dump() +
      "\n";
  if (args.out.empty() || args.out == "-") {
    out << body;
  } else {
    WriteFileBytes(args.out, body);
  }
  return 0;
}

int RunEval(const EvalArgs& args, std::ostream& out) {
  const EvalReport report = ComparePolicies(ReadAnnotationFile(args.pred),
                                            ReadAnnotationFile(args.gt), args.k);
  const std::string text = RenderReportText(report);
  if (args.report.empty()) {
    out << text;
  } else {
    WriteFileBytes(args.report, text);
  }
  if (!args.json_out.empty()) {
    WriteFileBytes(args.json_out, RenderReportJson(report));
  }
  return 0;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Instruction-guided temporal grounding toolkit", "vidthinker"};
  app.require_subcommand(1);

  KeyframesArgs kf;
  auto* keyframes = app.add_subcommand(
      "keyframes", "Bidirectional-similarity keyframe extraction");
  keyframes->add_option("--features", kf.features, "VITG feature file")
      ->required();
  keyframes->add_option("--t1", kf.params.scene_change_threshold,
                        "Scene-change threshold")
      ->capture_default_str();
  keyframes->add_option("--t2", kf.params.diversity_threshold,
                        "Diversity threshold")
      ->capture_default_str();
  keyframes->add_option("--lookahead", kf.lookahead,
                        "Frames scanned by the diversity check");

  ClassifyArgs cl;
  auto* classify =
      app.add_subcommand("classify", "Print the instruction type of each QA");
  classify->add_option("--qa", cl.qa, "QA JSON file")->required();
  classify->add_option("--reasoner", cl.reasoner,
                       "mock:<scenario.json> | http:<url> | http")
      ->capture_default_str();
  classify->add_option("--retries", cl.retries)->capture_default_str();

  AnnotateArgs an;
  auto* annotate =
      app.add_subcommand("annotate", "Run the annotation pipeline");
  annotate->add_option("--manifest", an.manifest, "TSV manifest")->required();
  annotate->add_option("--out", an.out, "Annotation JSONL output")
      ->required();
  annotate->add_option("--failures", an.failures,
                       "Failure JSONL output (default <out>.failures.jsonl)");
  annotate->add_option("--reasoner", an.reasoner,
                       "mock:<scenario.json> | http:<url> | http")
      ->capture_default_str();
  annotate->add_option("--clip-seconds", an.config.clip_seconds)
      ->capture_default_str();
  annotate->add_option("--budget", an.config.budget)->capture_default_str();
  annotate->add_option("--rate-fps", an.config.rate_fps)->capture_default_str();
  annotate->add_option("--motion-stride", an.motion_stride,
                       "Fixed frame stride for motion sampling");
  annotate->add_option("--verdict-fps", an.config.verdict_fps)
      ->capture_default_str();
  annotate->add_option("--sample-fps", an.config.sample_fps,
                       "Feature rate when the manifest omits it")
      ->capture_default_str();
  annotate->add_option("--workers", an.config.workers)->capture_default_str();
  annotate->add_option("--parallelism", an.parallelism,
                       "Max reasoner requests in flight")
      ->capture_default_str();
  annotate->add_option("--retries", an.retries)->capture_default_str();
  annotate->add_flag("--trace", an.trace,
                     "Write prompts and responses to <out>.trace.jsonl");
  annotate->add_flag("--timings", an.timings, "Print per-stage timings");

  SelectArgs se;
  auto* select = app.add_subcommand("select", "Top-k or Uni-k frame selection");
  select->add_option("--features", se.features, "VITG feature file")
      ->required();
  select->add_flag("--grid", se.grid, "Feature file uses the grid layout");
  select->add_option("--scores", se.scores, "JSON score list");
  select->add_option("--query-embedding", se.query_embedding,
                     "VITG file whose first row is the query");
  select->add_option("--scorer", se.scorer, "http:<url> scoring service");
  select->add_option("--question", se.question, "Question for --scorer");
  select->add_option("--video-id", se.video_id);
  select->add_option("--k", se.k)->capture_default_str();
  select->add_option("--policy", se.policy, "topk | uniform")
      ->capture_default_str();
  select->add_option("--out", se.out, "Output JSON (default stdout)");

  EvalArgs ev;
  auto* evaluate =
      app.add_subcommand("eval", "Compare predictions with ground truth");
  evaluate->add_option("--pred", ev.pred)->required();
  evaluate->add_option("--gt", ev.gt)->required();
  evaluate->add_option("--k", ev.k)->capture_default_str();
  evaluate->add_option("--report", ev.report, "Text report (default stdout)");
  evaluate->add_option("--json", ev.json_out, "JSON sidecar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*keyframes) return RunKeyframes(kf, out);
    if (*classify) return RunClassify(cl, out);
    if (*annotate) return RunAnnotate(an, err);
    if (*select) return RunSelect(se, out);
    if (*evaluate) return RunEval(ev, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace vidthinker
