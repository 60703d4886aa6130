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

#ifndef VIDTHINKER_TESTS_TESTING_H_
#define VIDTHINKER_TESTS_TESTING_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "vidthinker/features.h"
#include "vidthinker/pipeline.h"
#include "vidthinker/sampler.h"

namespace vidthinker::testing {

using Rng = std::mt19937_64;

// Unit-norm Gaussian rows.
FrameFeatureSet RandomUnitFeatures(Rng& rng, int64_t frames, uint32_t dim,
                                   const std::string& video_id = "rand");

// Rows copied verbatim, flagged normalized when `normalized` is set.
FrameFeatureSet FeaturesFromRows(const std::vector<std::vector<float>>& rows,
                                 bool normalized = true,
                                 const std::string& video_id = "rows");

// Frames on a great circle of the first two axes with strictly increasing
// angles spanning less than pi.
FrameFeatureSet PlanarDriftFeatures(Rng& rng, int64_t frames, uint32_t dim);

// Unit basis vector e_axis in `dim` dimensions.
std::vector<float> Basis(uint32_t dim, uint32_t axis);

// Independent transcription of the keyframe pseudocode over raw rows.
std::vector<int64_t> OracleKeyframes(
    const std::vector<std::vector<double>>& frames, double t1, double t2);
std::vector<std::vector<double>> RowsOf(const FrameFeatureSet& features);

// Full sort by (score desc, index asc), first k, ascending.
std::vector<int64_t> NaiveTopK(const std::vector<double>& scores, int64_t k);

// Score vector with deliberate ties drawn from a small value set.
std::vector<double> RandomScores(Rng& rng, int64_t n, bool with_ties);

// A random sampler plan over random features; clips come from uniform
// segmentation and the instruction type is drawn uniformly.
struct RandomPlanCase {
  SamplePlan plan;
  FrameFeatureSet features;
};
RandomPlanCase RandomPlan(Rng& rng);

// Runs the plan's sampler and checks the output contract: exact size, sorted
// unique in-range indices, stride regularity for motion sampling, clip
// confinement for semantic sampling, decile coverage for non-clue sampling.
// Returns a description of the first violation, or "" when all hold.
std::string SamplerContractViolation(const SamplePlan& plan,
                                     const FrameFeatureSet& features);

// Fuzz input for the response parsers: raw bytes, or a well-formed retrieval
// reply with random splices, deletions and byte flips.
std::string FuzzText(Rng& rng);

// Random strictly increasing map a*x + b*x^3 + c*atan(d*x) + e.
struct MonotoneMap {
  double a, b, c, d, e;
  double operator()(double x) const;
};
MonotoneMap RandomMonotoneMap(Rng& rng);

// A video whose frames [start, start+length) sit in a cluster around the
// query and everything else in a separate cluster.
struct PlantedVideo {
  FrameFeatureSet features;
  std::vector<float> query;
  int64_t start = 0;
  int64_t length = 0;
};
PlantedVideo MakePlantedVideo(Rng& rng, const std::string& video_id,
                              int64_t frames, uint32_t dim,
                              int64_t min_length, int64_t max_length);

// Fresh directory under the system temp dir, removed on destruction.
// Arbitrary well-formed record, including escapes and non-ASCII text.
GroundingAnnotation RandomAnnotation(Rng& rng);

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Directory of the committed golden fixture.
std::filesystem::path GoldenDir(const std::filesystem::path& data_root);

// Writes the golden fixture inputs (features, QA files, manifest, scenario)
// into `dir`.
void WriteGoldenInputs(const std::filesystem::path& dir);

// Configuration of the golden run.
PipelineConfig GoldenConfig(int workers);

// Annotates the fixture in `dir` under its mock scenario with `parallelism`
// workers and reasoner slots; returns the encoded annotation file.
std::string RunGolden(const std::filesystem::path& dir, int parallelism);

}  // namespace vidthinker::testing

#endif  // VIDTHINKER_TESTS_TESTING_H_
