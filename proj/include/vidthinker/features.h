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

#ifndef VIDTHINKER_FEATURES_H_
#define VIDTHINKER_FEATURES_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vidthinker {

// Per-frame embedding vectors for one video, stored frame-major as 32-bit
// floats. Immutable after construction.
class FrameFeatureSet {
 public:
  // Throws ValidationError if `values.size()` is not a multiple of `dim`, if
  // any component is non-finite, or if `normalized` is claimed but some row
  // norm is farther than 1e-5 from 1.
  FrameFeatureSet(std::string video_id, uint32_t dim, std::vector<float> values,
                  bool normalized);

  const std::string& video_id() const { return video_id_; }
  uint32_t dim() const { return dim_; }
  int64_t frame_count() const {
    return static_cast<int64_t>(values_.size() / dim_);
  }
  bool normalized() const { return normalized_; }
  const std::vector<float>& values() const { return values_; }

  std::span<const float> Row(int64_t frame) const;

  FrameFeatureSet WithVideoId(std::string video_id) const;

 private:
  std::string video_id_;
  uint32_t dim_;
  std::vector<float> values_;
  bool normalized_;
};

// Patch features of a single frame laid out as rows x cols patches, each of
// `channels` floats.
struct GridFeature {
  uint32_t rows = 0;
  uint32_t cols = 0;
  uint32_t channels = 0;
  std::vector<float> patches;  // rows * cols * channels, patch-major

  uint32_t patch_count() const { return rows * cols; }
};

// Grid features for every frame of a video.
class GridFeatureSet {
 public:
  GridFeatureSet(std::string video_id, uint32_t rows, uint32_t cols,
                 uint32_t channels, std::vector<float> values, bool normalized);

  const std::string& video_id() const { return video_id_; }
  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  uint32_t channels() const { return channels_; }
  bool normalized() const { return normalized_; }
  int64_t frame_count() const {
    return static_cast<int64_t>(values_.size() / frame_stride());
  }
  const std::vector<float>& values() const { return values_; }

  GridFeature Frame(int64_t frame) const;

 private:
  size_t frame_stride() const {
    return static_cast<size_t>(rows_) * cols_ * channels_;
  }

  std::string video_id_;
  uint32_t rows_;
  uint32_t cols_;
  uint32_t channels_;
  std::vector<float> values_;
  bool normalized_;
};

// VITG container, version 1. All integers and floats are little-endian.
//
//   plain:  "VITG" u32 version u32 N u32 d                u8 norm 7x00  N*d f32
//   grid:   "VITG" u32 version u32 N u32 d u32 rows u32 cols u8 norm 7x00
//                                                           N*rows*cols*d f32
//
// The two layouts share a magic and version; callers pick the decoder.
inline constexpr uint32_t kVitgVersion = 1;

std::string EncodeFeatures(const FrameFeatureSet& set);
FrameFeatureSet DecodeFeatures(std::string_view bytes,
                               std::string video_id = {});
std::string EncodeGridFeatures(const GridFeatureSet& set);
GridFeatureSet DecodeGridFeatures(std::string_view bytes,
                                  std::string video_id = {});

// The video id defaults to the file stem.
FrameFeatureSet LoadFeatures(const std::filesystem::path& path);
void SaveFeatures(const FrameFeatureSet& set,
                  const std::filesystem::path& path);
GridFeatureSet LoadGridFeatures(const std::filesystem::path& path);
void SaveGridFeatures(const GridFeatureSet& set,
                      const std::filesystem::path& path);

// Reads a whole file; throws FormatError(kIo) on failure.
std::string ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

// Norms below this are treated as zero.
inline constexpr double kNearZeroNorm = 1e-12;

// dot(u, v) / (|u| |v|) accumulated in double and clamped to [-1, 1]. Throws
// MathDomainError on a dimension mismatch or a near-zero norm.
double CosineSim(std::span<const float> u, std::span<const float> v);
double CosineSim(std::span<const double> u, std::span<const double> v);

// Rescales every row to unit length. Throws MathDomainError naming the first
// zero row.
FrameFeatureSet Normalize(const FrameFeatureSet& set);

// Anchor vector of one frame: the mean of its patch vectors.
std::vector<double> AnchorPool(const GridFeature& grid);

// One anchor row per frame.
FrameFeatureSet AnchorPoolAll(const GridFeatureSet& grids);

}  // namespace vidthinker

#endif  // VIDTHINKER_FEATURES_H_
