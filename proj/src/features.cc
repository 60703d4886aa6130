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

#include "vidthinker/features.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>

#include "vidthinker/errors.h"

namespace vidthinker {
namespace {

constexpr std::string_view kMagic = "VITG";
constexpr size_t kReservedBytes = 7;
constexpr double kUnitNormTolerance = 1e-5;

void CheckFinite(const std::vector<float>& values, const char* what) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw ValidationError(std::string(what) + ": component " +
                            std::to_string(i) + " is not finite");
    }
  }
}

double Norm(std::span<const float> row) {
  double sum = 0.0;
  for (float x : row) sum += static_cast<double>(x) * x;
  return std::sqrt(sum);
}

void CheckUnitRows(const std::vector<float>& values, size_t width,
                   const char* what) {
  for (size_t offset = 0; offset < values.size(); offset += width) {
    const double norm =
        Norm(std::span<const float>(values).subspan(offset, width));
    if (std::fabs(norm - 1.0) > kUnitNormTolerance) {
      throw ValidationError(std::string(what) + ": vector " +
                            std::to_string(offset / width) +
                            " is flagged normalized but has norm " +
                            std::to_string(norm));
    }
  }
}

class ByteWriter {
 public:
  void U8(uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void U32(uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) {
      U8(static_cast<uint8_t>(v >> shift));
    }
  }
  void F32(float v) { U32(std::bit_cast<uint32_t>(v)); }
  void Raw(std::string_view s) { out_.append(s); }
  std::string Take() { return std::move(out_); }

 private:
  std::string out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view bytes) : bytes_(bytes) {}

  size_t remaining() const { return bytes_.size() - pos_; }

  std::string_view Raw(size_t n, const char* field) {
    Need(n, field);
    std::string_view s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  uint8_t U8(const char* field) {
    return static_cast<uint8_t>(Raw(1, field)[0]);
  }
  uint32_t U32(const char* field) {
    std::string_view s = Raw(4, field);
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) {
      v = (v << 8) | static_cast<uint8_t>(s[static_cast<size_t>(i)]);
    }
    return v;
  }
  float F32(const char* field) { return std::bit_cast<float>(U32(field)); }

 private:
  void Need(size_t n, const char* field) {
    if (remaining() < n) {
      throw FormatError(FormatError::Code::kTruncated,
                        std::string("VITG: truncated while reading ") + field);
    }
  }

  std::string_view bytes_;
  size_t pos_ = 0;
};

struct Header {
  uint32_t frame_count = 0;
  uint32_t dim = 0;
  uint32_t rows = 1;
  uint32_t cols = 1;
  bool normalized = false;
};

void WriteHeader(ByteWriter& w, const Header& h, bool grid) {
  w.Raw(kMagic);
  w.U32(kVitgVersion);
  w.U32(h.frame_count);
  w.U32(h.dim);
  if (grid) {
    w.U32(h.rows);
    w.U32(h.cols);
  }
  w.U8(h.normalized ? 1 : 0);
  for (size_t i = 0; i < kReservedBytes; ++i) w.U8(0);
}

Header ReadHeader(ByteReader& r, bool grid) {
  if (r.remaining() < kMagic.size() || r.Raw(kMagic.size(), "magic") != kMagic) {
    throw FormatError(FormatError::Code::kBadMagic, "VITG: bad magic bytes");
  }
  const uint32_t version = r.U32("version");
  if (version != kVitgVersion) {
    throw FormatError(FormatError::Code::kVersionMismatch,
                      "VITG: unsupported version " + std::to_string(version));
  }
  Header h;
  h.frame_count = r.U32("frame_count");
  h.dim = r.U32("dim");
  if (grid) {
    h.rows = r.U32("rows");
    h.cols = r.U32("cols");
  }
  const uint8_t flag = r.U8("normalized flag");
  if (flag > 1) {
    throw FormatError(FormatError::Code::kBadHeader,
                      "VITG: normalized flag must be 0 or 1");
  }
  h.normalized = flag == 1;
  std::string_view reserved = r.Raw(kReservedBytes, "reserved bytes");
  if (std::any_of(reserved.begin(), reserved.end(),
                  [](char c) { return c != 0; })) {
    throw FormatError(FormatError::Code::kReservedNonZero,
                      "VITG: reserved bytes must be zero");
  }
  if (h.dim == 0 || h.rows == 0 || h.cols == 0) {
    throw FormatError(FormatError::Code::kBadHeader,
                      "VITG: zero dimension in header");
  }
  return h;
}

std::vector<float> ReadPayload(ByteReader& r, uint64_t count) {
  if (count > r.remaining() / 4) {
    throw FormatError(FormatError::Code::kTruncated,
                      "VITG: header declares " + std::to_string(count) +
                          " floats but only " +
                          std::to_string(r.remaining() / 4) + " are present");
  }
  std::vector<float> values(static_cast<size_t>(count));
  for (float& v : values) {
    v = r.F32("payload");
    if (!std::isfinite(v)) {
      throw FormatError(FormatError::Code::kNonFinite,
                        "VITG: non-finite value in payload");
    }
  }
  if (r.remaining() != 0) {
    throw FormatError(FormatError::Code::kTrailingBytes,
                      "VITG: " + std::to_string(r.remaining()) +
                          " unexpected trailing bytes");
  }
  return values;
}

template <typename T>
double CosineSimImpl(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) {
    throw MathDomainError("cosine similarity: dimension mismatch (" +
                          std::to_string(u.size()) + " vs " +
                          std::to_string(v.size()) + ")");
  }
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    const double a = u[i];
    const double b = v[i];
    dot += a * b;
    uu += a * a;
    vv += b * b;
  }
  const double nu = std::sqrt(uu);
  const double nv = std::sqrt(vv);
  if (!(nu > kNearZeroNorm) || !(nv > kNearZeroNorm)) {
    throw MathDomainError("cosine similarity: near-zero norm");
  }
  return std::clamp(dot / (nu * nv), -1.0, 1.0);
}

}  // namespace

FrameFeatureSet::FrameFeatureSet(std::string video_id, uint32_t dim,
                                 std::vector<float> values, bool normalized)
    : video_id_(std::move(video_id)),
      dim_(dim),
      values_(std::move(values)),
      normalized_(normalized) {
  if (dim_ == 0) throw ValidationError("feature set: dim must be >= 1");
  if (values_.size() % dim_ != 0) {
    throw ValidationError("feature set: " + std::to_string(values_.size()) +
                          " values do not divide into rows of " +
                          std::to_string(dim_));
  }
  CheckFinite(values_, "feature set");
  if (normalized_) CheckUnitRows(values_, dim_, "feature set");
}

std::span<const float> FrameFeatureSet::Row(int64_t frame) const {
  if (frame < 0 || frame >= frame_count()) {
    throw RangeError("feature row " + std::to_string(frame) +
                     " outside [0, " + std::to_string(frame_count()) + ")");
  }
  return std::span<const float>(values_).subspan(
      static_cast<size_t>(frame) * dim_, dim_);
}

FrameFeatureSet FrameFeatureSet::WithVideoId(std::string video_id) const {
  FrameFeatureSet copy = *this;
  copy.video_id_ = std::move(video_id);
  return copy;
}

GridFeatureSet::GridFeatureSet(std::string video_id, uint32_t rows,
                               uint32_t cols, uint32_t channels,
                               std::vector<float> values, bool normalized)
    : video_id_(std::move(video_id)),
      rows_(rows),
      cols_(cols),
      channels_(channels),
      values_(std::move(values)),
      normalized_(normalized) {
  if (rows_ == 0 || cols_ == 0 || channels_ == 0) {
    throw ValidationError("grid feature set: empty grid shape");
  }
  if (values_.size() % frame_stride() != 0) {
    throw ValidationError("grid feature set: payload is not a whole number "
                          "of frames");
  }
  CheckFinite(values_, "grid feature set");
  if (normalized_) CheckUnitRows(values_, channels_, "grid feature set");
}

GridFeature GridFeatureSet::Frame(int64_t frame) const {
  if (frame < 0 || frame >= frame_count()) {
    throw RangeError("grid frame " + std::to_string(frame) + " out of range");
  }
  const auto first =
      values_.begin() + static_cast<ptrdiff_t>(frame_stride() * frame);
  return GridFeature{
      rows_, cols_, channels_,
      std::vector<float>(first, first + static_cast<ptrdiff_t>(frame_stride()))};
}

std::string EncodeFeatures(const FrameFeatureSet& set) {
  ByteWriter w;
  WriteHeader(w,
              Header{static_cast<uint32_t>(set.frame_count()), set.dim(), 1, 1,
                     set.normalized()},
              /*grid=*/false);
  for (float v : set.values()) w.F32(v);
  return w.Take();
}

FrameFeatureSet DecodeFeatures(std::string_view bytes, std::string video_id) {
  ByteReader r(bytes);
  const Header h = ReadHeader(r, /*grid=*/false);
  std::vector<float> values =
      ReadPayload(r, static_cast<uint64_t>(h.frame_count) * h.dim);
  try {
    return FrameFeatureSet(std::move(video_id), h.dim, std::move(values),
                           h.normalized);
  } catch (const ValidationError& e) {
    throw FormatError(FormatError::Code::kNotNormalized,
                      std::string("VITG: ") + e.what());
  }
}

std::string EncodeGridFeatures(const GridFeatureSet& set) {
  ByteWriter w;
  WriteHeader(w,
              Header{static_cast<uint32_t>(set.frame_count()), set.channels(),
                     set.rows(), set.cols(), set.normalized()},
              /*grid=*/true);
  for (float v : set.values()) w.F32(v);
  return w.Take();
}

GridFeatureSet DecodeGridFeatures(std::string_view bytes,
                                  std::string video_id) {
  ByteReader r(bytes);
  const Header h = ReadHeader(r, /*grid=*/true);
  std::vector<float> values = ReadPayload(
      r, static_cast<uint64_t>(h.frame_count) * h.rows * h.cols * h.dim);
  try {
    return GridFeatureSet(std::move(video_id), h.rows, h.cols, h.dim,
                          std::move(values), h.normalized);
  } catch (const ValidationError& e) {
    throw FormatError(FormatError::Code::kNotNormalized,
                      std::string("VITG: ") + e.what());
  }
}

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError(FormatError::Code::kIo,
                      "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw FormatError(FormatError::Code::kIo,
                      "cannot write '" + path.string() + "'");
  }
}

FrameFeatureSet LoadFeatures(const std::filesystem::path& path) {
  return DecodeFeatures(ReadFileBytes(path), path.stem().string());
}

void SaveFeatures(const FrameFeatureSet& set,
                  const std::filesystem::path& path) {
  WriteFileBytes(path, EncodeFeatures(set));
}

GridFeatureSet LoadGridFeatures(const std::filesystem::path& path) {
  return DecodeGridFeatures(ReadFileBytes(path), path.stem().string());
}

void SaveGridFeatures(const GridFeatureSet& set,
                      const std::filesystem::path& path) {
  WriteFileBytes(path, EncodeGridFeatures(set));
}

double CosineSim(std::span<const float> u, std::span<const float> v) {
  return CosineSimImpl(u, v);
}

double CosineSim(std::span<const double> u, std::span<const double> v) {
  return CosineSimImpl(u, v);
}

FrameFeatureSet Normalize(const FrameFeatureSet& set) {
  std::vector<float> out(set.values().size());
  const size_t dim = set.dim();
  for (int64_t i = 0; i < set.frame_count(); ++i) {
    std::span<const float> row = set.Row(i);
    const double norm = Norm(row);
    if (!(norm > kNearZeroNorm)) {
      throw MathDomainError("normalize: row " + std::to_string(i) +
                            " has zero norm");
    }
    for (size_t c = 0; c < dim; ++c) {
      out[static_cast<size_t>(i) * dim + c] =
          static_cast<float>(static_cast<double>(row[c]) / norm);
    }
  }
  return FrameFeatureSet(set.video_id(), set.dim(), std::move(out),
                         /*normalized=*/true);
}

std::vector<double> AnchorPool(const GridFeature& grid) {
  const size_t patches = grid.patch_count();
  if (patches == 0 || grid.channels == 0 ||
      grid.patches.size() != patches * grid.channels) {
    throw ValidationError("anchor pool: grid is empty or mis-shaped");
  }
  std::vector<double> anchor(grid.channels, 0.0);
  for (size_t p = 0; p < patches; ++p) {
    for (size_t c = 0; c < grid.channels; ++c) {
      anchor[c] += grid.patches[p * grid.channels + c];
    }
  }
  for (double& a : anchor) a /= static_cast<double>(patches);
  return anchor;
}

FrameFeatureSet AnchorPoolAll(const GridFeatureSet& grids) {
  std::vector<float> anchors;
  anchors.reserve(static_cast<size_t>(grids.frame_count()) * grids.channels());
  for (int64_t t = 0; t < grids.frame_count(); ++t) {
    for (double a : AnchorPool(grids.Frame(t))) {
      anchors.push_back(static_cast<float>(a));
    }
  }
  return FrameFeatureSet(grids.video_id(), grids.channels(),
                         std::move(anchors), /*normalized=*/false);
}

}  // namespace vidthinker
