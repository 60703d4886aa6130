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

#include "vidthinker/keyframe.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "testing.h"
#include "vidthinker/errors.h"

namespace vidthinker {
namespace {

using testing::Basis;
using testing::FeaturesFromRows;
using testing::Rng;

using Indices = std::vector<int64_t>;

KeyframeParams Params(double t1, double t2) {
  KeyframeParams p;
  p.scene_change_threshold = t1;
  p.diversity_threshold = t2;
  return p;
}

TEST(ExtractKeyframesTest, IdenticalFrames) {
  const auto f = FeaturesFromRows(std::vector(8, Basis(4, 0)));
  EXPECT_EQ(ExtractKeyframes(f, Params(0.9, 0.9)), Indices{0});
}

TEST(ExtractKeyframesTest, HandTrace) {
  const auto e1 = Basis(2, 0), e2 = Basis(2, 1);
  const auto f = FeaturesFromRows({e1, e1, e2, e2, e1});
  EXPECT_EQ(ExtractKeyframes(f, Params(0.5, 0.5)), (Indices{0, 2, 4}));
}

TEST(ExtractKeyframesTest, FloorThresholdKeepsOnlyFirst) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testing::RandomUnitFeatures(rng, 1 + trial, 3);
    EXPECT_EQ(ExtractKeyframes(f, Params(-1.0, 0.5)), Indices{0});
  }
}

TEST(ExtractKeyframesTest, SingleFrame) {
  const auto f = FeaturesFromRows({Basis(3, 1)});
  EXPECT_EQ(ExtractKeyframes(f, Params(1.5, 1.5)), Indices{0});
}

TEST(ExtractKeyframesTest, RequiresNormalizedFeatures) {
  const auto f = FeaturesFromRows({{3, 4}, {4, 3}}, false);
  EXPECT_THROW(ExtractKeyframes(f, Params(0.5, 0.5)), ValidationError);
}

TEST(ExtractKeyframesTest, RejectsBadParams) {
  const auto f = FeaturesFromRows({Basis(2, 0)});
  EXPECT_THROW(ExtractKeyframes(f, Params(std::nan(""), 0.5)), ValidationError);
  KeyframeParams p = Params(0.5, 0.5);
  p.lookahead = 0;
  EXPECT_THROW(ExtractKeyframes(f, p), ValidationError);
}

TEST(ExtractKeyframesTest, LookaheadLimitsDiversityScan) {
  const auto e1 = Basis(2, 0), e2 = Basis(2, 1);
  // Frame 1 only differs from a frame three steps ahead.
  const auto f = FeaturesFromRows({e1, e2, e2, e2, e1, e1});
  EXPECT_EQ(ExtractKeyframes(f, Params(0.5, 0.5)), (Indices{0, 1, 5}));
  KeyframeParams p = Params(0.5, 0.5);
  p.lookahead = 2;
  // Frame 1 sees only e2 within two steps; frame 2 reaches frame 4.
  EXPECT_EQ(ExtractKeyframes(f, p), (Indices{0, 2, 5}));
}

TEST(ExtractKeyframesTest, MatchesOracle) {
  Rng rng(2024);
  std::uniform_int_distribution<int64_t> n_dist(1, 64);
  std::uniform_int_distribution<uint32_t> d_dist(1, 8);
  std::uniform_real_distribution<double> t_dist(-0.5, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = testing::RandomUnitFeatures(rng, n_dist(rng), d_dist(rng));
    const double t1 = t_dist(rng), t2 = t_dist(rng);
    ASSERT_EQ(ExtractKeyframes(f, Params(t1, t2)),
              testing::OracleKeyframes(testing::RowsOf(f), t1, t2))
        << "trial " << trial;
  }
}

TEST(ExtractKeyframesTest, StructuralInvariants) {
  Rng rng(99);
  std::uniform_real_distribution<double> t_dist(-0.5, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = testing::RandomUnitFeatures(rng, 1 + trial % 40, 1 + trial % 5);
    const auto params = Params(t_dist(rng), t_dist(rng));
    const Indices sel = ExtractKeyframes(f, params);
    ASSERT_FALSE(sel.empty());
    ASSERT_EQ(sel.front(), 0);
    ASSERT_TRUE(std::adjacent_find(sel.begin(), sel.end(),
                                   std::greater_equal<>()) == sel.end());
    ASSERT_LT(sel.back(), f.frame_count());
    ASSERT_EQ(sel, ExtractKeyframes(f, params));
  }
}

// Only asserted on monotone planar drift with the diversity check disabled;
// see the decisions ledger for counterexamples on general sequences.
TEST(ExtractKeyframesTest, RaisingSceneThresholdOnDriftNeverShrinks) {
  Rng rng(5);
  std::uniform_real_distribution<double> t_dist(-0.5, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto f = testing::PlanarDriftFeatures(rng, 2 + trial % 60, 2 + trial % 4);
    double lo = t_dist(rng), hi = t_dist(rng);
    if (lo > hi) std::swap(lo, hi);
    const double t2 = 1.0 + 1e-9;
    const Indices a = ExtractKeyframes(f, Params(lo, t2));
    const Indices b = ExtractKeyframes(f, Params(hi, t2));
    ASSERT_EQ(a.front(), 0);
    ASSERT_EQ(b.front(), 0);
    ASSERT_LE(a.size(), b.size()) << "trial " << trial;
  }
}

TEST(SelectDiverseTest, IdenticalCandidatesTieToLowestIndex) {
  const auto f = FeaturesFromRows(std::vector(10, Basis(3, 2)));
  EXPECT_EQ(SelectDiverse(f, Indices{9, 8, 7, 6, 5, 4, 3, 2, 1, 0}, 3),
            (Indices{0, 1, 2}));
}

TEST(SelectDiverseTest, FarthestPoint) {
  const auto e1 = Basis(2, 0), e2 = Basis(2, 1);
  const auto f = FeaturesFromRows({e1, e1, e2});
  EXPECT_EQ(SelectDiverse(f, Indices{0, 1, 2}, 2), (Indices{0, 2}));
}

TEST(SelectDiverseTest, Saturation) {
  Rng rng(4);
  const auto f = testing::RandomUnitFeatures(rng, 12, 4);
  EXPECT_EQ(SelectDiverse(f, Indices{7, 3, 3, 11}, 5), (Indices{3, 7, 11}));
  EXPECT_EQ(SelectDiverse(f, Indices{7, 3, 11}, 3), (Indices{3, 7, 11}));
}

TEST(SelectDiverseTest, Errors) {
  const auto f = FeaturesFromRows({Basis(2, 0), Basis(2, 1)});
  EXPECT_THROW(SelectDiverse(f, Indices{}, 1), ValidationError);
  EXPECT_THROW(SelectDiverse(f, Indices{0, 1}, 0), ValidationError);
  EXPECT_THROW(SelectDiverse(f, Indices{0, 2}, 1), ValidationError);
}

TEST(SelectDiverseTest, SizeIsMinOfKAndCandidates) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int64_t n = 1 + trial % 30;
    const auto f = testing::RandomUnitFeatures(rng, n, 3);
    std::vector<int64_t> cands;
    for (int64_t i = 0; i < n; ++i) {
      if (rng() % 2 == 0) cands.push_back(i);
    }
    if (cands.empty()) cands.push_back(0);
    const int64_t k = 1 + static_cast<int64_t>(rng() % 12);
    const Indices out = SelectDiverse(f, cands, k);
    ASSERT_EQ(static_cast<int64_t>(out.size()),
              std::min<int64_t>(k, static_cast<int64_t>(cands.size())));
    ASSERT_TRUE(std::is_sorted(out.begin(), out.end()));
    for (int64_t i : out) {
      ASSERT_TRUE(std::find(cands.begin(), cands.end(), i) != cands.end());
    }
  }
}

TEST(ExtendDiverseTest, RespectsChosenSet) {
  const auto e1 = Basis(3, 0), e2 = Basis(3, 1), e3 = Basis(3, 2);
  const auto f = FeaturesFromRows({e1, e2, e3, e1});
  // With frame 0 chosen, frames 1 and 2 are equally far; the lower wins,
  // then frame 2 is farthest from {0, 1}.
  EXPECT_EQ(ExtendDiverse(f, Indices{0, 1, 2, 3}, Indices{0}, 2), (Indices{1, 2}));
}

}  // namespace
}  // namespace vidthinker
