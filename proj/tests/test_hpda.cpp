// Copyright 2026 The HPDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "hpda/constructions.hpp"
#include "hpda/errors.hpp"
#include "hpda/hpda.hpp"
#include "test_support.hpp"

namespace hpda {
namespace {

IntegerSet range(int lo, int hi) {
  IntegerSet s;
  for (int v = lo; v <= hi; ++v) s.insert(v);
  return s;
}

IntegerSet join(IntegerSet a, const IntegerSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

TEST(Grouping, ReproducesFifteenRowGolden) {
  const Hpda h = build_grouping_hpda(3, 2, 4);
  const Hpda golden = testing::data_hpda("grouping_k3_k2_t4.hpda");
  EXPECT_EQ(h.mirror(), golden.mirror());
  for (int b = 0; b < 3; ++b) EXPECT_EQ(h.block(b).cells(), golden.block(b).cells()) << b;
  EXPECT_EQ(h.params(), (HpdaParams{3, 2, 15, 6, 4}));
  EXPECT_EQ(h.mirror_only(), range(7, 42));
  EXPECT_EQ(h.block_set(0), range(1, 18));
  EXPECT_EQ(h.block_set(1), join(range(1, 6), range(19, 30)));
  EXPECT_EQ(h.block_set(2), join(range(1, 6), range(31, 42)));
}

TEST(Grouping, LoadedGoldenDerivesSameSets) {
  const Hpda golden = testing::data_hpda("grouping_k3_k2_t4.hpda");
  EXPECT_EQ(golden, build_grouping_hpda(3, 2, 4));
  EXPECT_TRUE(verify_hpda(golden).valid());
}

TEST(Grouping, ClosedFormsForFifteenRowExample) {
  const SchemeParams p = grouping_params(3, 2, 4);
  EXPECT_EQ(p.loads.f, 15);
  EXPECT_EQ(p.z1, 6);
  EXPECT_EQ(p.z2, 4);
  EXPECT_EQ(p.loads.r1, ratio(2, 5));
  EXPECT_EQ(p.loads.r2, ratio(6, 5));
  EXPECT_EQ(p.loads.m1_ratio, ratio(2, 5));
  EXPECT_EQ(p.loads.m2_ratio, ratio(4, 15));
  EXPECT_EQ(loads_from_hpda(build_grouping_hpda(3, 2, 4)), p.loads);
}

TEST(Grouping, RejectsOutOfRangeT) {
  EXPECT_THROW(build_grouping_hpda(3, 2, 2), ParameterError);
  EXPECT_THROW(build_grouping_hpda(3, 2, 6), ParameterError);
  EXPECT_THROW(grouping_params(1, 2, 3), ParameterError);
}

TEST(Grouping, SmallSweepVerifiesAndMatchesFormulas) {
  for (const auto& g : testing::grouping_sweep(10)) {
    SCOPED_TRACE(std::to_string(g.k1) + "," + std::to_string(g.k2) + "," + std::to_string(g.t));
    const Hpda h = build_grouping_hpda(g.k1, g.k2, g.t);
    EXPECT_TRUE(verify_hpda(h).valid());
    const SchemeParams p = grouping_params(g.k1, g.k2, g.t);
    EXPECT_EQ(loads_from_hpda(h), p.loads);
    EXPECT_EQ(h.params().z1, p.z1);
    EXPECT_EQ(h.params().z2, p.z2);
  }
}

TEST(Hybrid, ReproducesSixRowGolden) {
  const Pda a = testing::data_pda("mn_k2_t1.pda");
  const Pda b = testing::data_pda("hybrid_inner_k3_t1.pda");
  const Hpda h = build_hybrid_hpda(a, b);
  const Hpda golden = testing::data_hpda("hybrid_k2_k3.hpda");
  EXPECT_EQ(h.mirror(), golden.mirror());
  for (int k = 0; k < 2; ++k) EXPECT_EQ(h.block(k).cells(), golden.block(k).cells()) << k;
  const Pda shifted3 = pda_shift(b, 3);
  const Pda shifted6 = pda_shift(b, 6);
  const std::vector<Pda> first{shifted3, b};
  const std::vector<Pda> second{b, shifted6};
  std::vector<Entry> stacked;
  for (const Pda& p : first) stacked.insert(stacked.end(), p.cells().begin(), p.cells().end());
  EXPECT_EQ(h.block(0).cells(), stacked);
  stacked.clear();
  for (const Pda& p : second) stacked.insert(stacked.end(), p.cells().begin(), p.cells().end());
  EXPECT_EQ(h.block(1).cells(), stacked);

  EXPECT_EQ(h.params(), (HpdaParams{2, 3, 6, 3, 2}));
  EXPECT_EQ(h.mirror_only(), range(4, 9));
  EXPECT_EQ(h.block_set(0), range(1, 6));
  EXPECT_EQ(h.block_set(1), join(range(1, 3), range(7, 9)));
  EXPECT_TRUE(verify_hpda(h).valid());
  EXPECT_EQ(golden, h);
}

TEST(Hybrid, ClosedFormsMatchArray) {
  const Pda a = testing::data_pda("mn_k2_t1.pda");
  const Pda b = testing::data_pda("hybrid_inner_k3_t1.pda");
  const SchemeParams p = hybrid_params(a.params(), b.params());
  EXPECT_EQ(p.loads.f, 6);
  EXPECT_EQ(p.loads.r1, ratio(1, 2));
  EXPECT_EQ(p.loads.r2, Rational(1));
  EXPECT_EQ(p.z1, 3);
  EXPECT_EQ(p.z2, 2);
  EXPECT_EQ(loads_from_hpda(build_hybrid_hpda(a, b)), p.loads);
}

TEST(Hybrid, LargerMnInputs) {
  const Pda a = mn_pda(3, 2);
  const Pda b = mn_pda(4, 2);
  const Hpda h = build_hybrid_hpda(a, b);
  EXPECT_TRUE(verify_hpda(h).valid());
  EXPECT_EQ(loads_from_hpda(h), hybrid_params(a.params(), b.params()).loads);
  EXPECT_TRUE(check_inner_array_disjointness(a, b));
}

TEST(Hybrid, RejectsInvalidInputs) {
  const Pda good = mn_pda(3, 1);
  const Pda broken(3, 3, testing::grid({{0, 1, 1}, {1, 0, 3}, {2, 3, 0}}), {3, 3, 1, 3});
  EXPECT_THROW(build_hybrid_hpda(broken, good), InvalidArtifactError);
  EXPECT_THROW(build_hybrid_hpda(good, broken), InvalidArtifactError);
  // Valid but not over [1..S].
  EXPECT_THROW(build_hybrid_hpda(pda_shift(good, 2), good), InvalidArtifactError);
}

TEST(InnerDisjointness, HoldsForSmallMnPairs) {
  for (int ka = 2; ka <= 4; ++ka) {
    for (int ta = 1; ta < ka; ++ta) {
      for (int kb = 2; kb <= 4; ++kb) {
        for (int tb = 1; tb < kb; ++tb) {
          EXPECT_TRUE(check_inner_array_disjointness(mn_pda(ka, ta), mn_pda(kb, tb)));
        }
      }
    }
  }
}

TEST(VerifyHpda, DeletedMirrorStarIsFlagged) {
  const Hpda golden = testing::data_hpda("grouping_k3_k2_t4.hpda");
  std::vector<bool> stars;
  for (int r = 0; r < 15; ++r) {
    for (int k = 0; k < 3; ++k) stars.push_back(golden.mirror().is_star(r, k));
  }
  stars[0] = false;  // row 1, mirror 1
  const Hpda broken(MirrorPlacement(15, 3, stars), golden.blocks(), golden.params(),
                    golden.mirror_only(), golden.block_sets());
  const HpdaReport r = verify_hpda(broken);
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(r.has(HpdaCondition::B1));
  EXPECT_TRUE(r.has(HpdaCondition::B3));
}

TEST(VerifyHpda, MirrorLabelInTwoBlocksBreaksB3) {
  const Hpda golden = build_grouping_hpda(3, 2, 4);
  std::vector<Pda> blocks = golden.blocks();
  std::vector<Entry> cells = blocks[1].cells();
  // Row 1, user (2,1) holds 19; put mirror-1's label 7 there instead.
  cells[0] = Entry::integer(7);
  blocks[1] = Pda::from_grid(15, 2, cells);
  const Hpda broken(golden.mirror(), blocks, golden.params(), golden.mirror_only(),
                    golden.block_sets());
  EXPECT_TRUE(verify_hpda(broken).has(HpdaCondition::B3));
}

TEST(VerifyHpda, UncachedCrossBlockPairBreaksB4) {
  // Two mirrors, one user each; integer 1 shared across blocks at rows the
  // other mirror does not cache.
  const Hpda h(MirrorPlacement(2, 2, {false, false, false, false}),
               {testing::pda_from_rows({{1}, {0}}), testing::pda_from_rows({{0}, {1}})},
               HpdaParams{2, 1, 2, 0, 1}, {}, {IntegerSet{1}, IntegerSet{1}});
  // Block 1 row 2 is a star, so the pair is fine from block 1's side, but
  // block 2 row 1 is also a star: valid as a plain PDA over the two users.
  EXPECT_TRUE(verify_hpda(h).valid());

  const Hpda bad(MirrorPlacement(2, 2, {false, false, false, false}),
                 {testing::pda_from_rows({{1}, {2}}), testing::pda_from_rows({{2}, {1}})},
                 HpdaParams{2, 1, 2, 0, 0}, {}, {IntegerSet{1, 2}, IntegerSet{1, 2}});
  EXPECT_TRUE(verify_hpda(bad).has(HpdaCondition::B4));
}

TEST(LoadsFromHpda, RejectsInvalidArray) {
  const Hpda bad(MirrorPlacement(1, 1, {false}), {testing::pda_from_rows({{1}})},
                 HpdaParams{1, 1, 1, 1, 0}, {}, {IntegerSet{1}});
  EXPECT_THROW(loads_from_hpda(bad), InvalidArtifactError);
}

TEST(Hpda, ShapeChecks) {
  EXPECT_THROW(MirrorPlacement(2, 2, {true}), DimensionError);
  EXPECT_THROW(Hpda(MirrorPlacement(2, 1, {true, false}), {testing::pda_from_rows({{1}})},
                    HpdaParams{1, 1, 2, 1, 0}, {}, {IntegerSet{1}}),
               DimensionError);
}

}  // namespace
}  // namespace hpda
