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

#include "hpda/analysis.hpp"
#include "hpda/constructions.hpp"
#include "hpda/errors.hpp"
#include "test_support.hpp"

namespace hpda {
namespace {

const SystemParams kExample{3, 2, 6, parse_rational("2.4"), parse_rational("1.6")};

TEST(Rc, LatticeAndEndpoints) {
  EXPECT_EQ(r_c(1, 5), 0);
  EXPECT_EQ(r_c(0, 5), 5);
  EXPECT_EQ(r_c(ratio(1, 3), 3), 1);
  for (int k = 1; k <= 8; ++k) {
    for (int t = 0; t <= k; ++t) EXPECT_EQ(r_c(ratio(t, k), k), ratio(k - t, t + 1));
  }
}

TEST(Rc, InterpolatesBetweenLatticePoints) {
  // m = 4/15 with K = 2 lies between t = 0 (load 2) and t = 1 (load 1/2).
  const Rational m = ratio(4, 15);
  EXPECT_EQ(r_c(m, 2), 2 + (m * 2) * (ratio(1, 2) - 2));
  EXPECT_THROW(r_c(ratio(-1, 10), 3), ParameterError);
  EXPECT_THROW(r_c(ratio(11, 10), 3), ParameterError);
}

TEST(Rc, NonIncreasing) {
  for (int k : {1, 3, 6}) {
    Rational prev = r_c(0, k);
    for (int i = 1; i <= 100; ++i) {
      const Rational cur = r_c(ratio(i, 100), k);
      EXPECT_LE(cur, prev);
      prev = cur;
    }
  }
}

TEST(Baselines, CornerCases) {
  const LoadPair k11 = knmd_loads(kExample, {1, 1});
  EXPECT_EQ(k11.r1, 2 * r_c(ratio(2, 5), 3));
  EXPECT_EQ(k11.r2, r_c(ratio(4, 15), 2));
  const LoadPair w11 = wwcy_loads(kExample, {1, 1});
  EXPECT_EQ(w11.r1, r_c(ratio(2, 5), 3) * r_c(ratio(4, 15), 2));
  const LoadPair k00 = knmd_loads(kExample, {0, 0});
  EXPECT_EQ(k00.r1, r_c(ratio(4, 15), 6));
  EXPECT_EQ(wwcy_loads(kExample, {0, 0}).r1, k00.r1);
}

TEST(Baselines, SecondLayerSharedOnGrid) {
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      const SplitPoint s{ratio(a, 10), ratio(b, 10)};
      EXPECT_EQ(knmd_loads(kExample, s).r2, wwcy_loads(kExample, s).r2);
    }
  }
}

TEST(Baselines, RejectBadInputs) {
  EXPECT_THROW(knmd_loads(kExample, {ratio(3, 2), 0}), ParameterError);
  SystemParams too_big = kExample;
  too_big.m1 = 7;
  EXPECT_THROW(wwcy_loads(too_big, {1, 1}), ParameterError);
}

TEST(Search, StepOneVisitsCorners) {
  const SearchResult r = search_min_r1(Baseline::Wwcy, kExample, 1);
  Rational best = -1;
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      const Rational r1 = wwcy_loads(kExample, {a, b}).r1;
      if (best < 0 || r1 < best) best = r1;
    }
  }
  EXPECT_EQ(r.loads.r1, best);
  EXPECT_THROW(search_min_r1(Baseline::Knmd, kExample, 0), ParameterError);
  EXPECT_THROW(search_min_r1(Baseline::Knmd, kExample, 2), ParameterError);
}

TEST(Search, ImprovedBaselineNoWorse) {
  for (const Rational& step : {ratio(1, 10), ratio(1, 20)}) {
    EXPECT_LE(search_min_r1(Baseline::Wwcy, kExample, step).loads.r1,
              search_min_r1(Baseline::Knmd, kExample, step).loads.r1);
  }
}

TEST(Search, WwcyNearReportedValue) {
  const SearchResult r = search_min_r1(Baseline::Wwcy, kExample, ratio(1, 100));
  const double r1 = r.loads.r1.convert_to<double>();
  EXPECT_NEAR(r1, 0.55, 0.05);
}

TEST(Bounds, LowerBoundAndOptimalSecondLayer) {
  EXPECT_EQ(lower_bound_r1(kExample), ratio(2, 5));
  EXPECT_EQ(lower_bound_r1({3, 2, 6, 3, 3}), 0);
  EXPECT_EQ(lower_bound_r1({3, 2, 6, 0, 0}), 6);
  EXPECT_THROW(lower_bound_r1({3, 2, 6, 4, 3}), ParameterError);
  EXPECT_EQ(optimal_r2({3, 2, 15, 6, 4}), r_c(ratio(4, 15), 2));
  EXPECT_EQ(optimal_r2({3, 2, 6, 0, 6}), 0);
  EXPECT_EQ(optimal_r2({3, 2, 6, 0, 0}), 2);
}

TEST(Bounds, GroupingMeetsLowerBoundAndExceedsOptimalR2) {
  for (const auto& g : testing::grouping_sweep(10)) {
    const SchemeParams p = grouping_params(g.k1, g.k2, g.t);
    const SystemParams sys{g.k1, g.k2, 1, p.loads.m1_ratio, p.loads.m2_ratio};
    EXPECT_EQ(lower_bound_r1(sys), p.loads.r1);
    EXPECT_GE(p.loads.r2, optimal_r2(sys));
  }
}

TEST(Bounds, HybridMnMatchesWwcyCorner) {
  for (int k1 = 2; k1 <= 4; ++k1) {
    for (int t1 = 1; t1 < k1; ++t1) {
      for (int k2 = 2; k2 <= 4; ++k2) {
        for (int t2 = 1; t2 < k2; ++t2) {
          const SchemeParams h = hybrid_params(mn_pda(k1, t1).params(), mn_pda(k2, t2).params());
          const SystemParams sys{k1, k2, 1, ratio(t1, k1), ratio(t2, k2)};
          EXPECT_EQ(h.loads.r1, r_c(ratio(t1, k1), k1) * r_c(ratio(t2, k2), k2));
          EXPECT_EQ(h.loads.r1, wwcy_loads(sys, {1, 1}).r1);
          EXPECT_EQ(h.loads.r2, wwcy_loads(sys, {1, 1}).r2);
        }
      }
    }
  }
}

TEST(CompareSweep, FifteenRowPoint) {
  const auto rows = compare_sweep(3, 2, 6, {4}, ratio(1, 10));
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0].scheme, "grouping");
  EXPECT_EQ(*rows[0].r1, ratio(2, 5));
  EXPECT_EQ(*rows[0].r2, ratio(6, 5));
  EXPECT_EQ(*rows[0].f, 15);
  EXPECT_EQ(rows[1].scheme, "hybrid-mn");
  EXPECT_FALSE(rows[1].feasible);
  EXPECT_EQ(rows[6].scheme, "bound");
  EXPECT_EQ(*rows[6].r1, ratio(2, 5));
}

TEST(CompareSweep, EmptyAndOrdering) {
  EXPECT_TRUE(compare_sweep(3, 2, 6, {}).empty());
  const auto rows = compare_sweep(3, 3, 9, {8, 4, 6}, std::nullopt, true);
  const auto serial = compare_sweep(3, 3, 9, {4, 6, 8}, std::nullopt, false);
  ASSERT_EQ(rows.size(), serial.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].scheme, serial[i].scheme);
    EXPECT_EQ(rows[i].t, serial[i].t);
    EXPECT_EQ(rows[i].r1, serial[i].r1);
  }
  EXPECT_EQ(rows.front().t, 4);
  EXPECT_THROW(compare_sweep(3, 2, 6, {2}), ParameterError);
}

TEST(CompareSweep, FeasibleHybridRow) {
  // K1 = 2, K2 = 3, t = 5: M1/N = 1/2 and M2/N = 1/3 are MN memory levels.
  const auto rows = compare_sweep(2, 3, 6, {5});
  ASSERT_EQ(rows[1].scheme, "hybrid-mn");
  EXPECT_TRUE(rows[1].feasible);
  EXPECT_EQ(*rows[1].r1, wwcy_loads({2, 3, 6, 3, 2}, {1, 1}).r1);
  EXPECT_EQ(*rows[1].f, 2 * 3);
}

}  // namespace
}  // namespace hpda
