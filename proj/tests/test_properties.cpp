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

// Seeded randomized checks. Generators are plain std::mt19937_64 draws so
// every failure reproduces from the printed seed.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hpda/cache_sim.hpp"
#include "hpda/constructions.hpp"
#include "hpda/io.hpp"
#include "hpda/subset_indexer.hpp"
#include "test_support.hpp"

namespace hpda {
namespace {

constexpr std::uint64_t kSeed = 20261015;

DemandVector random_distinct_demand(int k1, int k2, int n_files, std::mt19937_64& rng) {
  std::vector<int> files(static_cast<std::size_t>(n_files));
  std::iota(files.begin(), files.end(), 0);
  std::shuffle(files.begin(), files.end(), rng);
  files.resize(static_cast<std::size_t>(k1) * k2);
  return DemandVector{k1, k2, files};
}

std::vector<std::size_t> signal_counts(const Transcript& t) {
  std::vector<std::size_t> out{t.server.size()};
  for (const auto& m : t.mirrors) out.push_back(m.size());
  return out;
}

TEST(Property, RandomSubsetRoundTrip) {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 30)(rng);
    const int r = std::uniform_int_distribution<int>(0, k)(rng);
    const SubsetIndexer idx(k, r);
    const std::uint64_t rank = std::uniform_int_distribution<std::uint64_t>(1, idx.count())(rng);
    const auto subset = idx.unrank(rank);
    ASSERT_EQ(idx.rank(subset), rank) << "K=" << k << " r=" << r;
  }
}

TEST(Property, ShiftKeepsPatternAndValidity) {
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    const int t = std::uniform_int_distribution<int>(1, k - 1)(rng);
    const int a = std::uniform_int_distribution<int>(0, 1000)(rng);
    const Pda p = mn_pda(k, t);
    const Pda q = pda_shift(p, a);
    ASSERT_TRUE(verify_pda(q).valid());
    for (std::size_t i = 0; i < p.cells().size(); ++i) {
      ASSERT_EQ(p.cells()[i].is_star(), q.cells()[i].is_star());
    }
  }
}

TEST(Property, TextRoundTripOfRandomHybrids) {
  for (const auto& m : testing::random_mn_pairs(15, 4, kSeed + 2)) {
    const Hpda h = build_hybrid_hpda(mn_pda(m.ka, m.ta), mn_pda(m.kb, m.tb));
    ASSERT_EQ(parse_hpda(format_hpda(h)), h);
  }
}

TEST(Property, HybridLoadsAgreeAcrossFormulaArrayAndSimulation) {
  std::mt19937_64 rng(kSeed + 3);
  for (const auto& m : testing::random_mn_pairs(20, 4, kSeed + 3)) {
    const Pda a = mn_pda(m.ka, m.ta);
    const Pda b = mn_pda(m.kb, m.tb);
    const Hpda h = build_hybrid_hpda(a, b);
    SCOPED_TRACE("A=MN(" + std::to_string(m.ka) + "," + std::to_string(m.ta) + ") B=MN(" +
                 std::to_string(m.kb) + "," + std::to_string(m.tb) + ")");
    ASSERT_TRUE(verify_hpda(h).valid());
    const SchemeLoads formula = hybrid_params(a.params(), b.params()).loads;
    ASSERT_EQ(loads_from_hpda(h), formula);
    const int n = m.ka * m.kb + std::uniform_int_distribution<int>(0, 3)(rng);
    const SimulationResult r =
        simulate(h, n, 4, random_distinct_demand(m.ka, m.kb, n, rng), rng());
    ASSERT_TRUE(r.success);
    EXPECT_EQ(r.transcript.r1(), formula.r1);
    EXPECT_EQ(r.transcript.r2(), formula.r2);
  }
}

TEST(Property, SignalCountsMatchIntegerSets) {
  for (const auto& g : testing::grouping_sweep(8)) {
    const Hpda h = build_grouping_hpda(g.k1, g.k2, g.t);
    const int n = g.k1 * g.k2;
    const SimulationResult r = simulate(h, n, 2, worst_case_demand(g.k1, g.k2, n), 1);
    ASSERT_TRUE(r.success);
    EXPECT_EQ(r.transcript.server.size(), h.server_integers().size());
    for (int k = 0; k < g.k1; ++k) {
      EXPECT_EQ(r.transcript.mirrors[k].size(), h.block_set(k).size());
    }
  }
}

TEST(Property, LoadsDoNotDependOnWhichDistinctFilesAreRequested) {
  std::mt19937_64 rng(kSeed + 4);
  const Hpda h = build_grouping_hpda(2, 3, 4);
  const auto base = signal_counts(simulate(h, 6, 2, worst_case_demand(2, 3, 6), 1).transcript);
  for (int trial = 0; trial < 20; ++trial) {
    const DemandVector d = random_distinct_demand(2, 3, 9, rng);
    const SimulationResult r = simulate(h, 9, 2, d, rng());
    ASSERT_TRUE(r.success);
    EXPECT_EQ(signal_counts(r.transcript), base);
  }
}

TEST(Property, RepeatedDemandsStillDecode) {
  std::mt19937_64 rng(kSeed + 5);
  const Hpda h = build_hybrid_hpda(mn_pda(3, 1), mn_pda(3, 2));
  for (int trial = 0; trial < 20; ++trial) {
    DemandVector d{3, 3, {}};
    for (int i = 0; i < 9; ++i) d.files.push_back(std::uniform_int_distribution<int>(0, 2)(rng));
    ASSERT_TRUE(simulate(h, 3, 3, d, rng()).success);
  }
}

}  // namespace
}  // namespace hpda
