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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpda/numeric.hpp"

namespace hpda {

/// A (K1, K2; M1, M2; N) two-layer system; memories in units of files.
struct SystemParams {
  int k1 = 0;
  int k2 = 0;
  int n_files = 0;
  Rational m1;
  Rational m2;
};

/// Throws ParameterError unless K1, K2, N >= 1 and 0 <= M1, M2 <= N.
void validate(const SystemParams& p);

struct SplitPoint {
  Rational alpha;
  Rational beta;
  friend bool operator==(const SplitPoint&, const SplitPoint&) = default;
};

struct LoadPair {
  Rational r1;
  Rational r2;
  friend bool operator==(const LoadPair&, const LoadPair&) = default;
};

/// Single-layer MN load at memory ratio m: (K - t)/(t + 1) at m = t/K and
/// linear between neighbouring lattice points. Throws ParameterError for m
/// outside [0, 1] or K < 1.
Rational r_c(const Rational& m, int k);

/// Baseline in which mirrors rebuild whole files: the alpha part goes through
/// the mirrors with K2 copies of a K1-user MN load, the rest is served
/// directly to all K1K2 users.
LoadPair knmd_loads(const SystemParams& p, const SplitPoint& s);

/// Like knmd_loads, but the first-layer alpha term multiplies the two MN loads
/// instead of scaling by K2.
LoadPair wwcy_loads(const SystemParams& p, const SplitPoint& s);

enum class Baseline { Knmd, Wwcy };

struct SearchResult {
  SplitPoint point;
  LoadPair loads;
};

/// Exhaustive search over alpha, beta in {0, step, 2 step, ..., 1} (1 is
/// always included). Minimizes R1, then R2, then (alpha, beta).
SearchResult search_min_r1(Baseline b, const SystemParams& p, const Rational& grid_step);

/// r_c((M1 + M2)/N, K1K2).
Rational lower_bound_r1(const SystemParams& p);

/// r_c(M2/N, K2).
Rational optimal_r2(const SystemParams& p);

struct ComparisonRow {
  std::string scheme;
  int t = 0;
  Rational m1_ratio;
  Rational m2_ratio;
  std::optional<Rational> r1;
  std::optional<Rational> r2;
  std::optional<BigInt> f;
  std::optional<SplitPoint> split;
  bool feasible = true;
  std::string note;
};

/// For each t (K2 < t < K1K2), the grouping construction's memory ratios and
/// rows for: grouping, hybrid-mn (hybrid construction with MN inputs at the
/// same ratios, infeasible when they are not MN lattice points), knmd and wwcy
/// at alpha = beta = 1, knmd-opt and wwcy-opt when `grid_step` is given, and
/// bound (lower_bound_r1 with optimal_r2). Sorted by t, then by that order.
/// Points are evaluated concurrently when `parallel` is set.
std::vector<ComparisonRow> compare_sweep(int k1, int k2, int n_files, const std::vector<int>& ts,
                                         const std::optional<Rational>& grid_step = std::nullopt,
                                         bool parallel = true);

}  // namespace hpda
