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

#include "hpda/analysis.hpp"

#include <algorithm>
#include <future>
#include <tuple>

#include "hpda/constructions.hpp"
#include "hpda/errors.hpp"

namespace hpda {

namespace {

Rational clamp_unit(const Rational& x) { return x > 1 ? Rational(1) : x; }

Rational mn_lattice_load(int k, int t) { return ratio(k - t, t + 1); }

struct Terms {
  Rational alpha;
  Rational rest;
  Rational mirror_ratio;  // M1 / (alpha N)
  Rational user_first;    // beta M2 / (alpha N)
  Rational user_second;   // (1 - beta) M2 / ((1 - alpha) N)
};

Terms split_terms(const SystemParams& p, const SplitPoint& s) {
  validate(p);
  if (s.alpha < 0 || s.alpha > 1 || s.beta < 0 || s.beta > 1) {
    throw ParameterError("alpha and beta must lie in [0, 1]");
  }
  const Rational n = p.n_files;
  Terms t{s.alpha, 1 - s.alpha, 0, 0, 0};
  if (t.alpha != 0) {
    t.mirror_ratio = clamp_unit(p.m1 / (t.alpha * n));
    t.user_first = clamp_unit(s.beta * p.m2 / (t.alpha * n));
  }
  if (t.rest != 0) t.user_second = clamp_unit((1 - s.beta) * p.m2 / (t.rest * n));
  return t;
}

Rational second_layer(const SystemParams& p, const Terms& t) {
  Rational r = 0;
  if (t.alpha != 0) r += t.alpha * r_c(t.user_first, p.k2);
  if (t.rest != 0) r += t.rest * r_c(t.user_second, p.k2);
  return r;
}

std::vector<Rational> grid(const Rational& step) {
  if (step <= 0 || step > 1) throw ParameterError("grid step must lie in (0, 1]");
  std::vector<Rational> out;
  for (Rational x = 0; x < 1; x += step) out.push_back(x);
  out.push_back(1);
  return out;
}

std::vector<ComparisonRow> rows_for_t(int k1, int k2, int n_files, int t,
                                      const std::optional<Rational>& grid_step) {
  const SchemeParams g = grouping_params(k1, k2, t);
  const Rational m1 = g.loads.m1_ratio;
  const Rational m2 = g.loads.m2_ratio;
  const SystemParams sys{k1, k2, n_files, m1 * n_files, m2 * n_files};
  std::vector<ComparisonRow> rows;
  auto row = [&](std::string scheme) {
    ComparisonRow r;
    r.scheme = std::move(scheme);
    r.t = t;
    r.m1_ratio = m1;
    r.m2_ratio = m2;
    return r;
  };

  ComparisonRow grouping = row("grouping");
  grouping.r1 = g.loads.r1;
  grouping.r2 = g.loads.r2;
  grouping.f = g.loads.f;
  rows.push_back(std::move(grouping));

  ComparisonRow hybrid = row("hybrid-mn");
  const Rational t1 = m1 * k1;
  const Rational t2 = m2 * k2;
  if (denominator(t1) == 1 && denominator(t2) == 1 && t1 >= 1 && t2 >= 1) {
    const int a = numerator(t1).convert_to<int>();
    const int b = numerator(t2).convert_to<int>();
    const auto mn = [](int k, int tt) {
      return PdaParams{k, static_cast<int>(binomial_u64(k, tt)),
                       static_cast<int>(binomial_u64(k - 1, tt - 1)),
                       static_cast<int>(binomial_u64(k, tt + 1))};
    };
    const SchemeParams h = hybrid_params(mn(k1, a), mn(k2, b));
    hybrid.r1 = h.loads.r1;
    hybrid.r2 = h.loads.r2;
    hybrid.f = h.loads.f;
  } else {
    hybrid.feasible = false;
    hybrid.note = "M1/N*K1=" + to_fraction_string(t1) + ", M2/N*K2=" + to_fraction_string(t2) +
                  " are not MN memory levels >= 1";
  }
  rows.push_back(std::move(hybrid));

  const SplitPoint corner{1, 1};
  const LoadPair knmd = knmd_loads(sys, corner);
  const LoadPair wwcy = wwcy_loads(sys, corner);
  for (const auto& [name, loads] : {std::pair{"knmd", knmd}, std::pair{"wwcy", wwcy}}) {
    ComparisonRow r = row(name);
    r.r1 = loads.r1;
    r.r2 = loads.r2;
    r.split = corner;
    rows.push_back(std::move(r));
  }
  if (grid_step) {
    for (const auto& [name, b] :
         {std::pair{"knmd-opt", Baseline::Knmd}, std::pair{"wwcy-opt", Baseline::Wwcy}}) {
      const SearchResult best = search_min_r1(b, sys, *grid_step);
      ComparisonRow r = row(name);
      r.r1 = best.loads.r1;
      r.r2 = best.loads.r2;
      r.split = best.point;
      rows.push_back(std::move(r));
    }
  }

  ComparisonRow bound = row("bound");
  bound.r1 = lower_bound_r1(sys);
  bound.r2 = optimal_r2(sys);
  rows.push_back(std::move(bound));
  return rows;
}

}  // namespace

void validate(const SystemParams& p) {
  if (p.k1 < 1 || p.k2 < 1 || p.n_files < 1) {
    throw ParameterError("K1, K2 and N must be positive");
  }
  if (p.m1 < 0 || p.m1 > p.n_files || p.m2 < 0 || p.m2 > p.n_files) {
    throw ParameterError("memory sizes must lie in [0, N]");
  }
}

Rational r_c(const Rational& m, int k) {
  if (k < 1) throw ParameterError("r_c needs K >= 1");
  if (m < 0 || m > 1) {
    throw ParameterError("memory ratio " + to_fraction_string(m) + " outside [0, 1]");
  }
  const Rational position = m * k;
  const int t = floor(position).convert_to<int>();
  if (t >= k) return 0;
  const Rational lo = mn_lattice_load(k, t);
  const Rational hi = mn_lattice_load(k, t + 1);
  return lo + (position - t) * (hi - lo);
}

LoadPair knmd_loads(const SystemParams& p, const SplitPoint& s) {
  const Terms t = split_terms(p, s);
  const int users = p.k1 * p.k2;
  Rational r1 = 0;
  if (t.alpha != 0) r1 += t.alpha * p.k2 * r_c(t.mirror_ratio, p.k1);
  if (t.rest != 0) r1 += t.rest * r_c(t.user_second, users);
  return {r1, second_layer(p, t)};
}

LoadPair wwcy_loads(const SystemParams& p, const SplitPoint& s) {
  const Terms t = split_terms(p, s);
  const int users = p.k1 * p.k2;
  Rational r1 = 0;
  if (t.alpha != 0) r1 += t.alpha * r_c(t.mirror_ratio, p.k1) * r_c(t.user_first, p.k2);
  if (t.rest != 0) r1 += t.rest * r_c(t.user_second, users);
  return {r1, second_layer(p, t)};
}

SearchResult search_min_r1(Baseline b, const SystemParams& p, const Rational& grid_step) {
  validate(p);
  const std::vector<Rational> points = grid(grid_step);
  std::optional<SearchResult> best;
  for (const Rational& alpha : points) {
    for (const Rational& beta : points) {
      const SplitPoint s{alpha, beta};
      const LoadPair loads = b == Baseline::Knmd ? knmd_loads(p, s) : wwcy_loads(p, s);
      // Points are visited in lexicographic (alpha, beta) order, so strict
      // comparison keeps the earliest tie.
      if (!best || std::tie(loads.r1, loads.r2) < std::tie(best->loads.r1, best->loads.r2)) {
        best = SearchResult{s, loads};
      }
    }
  }
  return *best;
}

Rational lower_bound_r1(const SystemParams& p) {
  validate(p);
  const Rational total = (p.m1 + p.m2) / p.n_files;
  if (total > 1) throw ParameterError("(M1 + M2)/N exceeds 1");
  return r_c(total, p.k1 * p.k2);
}

Rational optimal_r2(const SystemParams& p) {
  validate(p);
  return r_c(p.m2 / p.n_files, p.k2);
}

std::vector<ComparisonRow> compare_sweep(int k1, int k2, int n_files, const std::vector<int>& ts,
                                         const std::optional<Rational>& grid_step, bool parallel) {
  std::vector<int> sorted = ts;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int t : sorted) grouping_params(k1, k2, t);  // range check before any work

  std::vector<std::vector<ComparisonRow>> per_t(sorted.size());
  if (parallel && sorted.size() > 1) {
    std::vector<std::future<std::vector<ComparisonRow>>> jobs;
    for (int t : sorted) {
      jobs.push_back(std::async(std::launch::async, rows_for_t, k1, k2, n_files, t, grid_step));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) per_t[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      per_t[i] = rows_for_t(k1, k2, n_files, sorted[i], grid_step);
    }
  }

  std::vector<ComparisonRow> out;
  for (auto& rows : per_t) {
    for (auto& r : rows) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hpda
