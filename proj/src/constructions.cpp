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

#include "hpda/constructions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hpda/errors.hpp"
#include "hpda/numeric.hpp"
#include "hpda/subset_indexer.hpp"

namespace hpda {

namespace {

IntegerSet closed_range(long long lo, long long hi) {
  IntegerSet out;
  for (long long s = lo; s <= hi; ++s) out.insert(static_cast<int>(s));
  return out;
}

void require_range(int k1, int k2, int t) {
  if (k1 < 1 || k2 < 1) {
    throw ParameterError("K1 and K2 must be positive");
  }
  if (!(k2 < t && t < k1 * k2)) {
    throw ParameterError("grouping construction needs K2 < t < K1*K2, got K1=" +
                         std::to_string(k1) + " K2=" + std::to_string(k2) +
                         " t=" + std::to_string(t));
  }
}

void require_pda(const Pda& p, const char* role) {
  const VerificationReport report = verify_pda(p);
  if (!report.valid()) {
    throw InvalidArtifactError(std::string(role) + " PDA fails " +
                               to_string(report.violations.front().condition) + ": " +
                               report.violations.front().message);
  }
  const IntegerSet present = p.integers();
  if (!present.empty() && (*present.begin() != 1 || *present.rbegin() != p.params().s)) {
    throw InvalidArtifactError(std::string(role) + " PDA must use the integers 1.." +
                               std::to_string(p.params().s));
  }
}

IntegerSet shifted_integers(const Pda& p, long long offset) {
  IntegerSet out;
  for (int s : p.integers()) out.insert(static_cast<int>(s + offset));
  return out;
}

// Offset applied to B for the star at (row, col) of the outer array.
long long star_offset(const PdaParams& a, const PdaParams& b, int col, int order) {
  return (static_cast<long long>(col) * a.z + order - 1 + a.s) * b.s;
}

// 1-based order of each star within its column, 0 for integer cells.
std::vector<std::vector<int>> star_orders(const Pda& a) {
  std::vector<std::vector<int>> order(static_cast<std::size_t>(a.rows()),
                                      std::vector<int>(static_cast<std::size_t>(a.cols()), 0));
  for (int c = 0; c < a.cols(); ++c) {
    int n = 0;
    for (int r = 0; r < a.rows(); ++r) {
      if (a.at(r, c).is_star()) order[r][c] = ++n;
    }
  }
  return order;
}

void assert_sets(const Hpda& built, const IntegerSet& expected_m,
                 const std::vector<IntegerSet>& expected_blocks, const char* who) {
  if (built.mirror_only() != expected_m) {
    throw std::logic_error(std::string(who) + ": S_m differs from its closed form");
  }
  for (std::size_t k = 0; k < expected_blocks.size(); ++k) {
    if (built.block_set(static_cast<int>(k)) != expected_blocks[k]) {
      throw std::logic_error(std::string(who) + ": S_" + std::to_string(k + 1) +
                             " differs from its closed form");
    }
  }
}

}  // namespace

Hpda build_grouping_hpda(int k1, int k2, int t) {
  require_range(k1, k2, t);
  const int users = k1 * k2;
  const Pda q = mn_pda(users, t);
  const int f = q.rows();
  const int s = q.params().s;
  std::vector<Pda> parts = column_partition(q, k1);

  std::vector<bool> mirror(static_cast<std::size_t>(f) * k1, false);
  std::vector<Pda> blocks;
  blocks.reserve(parts.size());
  int next = s + 1;
  for (int b = 0; b < k1; ++b) {
    const Pda& part = parts[static_cast<std::size_t>(b)];
    std::vector<Entry> cells = part.cells();
    for (int r : star_rows(part)) {
      mirror[static_cast<std::size_t>(r) * k1 + b] = true;
      for (int c = 0; c < k2; ++c) {
        cells[static_cast<std::size_t>(r) * k2 + c] = Entry::integer(next++);
      }
    }
    blocks.push_back(Pda::from_grid(f, k2, std::move(cells)));
  }

  const SchemeParams closed = grouping_params(k1, k2, t);
  const int z1 = closed.z1.convert_to<int>();
  const int z2 = closed.z2.convert_to<int>();

  // Sets come from scanning the blocks; the closed forms are checked below.
  std::vector<IntegerSet> block_sets;
  for (const Pda& b : blocks) block_sets.push_back(b.integers());
  const long long mirror_labels = static_cast<long long>(k2) * z1;
  Hpda h(MirrorPlacement(f, k1, std::move(mirror)), std::move(blocks),
         HpdaParams{k1, k2, f, z1, z2}, closed_range(s + 1, s + k1 * mirror_labels),
         block_sets);

  // Block k1 holds its own fresh labels plus every MN label whose (t+1)-set
  // touches the block's users.
  const SubsetIndexer labels(users, t + 1);
  std::vector<IntegerSet> expected(static_cast<std::size_t>(k1));
  for (int b = 0; b < k1; ++b) {
    expected[b] = closed_range(s + b * mirror_labels + 1, s + (b + 1) * mirror_labels);
  }
  for (int label = 1; label <= s; ++label) {
    for (int user : labels.unrank(static_cast<std::uint64_t>(label))) {
      expected[static_cast<std::size_t>(user / k2)].insert(label);
    }
  }
  assert_sets(h, closed_range(s + 1, next - 1), expected, "grouping construction");
  return h;
}

SchemeParams grouping_params(int k1, int k2, int t) {
  require_range(k1, k2, t);
  const long long users = static_cast<long long>(k1) * k2;
  const BigInt f = binomial(users, t);
  const BigInt z1 = binomial(users - k2, t - k2);
  const BigInt z2 = binomial(users - 1, t - 1) - z1;
  const Rational r1 = ratio(users - t, t + 1);
  const Rational r2 = r1 - ratio(binomial(users - k2, t + 1), f) + ratio(z1 * k2, f);
  return SchemeParams{SchemeLoads{r1, r2, f, ratio(z1, f), ratio(z2, f)}, z1, z2};
}

Hpda build_hybrid_hpda(const Pda& outer, const Pda& inner) {
  require_pda(outer, "outer");
  require_pda(inner, "inner");
  const PdaParams& a = outer.params();
  const PdaParams& b = inner.params();
  const long long rows = static_cast<long long>(a.f) * b.f;
  if (rows * (a.k + static_cast<long long>(a.k) * b.k) > (1LL << 26)) {
    throw ParameterError("hybrid HPDA is too large to materialize");
  }
  const int f = static_cast<int>(rows);
  const auto order = star_orders(outer);

  std::vector<bool> mirror(static_cast<std::size_t>(f) * a.k, false);
  for (int r1 = 0; r1 < a.f; ++r1) {
    for (int r2 = 0; r2 < b.f; ++r2) {
      for (int c = 0; c < a.k; ++c) {
        mirror[static_cast<std::size_t>(r1 * b.f + r2) * a.k + c] = outer.at(r1, c).is_star();
      }
    }
  }

  std::vector<Pda> blocks;
  blocks.reserve(static_cast<std::size_t>(a.k));
  for (int c = 0; c < a.k; ++c) {
    std::vector<Entry> cells;
    cells.reserve(static_cast<std::size_t>(f) * b.k);
    for (int r1 = 0; r1 < a.f; ++r1) {
      const Entry e = outer.at(r1, c);
      const long long offset = e.is_star() ? star_offset(a, b, c, order[r1][c])
                                           : static_cast<long long>(e.value() - 1) * b.s;
      const Pda copy = pda_shift(inner, static_cast<int>(offset));
      cells.insert(cells.end(), copy.cells().begin(), copy.cells().end());
    }
    blocks.push_back(Pda::from_grid(f, b.k, std::move(cells)));
  }

  std::vector<IntegerSet> block_sets;
  for (const Pda& blk : blocks) block_sets.push_back(blk.integers());
  const long long s1s2 = static_cast<long long>(a.s) * b.s;
  IntegerSet mirror_only = closed_range(s1s2 + 1, (a.s + static_cast<long long>(a.z) * a.k) * b.s);
  Hpda h(MirrorPlacement(f, a.k, std::move(mirror)), std::move(blocks),
         HpdaParams{a.k, b.k, f, a.z * b.f, b.z * a.f}, mirror_only, block_sets);

  // S_k1 = ((k1-1)Z1+S1)S2 .. (k1 Z1+S1)S2 plus ((s-1)S2, sS2] for each
  // integer s in column k1 of A.
  std::vector<IntegerSet> expected(static_cast<std::size_t>(a.k));
  for (int c = 0; c < a.k; ++c) {
    expected[c] = closed_range((static_cast<long long>(c) * a.z + a.s) * b.s + 1,
                               (static_cast<long long>(c + 1) * a.z + a.s) * b.s);
    for (int r1 = 0; r1 < a.f; ++r1) {
      const Entry e = outer.at(r1, c);
      if (e.is_star()) continue;
      const IntegerSet range = closed_range(static_cast<long long>(e.value() - 1) * b.s + 1,
                                            static_cast<long long>(e.value()) * b.s);
      expected[c].insert(range.begin(), range.end());
    }
  }
  assert_sets(h, mirror_only, expected, "hybrid construction");
  return h;
}

SchemeParams hybrid_params(const PdaParams& outer, const PdaParams& inner) {
  const BigInt f = BigInt(outer.f) * inner.f;
  const BigInt z1 = BigInt(outer.z) * inner.f;
  const BigInt z2 = BigInt(inner.z) * outer.f;
  const SchemeLoads loads{ratio(BigInt(outer.s) * inner.s, f), ratio(inner.s, inner.f), f,
                          ratio(outer.z, outer.f), ratio(inner.z, inner.f)};
  return SchemeParams{loads, z1, z2};
}

bool check_inner_array_disjointness(const Pda& outer, const Pda& inner) {
  const PdaParams& a = outer.params();
  const PdaParams& b = inner.params();
  const auto order = star_orders(outer);
  auto disjoint = [](const IntegerSet& x, const IntegerSet& y) {
    return std::none_of(x.begin(), x.end(), [&](int v) { return y.contains(v); });
  };

  std::vector<IntegerSet> copies_by_label;  // index s-1
  for (int s = 1; s <= a.s; ++s) {
    copies_by_label.push_back(shifted_integers(inner, static_cast<long long>(s - 1) * b.s));
  }
  struct StarCopy {
    int col;
    int order;
    IntegerSet integers;
  };
  std::vector<StarCopy> star_copies;
  for (int c = 0; c < a.k; ++c) {
    for (int r = 0; r < a.f; ++r) {
      if (!outer.at(r, c).is_star()) continue;
      star_copies.push_back({c, order[r][c],
                             shifted_integers(inner, star_offset(a, b, c, order[r][c]))});
    }
  }

  for (std::size_t i = 0; i < copies_by_label.size(); ++i) {
    for (std::size_t j = i + 1; j < copies_by_label.size(); ++j) {
      if (!disjoint(copies_by_label[i], copies_by_label[j])) return false;
    }
  }
  for (std::size_t i = 0; i < star_copies.size(); ++i) {
    for (std::size_t j = i + 1; j < star_copies.size(); ++j) {
      const StarCopy& x = star_copies[i];
      const StarCopy& y = star_copies[j];
      if (x.col == y.col && x.order == y.order) {
        if (x.integers != y.integers) return false;
      } else if (!disjoint(x.integers, y.integers)) {
        return false;
      }
    }
  }
  for (const IntegerSet& copy : copies_by_label) {
    for (const StarCopy& star : star_copies) {
      if (!disjoint(copy, star.integers)) return false;
    }
  }
  return true;
}

}  // namespace hpda
