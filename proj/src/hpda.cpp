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

#include "hpda/hpda.hpp"

#include <algorithm>

#include "hpda/errors.hpp"

namespace hpda {

namespace {

std::string where(const BlockCell& c) {
  return "block " + std::to_string(c.block + 1) + " (" + std::to_string(c.row + 1) + "," +
         std::to_string(c.col + 1) + ")";
}

}  // namespace

MirrorPlacement::MirrorPlacement(int rows, int cols, std::vector<bool> stars)
    : rows_(rows), cols_(cols), stars_(std::move(stars)) {
  if (rows < 0 || cols < 0 ||
      stars_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw DimensionError("mirror placement grid does not match " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

int MirrorPlacement::star_count(int col) const {
  int n = 0;
  for (int r = 0; r < rows_; ++r) n += is_star(r, col) ? 1 : 0;
  return n;
}

std::vector<int> MirrorPlacement::starred_rows(int col) const {
  std::vector<int> out;
  for (int r = 0; r < rows_; ++r) {
    if (is_star(r, col)) out.push_back(r);
  }
  return out;
}

Hpda::Hpda(MirrorPlacement mirror, std::vector<Pda> blocks, HpdaParams params,
           IntegerSet mirror_only, std::vector<IntegerSet> block_sets)
    : mirror_(std::move(mirror)),
      blocks_(std::move(blocks)),
      params_(params),
      mirror_only_(std::move(mirror_only)),
      block_sets_(std::move(block_sets)) {
  if (params_.k1 < 1 || params_.k2 < 1 || params_.f < 1) {
    throw DimensionError("HPDA needs K1, K2, F >= 1");
  }
  if (mirror_.rows() != params_.f || mirror_.cols() != params_.k1) {
    throw DimensionError("mirror placement is " + std::to_string(mirror_.rows()) + "x" +
                         std::to_string(mirror_.cols()) + ", expected " +
                         std::to_string(params_.f) + "x" + std::to_string(params_.k1));
  }
  if (static_cast<int>(blocks_.size()) != params_.k1 ||
      static_cast<int>(block_sets_.size()) != params_.k1) {
    throw DimensionError("expected " + std::to_string(params_.k1) + " blocks and block sets");
  }
  for (const Pda& b : blocks_) {
    if (b.rows() != params_.f || b.cols() != params_.k2) {
      throw DimensionError("block is " + std::to_string(b.rows()) + "x" +
                           std::to_string(b.cols()) + ", expected " +
                           std::to_string(params_.f) + "x" + std::to_string(params_.k2));
    }
  }
}

Hpda Hpda::with_derived_sets(MirrorPlacement mirror, std::vector<Pda> blocks, int z1, int z2) {
  const HpdaParams params{static_cast<int>(blocks.size()),
                          blocks.empty() ? 0 : blocks.front().cols(), mirror.rows(), z1, z2};
  std::vector<IntegerSet> sets;
  sets.reserve(blocks.size());
  for (const Pda& b : blocks) sets.push_back(b.integers());
  Hpda h(std::move(mirror), std::move(blocks), params, {}, std::move(sets));
  for (const auto& [s, cells] : h.occurrences()) {
    const int block = cells.front().block;
    const bool one_block = std::all_of(cells.begin(), cells.end(),
                                       [&](const BlockCell& c) { return c.block == block; });
    const bool cached = std::all_of(cells.begin(), cells.end(), [&](const BlockCell& c) {
      return h.mirror_.is_star(c.row, c.block);
    });
    if (one_block && cached) h.mirror_only_.insert(s);
  }
  return h;
}

IntegerSet Hpda::server_integers() const {
  IntegerSet out;
  for (const auto& set : block_sets_) {
    for (int s : set) {
      if (!mirror_only_.contains(s)) out.insert(s);
    }
  }
  return out;
}

std::map<int, std::vector<BlockCell>> Hpda::occurrences() const {
  std::map<int, std::vector<BlockCell>> out;
  for (int b = 0; b < params_.k1; ++b) {
    const Pda& block = blocks_[static_cast<std::size_t>(b)];
    for (int r = 0; r < block.rows(); ++r) {
      for (int c = 0; c < block.cols(); ++c) {
        const Entry e = block.at(r, c);
        if (e.is_integer()) out[e.value()].push_back({b, r, c});
      }
    }
  }
  return out;
}

std::string to_string(HpdaCondition c) {
  switch (c) {
    case HpdaCondition::B1: return "B1";
    case HpdaCondition::B2: return "B2";
    case HpdaCondition::B3: return "B3";
    case HpdaCondition::B4: return "B4";
  }
  return "?";
}

HpdaReport verify_hpda(const Hpda& h) {
  HpdaReport report;
  const HpdaParams& p = h.params();

  // B1. Mirror cells are reported with block -1.
  for (int k1 = 0; k1 < p.k1; ++k1) {
    const int stars = h.mirror().star_count(k1);
    if (stars != p.z1) {
      std::vector<BlockCell> cells;
      for (int r : h.mirror().starred_rows(k1)) cells.push_back({-1, r, k1});
      report.violations.push_back({HpdaCondition::B1, std::move(cells),
                                   "mirror column " + std::to_string(k1 + 1) + " has " +
                                       std::to_string(stars) + " stars, expected " +
                                       std::to_string(p.z1)});
    }
  }

  // B2.
  for (int k1 = 0; k1 < p.k1; ++k1) {
    const VerificationReport inner = verify_pda_over(h.block(k1), p.z2, h.block_set(k1));
    for (const auto& v : inner.violations) {
      std::vector<BlockCell> cells;
      for (const Cell& c : v.cells) cells.push_back({k1, c.row, c.col});
      report.violations.push_back({HpdaCondition::B2, std::move(cells),
                                   "block " + std::to_string(k1 + 1) + " " +
                                       to_string(v.condition) + ": " + v.message});
    }
  }

  const auto occ = h.occurrences();

  // B3.
  for (int s : h.mirror_only()) {
    const auto it = occ.find(s);
    if (it == occ.end()) {
      report.violations.push_back(
          {HpdaCondition::B3, {}, "S_m integer " + std::to_string(s) + " never occurs"});
      continue;
    }
    const auto& cells = it->second;
    std::set<int> blocks;
    for (const BlockCell& c : cells) blocks.insert(c.block);
    if (blocks.size() != 1) {
      report.violations.push_back({HpdaCondition::B3, cells,
                                   "S_m integer " + std::to_string(s) + " occurs in " +
                                       std::to_string(blocks.size()) + " blocks"});
    }
    for (const BlockCell& c : cells) {
      if (!h.mirror().is_star(c.row, c.block)) {
        report.violations.push_back({HpdaCondition::B3,
                                     {c, {-1, c.row, c.block}},
                                     "S_m integer " + std::to_string(s) + " at " + where(c) +
                                         " is not cached by mirror " +
                                         std::to_string(c.block + 1)});
      }
    }
  }

  // B4.
  for (const auto& [s, cells] : occ) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        const BlockCell a = cells[i];
        const BlockCell b = cells[j];
        if (a.block == b.block) continue;
        // Each side: an integer in its own block at the other cell's row must
        // sit in a row its mirror caches.
        for (const auto& [mine, other] : {std::pair{a, b}, std::pair{b, a}}) {
          const BlockCell probe{mine.block, other.row, mine.col};
          if (h.at(probe.block, probe.row, probe.col).is_integer() &&
              !h.mirror().is_star(other.row, mine.block)) {
            report.violations.push_back(
                {HpdaCondition::B4,
                 {mine, other, probe},
                 "integer " + std::to_string(s) + " at " + where(mine) + " and " +
                     where(other) + ": " + where(probe) +
                     " is an integer but mirror " + std::to_string(mine.block + 1) +
                     " does not cache row " + std::to_string(other.row + 1)});
          }
        }
      }
    }
  }
  return report;
}

SchemeLoads loads_from_hpda(const Hpda& h) {
  const HpdaReport report = verify_hpda(h);
  if (!report.valid()) {
    throw InvalidArtifactError("array is not an HPDA: " + to_string(report.violations.front().condition) +
                               " " + report.violations.front().message);
  }
  IntegerSet all;
  std::size_t widest = 0;
  for (const auto& set : h.block_sets()) {
    all.insert(set.begin(), set.end());
    widest = std::max(widest, set.size());
  }
  const BigInt f = h.params().f;
  const BigInt server = static_cast<long long>(all.size() - h.mirror_only().size());
  return SchemeLoads{ratio(server, f), ratio(static_cast<long long>(widest), f), f,
                     ratio(h.params().z1, f), ratio(h.params().z2, f)};
}

}  // namespace hpda
