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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hpda/numeric.hpp"
#include "hpda/pda.hpp"

namespace hpda {

using IntegerSet = std::set<int>;

/// F x K1 grid of {*, null}; a star at (j, k1) means mirror k1 caches packet
/// j of every file.
class MirrorPlacement {
 public:
  MirrorPlacement() = default;
  MirrorPlacement(int rows, int cols, std::vector<bool> stars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_star(int row, int col) const {
    return stars_[static_cast<std::size_t>(row) * cols_ + col];
  }
  int star_count(int col) const;
  /// Ascending rows starred in column `col`.
  std::vector<int> starred_rows(int col) const;

  friend bool operator==(const MirrorPlacement&, const MirrorPlacement&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<bool> stars_;
};

struct HpdaParams {
  int k1 = 0;
  int k2 = 0;
  int f = 0;
  int z1 = 0;
  int z2 = 0;

  friend bool operator==(const HpdaParams&, const HpdaParams&) = default;
};

/// A cell of block k1: row j, column k2 (all 0-based).
struct BlockCell {
  int block = 0;
  int row = 0;
  int col = 0;
  friend bool operator==(const BlockCell&, const BlockCell&) = default;
};

/// Mirror placement plus K1 user blocks, each F x K2, and the integer sets
/// S_m and S_1..S_K1 the array is claimed to be an HPDA over.
class Hpda {
 public:
  Hpda() = default;
  Hpda(MirrorPlacement mirror, std::vector<Pda> blocks, HpdaParams params,
       IntegerSet mirror_only, std::vector<IntegerSet> block_sets);

  /// S_k1 = integers of block k1; S_m = every integer that occurs in exactly
  /// one block with all of its cells in mirror-starred rows.
  static Hpda with_derived_sets(MirrorPlacement mirror, std::vector<Pda> blocks, int z1,
                                int z2);

  const HpdaParams& params() const { return params_; }
  const MirrorPlacement& mirror() const { return mirror_; }
  const std::vector<Pda>& blocks() const { return blocks_; }
  const Pda& block(int k1) const { return blocks_[static_cast<std::size_t>(k1)]; }
  Entry at(int k1, int row, int k2) const { return block(k1).at(row, k2); }

  const IntegerSet& mirror_only() const { return mirror_only_; }
  const std::vector<IntegerSet>& block_sets() const { return block_sets_; }
  const IntegerSet& block_set(int k1) const { return block_sets_[static_cast<std::size_t>(k1)]; }

  /// Union of all block sets minus S_m: the labels the server transmits.
  IntegerSet server_integers() const;

  /// Every cell holding each integer, ordered by (block, row, col).
  std::map<int, std::vector<BlockCell>> occurrences() const;

  friend bool operator==(const Hpda&, const Hpda&) = default;

 private:
  MirrorPlacement mirror_;
  std::vector<Pda> blocks_;
  HpdaParams params_;
  IntegerSet mirror_only_;
  std::vector<IntegerSet> block_sets_;
};

enum class HpdaCondition { B1, B2, B3, B4 };
std::string to_string(HpdaCondition c);

struct HpdaViolation {
  HpdaCondition condition;
  std::vector<BlockCell> cells;
  std::string message;
};

struct HpdaReport {
  std::vector<HpdaViolation> violations;

  bool valid() const { return violations.empty(); }
  bool has(HpdaCondition c) const {
    for (const auto& v : violations) {
      if (v.condition == c) return true;
    }
    return false;
  }
};

HpdaReport verify_hpda(const Hpda& h);

/// Loads, subpacketization and memory ratios of the scheme an array realizes.
struct SchemeLoads {
  Rational r1;
  Rational r2;
  BigInt f;
  Rational m1_ratio;
  Rational m2_ratio;

  friend bool operator==(const SchemeLoads&, const SchemeLoads&) = default;
};

/// SchemeLoads plus the per-layer star counts behind the memory ratios.
struct SchemeParams {
  SchemeLoads loads;
  BigInt z1;
  BigInt z2;

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// Loads read off the integer sets of a verified HPDA:
///   R1 = (|union S_k1| - |S_m|) / F,  R2 = max_k1 |S_k1| / F.
/// Throws InvalidArtifactError if `h` does not verify.
SchemeLoads loads_from_hpda(const Hpda& h);

}  // namespace hpda
