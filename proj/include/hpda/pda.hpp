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

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace hpda {

/// A PDA cell: either a star (packet cached) or a positive integer
/// (multicast label).
class Entry {
 public:
  constexpr Entry() = default;

  static constexpr Entry star() { return Entry(); }
  static Entry integer(int value);

  constexpr bool is_star() const { return raw_ == 0; }
  constexpr bool is_integer() const { return raw_ != 0; }
  /// Only meaningful for integer entries.
  constexpr int value() const { return raw_; }

  friend constexpr bool operator==(Entry, Entry) = default;

 private:
  constexpr explicit Entry(std::int32_t raw) : raw_(raw) {}
  std::int32_t raw_ = 0;
};

struct PdaParams {
  int k = 0;  // columns (users)
  int f = 0;  // rows (subpacketization)
  int z = 0;  // stars per column
  int s = 0;  // distinct integers

  friend bool operator==(const PdaParams&, const PdaParams&) = default;
};

/// An F x K array over {*} and positive integers together with its declared
/// (K, F, Z, S). The declared Z and S are what verify_pda checks the grid
/// against; construction only enforces that the shape matches.
class Pda {
 public:
  Pda() = default;
  Pda(int rows, int cols, std::vector<Entry> cells, PdaParams declared);

  /// Params derived from the grid: Z from the first column, S as the number
  /// of distinct integers.
  static Pda from_grid(int rows, int cols, std::vector<Entry> cells);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PdaParams& params() const { return params_; }

  Entry at(int row, int col) const { return cells_[index(row, col)]; }
  std::span<const Entry> row(int r) const {
    return {cells_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  const std::vector<Entry>& cells() const { return cells_; }

  std::set<int> integers() const;

  friend bool operator==(const Pda&, const Pda&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * cols_ + col;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Entry> cells_;
  PdaParams params_;
};

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class PdaCondition { C1, C2, C3a, C3b };
std::string to_string(PdaCondition c);

template <class Condition>
struct Violation {
  Condition condition;
  std::vector<Cell> cells;
  std::string message;
};

template <class Condition>
struct Report {
  std::vector<Violation<Condition>> violations;

  bool valid() const { return violations.empty(); }
  bool has(Condition c) const {
    for (const auto& v : violations) {
      if (v.condition == c) return true;
    }
    return false;
  }
};

using VerificationReport = Report<PdaCondition>;

/// The MN PDA: rows are the t-subsets of the K users in lexicographic order,
/// and cell (T, k) is * when k is in T, otherwise the lexicographic rank of
/// T + {k} among (t+1)-subsets.
Pda mn_pda(int k, int t);

/// Checks C1-C3 against the declared Z and S.
VerificationReport verify_pda(const Pda& p);

/// Checks C1 and C3 with the given Z and requires the integers present to be
/// exactly `alphabet` (C2). Used for the per-mirror blocks of an HPDA.
VerificationReport verify_pda_over(const Pda& p, int z, const std::set<int>& alphabet);

/// P + a; stars stay stars.
Pda pda_shift(const Pda& p, int a);

/// Ascending 0-based indices of rows made entirely of stars.
std::vector<int> star_rows(const Pda& p);

/// Splits the columns into `parts` equal consecutive groups.
std::vector<Pda> column_partition(const Pda& p, int parts);

/// Inverse of column_partition. All blocks must share the row count.
Pda concat_columns(std::span<const Pda> blocks);

}  // namespace hpda
