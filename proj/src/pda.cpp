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

#include "hpda/pda.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hpda/errors.hpp"
#include "hpda/numeric.hpp"
#include "hpda/subset_indexer.hpp"

namespace hpda {

namespace {

constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 26;

std::string cell_name(Cell c) {
  return "(" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ")";
}

void check_columns(const Pda& p, int z, VerificationReport& report) {
  for (int c = 0; c < p.cols(); ++c) {
    std::vector<Cell> stars;
    for (int r = 0; r < p.rows(); ++r) {
      if (p.at(r, c).is_star()) stars.push_back({r, c});
    }
    const int count = static_cast<int>(stars.size());
    if (count != z) {
      report.violations.push_back(
          {PdaCondition::C1, std::move(stars),
           "column " + std::to_string(c + 1) + " has " + std::to_string(count) +
               " stars, expected " + std::to_string(z)});
    }
  }
}

std::map<int, std::vector<Cell>> occurrences(const Pda& p) {
  std::map<int, std::vector<Cell>> out;
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p.cols(); ++c) {
      const Entry e = p.at(r, c);
      if (e.is_integer()) out[e.value()].push_back({r, c});
    }
  }
  return out;
}

void check_pairs(const Pda& p, const std::map<int, std::vector<Cell>>& occ,
                 VerificationReport& report) {
  for (const auto& [s, cells] : occ) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        const Cell a = cells[i];
        const Cell b = cells[j];
        if (a.row == b.row || a.col == b.col) {
          report.violations.push_back(
              {PdaCondition::C3a, {a, b},
               "integer " + std::to_string(s) + " repeats in a row or column at " +
                   cell_name(a) + " and " + cell_name(b)});
          continue;
        }
        if (!p.at(a.row, b.col).is_star() || !p.at(b.row, a.col).is_star()) {
          report.violations.push_back(
              {PdaCondition::C3b,
               {a, b, {a.row, b.col}, {b.row, a.col}},
               "integer " + std::to_string(s) + " at " + cell_name(a) + " and " +
                   cell_name(b) + " lacks the star complement"});
        }
      }
    }
  }
}

}  // namespace

Entry Entry::integer(int value) {
  if (value < 1) {
    throw ParameterError("PDA integers are positive, got " + std::to_string(value));
  }
  return Entry(value);
}

std::string to_string(PdaCondition c) {
  switch (c) {
    case PdaCondition::C1: return "C1";
    case PdaCondition::C2: return "C2";
    case PdaCondition::C3a: return "C3a";
    case PdaCondition::C3b: return "C3b";
  }
  return "?";
}

Pda::Pda(int rows, int cols, std::vector<Entry> cells, PdaParams declared)
    : rows_(rows), cols_(cols), cells_(std::move(cells)), params_(declared) {
  if (rows < 0 || cols < 0) throw DimensionError("negative PDA dimensions");
  if (cells_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw DimensionError("PDA grid has " + std::to_string(cells_.size()) +
                         " cells, expected " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  if (params_.k != cols || params_.f != rows) {
    throw DimensionError("declared (K,F)=(" + std::to_string(params_.k) + "," +
                         std::to_string(params_.f) + ") but grid is " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Pda Pda::from_grid(int rows, int cols, std::vector<Entry> cells) {
  Pda p(rows, cols, std::move(cells), PdaParams{cols, rows, 0, 0});
  int z = 0;
  if (cols > 0) {
    for (int r = 0; r < rows; ++r) z += p.at(r, 0).is_star() ? 1 : 0;
  }
  p.params_.z = z;
  p.params_.s = static_cast<int>(p.integers().size());
  return p;
}

std::set<int> Pda::integers() const {
  std::set<int> out;
  for (Entry e : cells_) {
    if (e.is_integer()) out.insert(e.value());
  }
  return out;
}

Pda mn_pda(int k, int t) {
  if (k < 1) throw ParameterError("MN PDA needs K >= 1, got " + std::to_string(k));
  if (t < 1 || t > k) {
    throw ParameterError("MN PDA needs 1 <= t <= K, got t=" + std::to_string(t) +
                         " with K=" + std::to_string(k));
  }
  const SubsetIndexer rows_index(k, t);
  const std::uint64_t f = rows_index.count();
  if (f * static_cast<std::uint64_t>(k) > kMaxCells) {
    throw ParameterError("MN PDA with K=" + std::to_string(k) + ", t=" + std::to_string(t) +
                         " is too large to materialize");
  }
  std::vector<Entry> cells;
  cells.reserve(f * static_cast<std::uint64_t>(k));
  std::vector<int> extended;
  if (t == k) {
    cells.assign(static_cast<std::size_t>(k), Entry::star());
  } else {
    const SubsetIndexer labels(k, t + 1);
    for (const auto& subset : rows_index.all()) {
      for (int col = 0; col < k; ++col) {
        if (std::binary_search(subset.begin(), subset.end(), col)) {
          cells.push_back(Entry::star());
          continue;
        }
        extended = subset;
        extended.insert(std::lower_bound(extended.begin(), extended.end(), col), col);
        cells.push_back(Entry::integer(static_cast<int>(labels.rank(extended))));
      }
    }
  }
  const PdaParams params{k, static_cast<int>(f), static_cast<int>(binomial_u64(k - 1, t - 1)),
                         static_cast<int>(binomial_u64(k, t + 1))};
  return Pda(static_cast<int>(f), k, std::move(cells), params);
}

VerificationReport verify_pda(const Pda& p) {
  VerificationReport report;
  check_columns(p, p.params().z, report);
  const auto occ = occurrences(p);
  if (static_cast<int>(occ.size()) != p.params().s) {
    const int max_int = occ.empty() ? 0 : occ.rbegin()->first;
    std::string detail;
    if (max_int <= p.params().s) {
      // The alphabet is [1..S]; name the labels that never occur.
      for (int s = 1; s <= p.params().s; ++s) {
        if (!occ.contains(s)) {
          detail += detail.empty() ? "; missing " : ",";
          detail += std::to_string(s);
        }
      }
    }
    report.violations.push_back(
        {PdaCondition::C2, {},
         "array holds " + std::to_string(occ.size()) + " distinct integers, declared S=" +
             std::to_string(p.params().s) + detail});
  }
  check_pairs(p, occ, report);
  return report;
}

VerificationReport verify_pda_over(const Pda& p, int z, const std::set<int>& alphabet) {
  VerificationReport report;
  check_columns(p, z, report);
  const auto occ = occurrences(p);
  for (const auto& [s, cells] : occ) {
    if (!alphabet.contains(s)) {
      report.violations.push_back(
          {PdaCondition::C2, cells, "integer " + std::to_string(s) + " is not in the alphabet"});
    }
  }
  for (int s : alphabet) {
    if (!occ.contains(s)) {
      report.violations.push_back(
          {PdaCondition::C2, {}, "alphabet integer " + std::to_string(s) + " never occurs"});
    }
  }
  check_pairs(p, occ, report);
  return report;
}

Pda pda_shift(const Pda& p, int a) {
  std::vector<Entry> cells;
  cells.reserve(p.cells().size());
  for (Entry e : p.cells()) {
    if (e.is_star()) {
      cells.push_back(e);
      continue;
    }
    const long long shifted = static_cast<long long>(e.value()) + a;
    if (shifted < 1) {
      throw ParameterError("shift by " + std::to_string(a) + " maps " +
                           std::to_string(e.value()) + " to a non-positive integer");
    }
    cells.push_back(Entry::integer(static_cast<int>(shifted)));
  }
  return Pda(p.rows(), p.cols(), std::move(cells), p.params());
}

std::vector<int> star_rows(const Pda& p) {
  std::vector<int> out;
  if (p.cols() == 0) return out;
  for (int r = 0; r < p.rows(); ++r) {
    const auto row = p.row(r);
    if (std::all_of(row.begin(), row.end(), [](Entry e) { return e.is_star(); })) {
      out.push_back(r);
    }
  }
  return out;
}

std::vector<Pda> column_partition(const Pda& p, int parts) {
  if (parts < 1 || p.cols() % parts != 0) {
    throw ParameterError("cannot split " + std::to_string(p.cols()) + " columns into " +
                         std::to_string(parts) + " equal parts");
  }
  const int width = p.cols() / parts;
  std::vector<Pda> blocks;
  blocks.reserve(static_cast<std::size_t>(parts));
  for (int b = 0; b < parts; ++b) {
    std::vector<Entry> cells;
    cells.reserve(static_cast<std::size_t>(p.rows()) * width);
    for (int r = 0; r < p.rows(); ++r) {
      for (int c = 0; c < width; ++c) cells.push_back(p.at(r, b * width + c));
    }
    blocks.push_back(Pda::from_grid(p.rows(), width, std::move(cells)));
  }
  return blocks;
}

Pda concat_columns(std::span<const Pda> blocks) {
  if (blocks.empty()) return Pda::from_grid(0, 0, {});
  const int rows = blocks.front().rows();
  int cols = 0;
  for (const Pda& b : blocks) {
    if (b.rows() != rows) throw DimensionError("blocks disagree on row count");
    cols += b.cols();
  }
  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (const Pda& b : blocks) {
      const auto row = b.row(r);
      cells.insert(cells.end(), row.begin(), row.end());
    }
  }
  return Pda::from_grid(rows, cols, std::move(cells));
}

}  // namespace hpda
