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

#include <cstdint>
#include <span>
#include <vector>

namespace hpda {

/// Lexicographic ranking of the r-subsets of {0, ..., K-1}.
///
/// Subsets are passed and returned as strictly increasing element lists.
/// Ranks are 1-based so that they can be used directly as PDA integers:
/// {0, 1, ..., r-1} has rank 1 and {K-r, ..., K-1} has rank C(K, r).
class SubsetIndexer {
 public:
  SubsetIndexer(int ground_size, int subset_size);

  int ground_size() const { return ground_size_; }
  int subset_size() const { return subset_size_; }
  std::uint64_t count() const { return count_; }

  std::uint64_t rank(std::span<const int> subset) const;
  std::vector<int> unrank(std::uint64_t rank) const;

  /// All subsets, in rank order.
  std::vector<std::vector<int>> all() const;

 private:
  int ground_size_;
  int subset_size_;
  std::uint64_t count_;
  // choose_[n][k] for n <= ground_size_, k <= subset_size_.
  std::vector<std::vector<std::uint64_t>> choose_;
};

}  // namespace hpda
