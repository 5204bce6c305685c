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

#include "hpda/subset_indexer.hpp"

#include <algorithm>
#include <string>

#include "hpda/errors.hpp"
#include "hpda/numeric.hpp"

namespace hpda {

SubsetIndexer::SubsetIndexer(int ground_size, int subset_size)
    : ground_size_(ground_size), subset_size_(subset_size) {
  if (ground_size < 0 || subset_size < 0 || subset_size > ground_size) {
    throw ParameterError("subset size " + std::to_string(subset_size) +
                         " invalid for ground set of size " +
                         std::to_string(ground_size));
  }
  count_ = binomial_u64(ground_size, subset_size);
  choose_.assign(static_cast<std::size_t>(ground_size) + 1,
                 std::vector<std::uint64_t>(static_cast<std::size_t>(subset_size) + 1, 0));
  for (int n = 0; n <= ground_size; ++n) {
    choose_[n][0] = 1;
    for (int k = 1; k <= std::min(n, subset_size); ++k) {
      choose_[n][k] = choose_[n - 1][k - 1] + (k <= n - 1 ? choose_[n - 1][k] : 0);
    }
  }
}

std::uint64_t SubsetIndexer::rank(std::span<const int> subset) const {
  if (static_cast<int>(subset.size()) != subset_size_) {
    throw ParameterError("expected a subset of size " + std::to_string(subset_size_) +
                         ", got " + std::to_string(subset.size()));
  }
  std::uint64_t rank0 = 0;
  int next = 0;  // smallest element value still available at this position
  for (int i = 0; i < subset_size_; ++i) {
    const int element = subset[i];
    if (element < next || element >= ground_size_) {
      throw ParameterError("subset must be strictly increasing within [0, " +
                           std::to_string(ground_size_) + ")");
    }
    const int remaining = subset_size_ - i - 1;
    // Skip every subset whose i-th element lies in [next, element).
    for (int v = next; v < element; ++v) {
      rank0 += choose_[ground_size_ - 1 - v][remaining];
    }
    next = element + 1;
  }
  return rank0 + 1;
}

std::vector<int> SubsetIndexer::unrank(std::uint64_t rank) const {
  if (rank < 1 || rank > count_) {
    throw ParameterError("rank " + std::to_string(rank) + " outside [1, " +
                         std::to_string(count_) + "]");
  }
  std::uint64_t rest = rank - 1;
  std::vector<int> subset;
  subset.reserve(static_cast<std::size_t>(subset_size_));
  int v = 0;
  for (int i = 0; i < subset_size_; ++i) {
    const int remaining = subset_size_ - i - 1;
    while (true) {
      const std::uint64_t block = choose_[ground_size_ - 1 - v][remaining];
      if (rest < block) break;
      rest -= block;
      ++v;
    }
    subset.push_back(v);
    ++v;
  }
  return subset;
}

std::vector<std::vector<int>> SubsetIndexer::all() const {
  std::vector<std::vector<int>> out;
  out.reserve(count_);
  std::vector<int> current(static_cast<std::size_t>(subset_size_));
  for (int i = 0; i < subset_size_; ++i) current[i] = i;
  for (std::uint64_t n = 0; n < count_; ++n) {
    out.push_back(current);
    // Advance to the lexicographic successor.
    int i = subset_size_ - 1;
    while (i >= 0 && current[i] == ground_size_ - subset_size_ + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < subset_size_; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace hpda
