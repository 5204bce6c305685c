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

#include "hpda/hpda.hpp"
#include "hpda/pda.hpp"

namespace hpda {

// Grouping construction.
//
// Start from the MN PDA on K = K1*K2 users at memory level t and split its
// columns into K1 blocks of K2 users. Mirror k1 caches exactly the rows that
// are all-star in block k1, and those star rows are handed fresh labels
// S+1, S+2, ... (block by block, rows top to bottom, columns left to right),
// which become the mirror-only set S_m. Requires K2 < t < K1*K2.
Hpda build_grouping_hpda(int k1, int k2, int t);

/// Closed forms for the grouping construction:
///   F  = C(K1K2, t)
///   Z1 = C(K1K2 - K2, t - K2)
///   Z2 = C(K1K2 - 1, t - 1) - Z1
///   R1 = (K1K2 - t) / (t + 1)
///   R2 = R1 - C(K1K2 - K2, t + 1) / F + K2 * Z1 / F
SchemeParams grouping_params(int k1, int k2, int t);

// Hybrid construction.
//
// A (K1,F1,Z1,S1) outer PDA and a (K2,F2,Z2,S2) inner PDA give an F1*F2-row
// HPDA. Mirror placement: each row of A's star pattern repeated F2 times.
// Block k1 stacks F1 shifted copies of B: an integer a = s in column k1 of A
// becomes B + (s-1)*S2, and a star becomes
//   B + ((k1-1)*Z1 + order - 1 + S1) * S2
// where `order` is the 1-based position of that star among the stars of
// column k1 of A, counted top to bottom.
//
// Both inputs must verify and use the alphabet [1..S]; otherwise
// InvalidArtifactError.
Hpda build_hybrid_hpda(const Pda& outer, const Pda& inner);

/// F = F1F2, Z1' = Z1F2, Z2' = Z2F1, R1 = S1S2/(F1F2), R2 = S2/F2.
SchemeParams hybrid_params(const PdaParams& outer, const PdaParams& inner);

/// Brute-force check that the inner arrays of the hybrid construction have
/// the disjointness the construction relies on:
///  - copies for distinct outer integers share no integer (equal ones coincide);
///  - star copies in the same column share nothing unless they are the same
///    star, and star copies in different columns never share;
///  - no outer-integer copy shares an integer with a star copy.
bool check_inner_array_disjointness(const Pda& outer, const Pda& inner);

}  // namespace hpda
