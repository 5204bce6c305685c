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

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "hpda/hpda.hpp"
#include "hpda/pda.hpp"

namespace hpda {

// PDA text format:
//   PDA K F Z S
//   F lines of K tokens, "*" or a positive decimal integer.
void save_pda(const Pda& p, std::ostream& out);
std::string format_pda(const Pda& p);
Pda load_pda(std::istream& in);
Pda parse_pda(std::string_view text);

// HPDA text format:
//   HPDA K1 K2 F Z1 Z2
//   F lines: K1 mirror tokens ("*" or "-"), then K1*K2 block tokens.
// Integer sets are not stored; loading derives them (see Hpda::with_derived_sets).
void save_hpda(const Hpda& h, std::ostream& out);
std::string format_hpda(const Hpda& h);
Hpda load_hpda(std::istream& in);
Hpda parse_hpda(std::string_view text);

/// Dispatches on the header keyword.
std::variant<Pda, Hpda> parse_array(std::string_view text);

}  // namespace hpda
