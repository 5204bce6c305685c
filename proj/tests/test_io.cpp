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

#include <gtest/gtest.h>

#include <sstream>

#include "hpda/constructions.hpp"
#include "hpda/errors.hpp"
#include "hpda/io.hpp"
#include "test_support.hpp"

namespace hpda {
namespace {

TEST(PdaText, RoundTrip) {
  const Pda p = mn_pda(4, 2);
  std::stringstream s;
  save_pda(p, s);
  EXPECT_EQ(load_pda(s), p);
}

TEST(PdaText, ExactFormat) {
  EXPECT_EQ(format_pda(mn_pda(3, 1)), "PDA 3 3 1 3\n* 1 2\n1 * 3\n2 3 *\n");
}

TEST(PdaText, KeepsDeclaredParams) {
  const Pda p = parse_pda("PDA 3 3 2 5\n* 1 2\n1 * 3\n2 3 *\n");
  EXPECT_EQ(p.params(), (PdaParams{3, 3, 2, 5}));
}

TEST(PdaText, ToleratesExtraWhitespace) {
  EXPECT_EQ(parse_pda("  PDA 3 3 1 3\r\n\n*\t1  2\n1 * 3 \n2 3 *"), mn_pda(3, 1));
}

TEST(PdaText, ShortRowIsDimensionError) {
  EXPECT_THROW(parse_pda("PDA 3 3 1 3\n* 1 2\n1 *\n2 3 *\n"), DimensionError);
  EXPECT_THROW(parse_pda("PDA 3 3 1 3\n* 1 2\n1 * 3\n"), DimensionError);
}

TEST(PdaText, BadTokenReportsPosition) {
  try {
    parse_pda("PDA 3 3 1 3\n* 1 2\n1 x 3\n2 3 *\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(parse_pda("PDA 3 3 1 3\n* 1 2\n1 0 3\n2 3 *\n"), ParseError);
  EXPECT_THROW(parse_pda("PDA 3 3 1 3\n* 1 2\n1 -4 3\n2 3 *\n"), ParseError);
  EXPECT_THROW(parse_pda("PDA 3 3 1\n"), ParseError);
  EXPECT_THROW(parse_pda(""), ParseError);
  EXPECT_THROW(parse_pda("HPDA 1 1 1 0 0\n- 1\n"), ParseError);
}

TEST(HpdaText, RoundTripBothConstructions) {
  const Hpda g = build_grouping_hpda(2, 2, 3);
  EXPECT_EQ(parse_hpda(format_hpda(g)), g);
  const Hpda h = build_hybrid_hpda(mn_pda(3, 1), mn_pda(2, 1));
  std::stringstream s;
  save_hpda(h, s);
  EXPECT_EQ(load_hpda(s), h);
}

TEST(HpdaText, GoldenFileMatchesFormatter) {
  EXPECT_EQ(format_hpda(build_grouping_hpda(3, 2, 4)), testing::read_data("grouping_k3_k2_t4.hpda"));
  EXPECT_EQ(format_hpda(testing::data_hpda("hybrid_k2_k3.hpda")), testing::read_data("hybrid_k2_k3.hpda"));
}

TEST(HpdaText, MirrorTokensAreStarOrDash) {
  EXPECT_THROW(parse_hpda("HPDA 1 1 1 1 0\n1 *\n"), ParseError);
  EXPECT_THROW(parse_hpda("HPDA 1 1 1 1 0\n* * 3\n"), DimensionError);
}

TEST(ParseArray, DispatchesOnHeader) {
  EXPECT_TRUE(std::holds_alternative<Pda>(parse_array(testing::read_data("mn_k3_t1.pda"))));
  EXPECT_TRUE(std::holds_alternative<Hpda>(parse_array(testing::read_data("grouping_k3_k2_t4.hpda"))));
  EXPECT_THROW(parse_array("GRID 1 1\n"), ParseError);
  EXPECT_THROW(parse_array("\n\n"), ParseError);
}

}  // namespace
}  // namespace hpda
