// Copyright 2026 The latfree Authors
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

#include "latfree/rational.h"

#include <gtest/gtest.h>

#include "latfree/error.h"
#include "latfree/linalg.h"
#include "support/oracles.h"

namespace latfree {
namespace {

using testing::V;

TEST(RationalTest, ParseAndFormatRoundTrip) {
  EXPECT_EQ(FormatRat(ParseRat("4/6")), "2/3");
  EXPECT_EQ(FormatRat(ParseRat("-3/1")), "-3");
  EXPECT_EQ(FormatRat(ParseRat("0/5")), "0");
  EXPECT_EQ(FormatRat(ParseRat("-0")), "0");
  EXPECT_EQ(ParseRat("123456789012345678901234567890/3"),
            Rat(Int("41152263004115226300411522630")));
}

TEST(RationalTest, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "1.5", " 1", "a", "1/", "/2", "--1", "inf"}) {
    EXPECT_THROW(ParseRat(bad), Error) << bad;
  }
}

TEST(RationalTest, ExtRatOrderingAndReciprocal) {
  const ExtRat inf = ExtRat::Infinity();
  EXPECT_GT(inf, ExtRat(Rat(1000000)));
  EXPECT_EQ(inf, ExtRat::Infinity());
  EXPECT_LT(ExtRat(Rat(1, 3)), ExtRat(Rat(1, 2)));
  EXPECT_EQ(inf.Reciprocal(), 0);
  EXPECT_EQ(ExtRat(Rat(2, 5)).Reciprocal(), Rat(5, 2));
  EXPECT_THROW(ExtRat(Rat(0)).Reciprocal(), Error);
  EXPECT_THROW(inf.value(), Error);
  EXPECT_EQ(FormatExtRat(inf), "inf");
  EXPECT_EQ(ParseExtRat("inf"), inf);
  EXPECT_EQ(ParseExtRat("7/2"), ExtRat(Rat(7, 2)));
  EXPECT_EQ(Min(inf, ExtRat(Rat(3))), ExtRat(Rat(3)));
}

TEST(RationalTest, PrimitiveIntegralScalesPositively) {
  EXPECT_EQ(PrimitiveIntegral(V({"1/2", "-3/4", "0"})), V({"2", "-3", "0"}));
  EXPECT_EQ(PrimitiveIntegral(V({"-6", "4"})), V({"-3", "2"}));
  EXPECT_EQ(PrimitiveIntegral(V({"0", "0"})), V({"0", "0"}));
}

TEST(RationalTest, VectorSizeMismatchThrows) {
  EXPECT_THROW(Dot(V({"1"}), V({"1", "2"})), Error);
}

TEST(LinalgTest, NullSpaceAndRank) {
  const Matrix m = {V({"1", "1", "1"}), V({"2", "2", "2"})};
  EXPECT_EQ(Rank(m), 1u);
  const Matrix ns = NullSpace(m, 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const Vec& v : ns) EXPECT_EQ(Dot(m[0], v), 0);
}

TEST(LinalgTest, SpanMembership) {
  const std::vector<Vec> gens = {V({"1", "0", "1"}), V({"0", "1", "1"})};
  const auto c = SpanMembership(gens, V({"2", "3", "5"}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, V({"2", "3"}));
  EXPECT_FALSE(SpanMembership(gens, V({"1", "1", "1"})).has_value());
  EXPECT_TRUE(SpanMembership({}, V({"0", "0"})).has_value());
  EXPECT_FALSE(SpanMembership({}, V({"0", "1"})).has_value());
}

TEST(LinalgTest, InverseTimesMatrixIsIdentity) {
  const Matrix m = {V({"2", "1"}), V({"1", "1/3"})};
  const Matrix inv = Inverse(m);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Rat s = m[i][0] * inv[0][j] + m[i][1] * inv[1][j];
      EXPECT_EQ(s, i == j ? 1 : 0);
    }
  }
  EXPECT_THROW(Inverse({V({"1", "2"}), V({"2", "4"})}), Error);
}

}  // namespace
}  // namespace latfree
