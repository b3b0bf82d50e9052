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

#include "latfree/lp.h"

#include <gtest/gtest.h>

#include <random>

#include "latfree/polyhedra.h"
#include "support/oracles.h"

namespace latfree {
namespace {

using testing::V;

// Rows of the three-variable example: -x_i + y <= 0, x1 + x2 + y <= 2,
// y >= 0, written as >= rows.
HRep ExampleSystem() {
  HRep h;
  h.dim = 3;
  h.inequalities = {{V({"1", "0", "-1"}), Rat(0)},
                    {V({"0", "1", "-1"}), Rat(0)},
                    {V({"-1", "-1", "-1"}), Rat(-2)},
                    {V({"0", "0", "1"}), Rat(0)}};
  return h;
}

TEST(LpTest, ExampleOptimumIsTwoThirds) {
  const LpOutcome out = Optimize(ExampleSystem(), V({"0", "0", "1"}), Sense::kMaximize);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.optimum, Rat(2, 3));
  EXPECT_EQ(out.point, V({"2/3", "2/3", "2/3"}));
}

TEST(LpTest, InfeasibleAndUnbounded) {
  HRep h;
  h.dim = 1;
  h.inequalities = {{V({"1"}), Rat(1)}, {V({"-1"}), Rat(0)}};
  EXPECT_EQ(Optimize(h, V({"1"}), Sense::kMaximize).status, LpStatus::kInfeasible);

  HRep u;
  u.dim = 2;
  u.inequalities = {{V({"1", "0"}), Rat(0)}, {V({"0", "1"}), Rat(0)}};
  const LpOutcome out = Optimize(u, V({"1", "1"}), Sense::kMaximize);
  ASSERT_EQ(out.status, LpStatus::kUnbounded);
  EXPECT_TRUE(Contains(u, out.point));
  EXPECT_TRUE(InRecessionCone(u, out.ray));
  EXPECT_GT(Dot(V({"1", "1"}), out.ray), 0);
}

TEST(LpTest, EqualityRowsAndRedundantEqualities) {
  LinearProgram lp;
  lp.num_vars = 3;
  lp.nonnegative = {true, true, true};
  lp.AddRow(V({"1", "1", "1"}), Relation::kEqual, Rat(1));
  lp.AddRow(V({"2", "2", "2"}), Relation::kEqual, Rat(2));
  lp.objective = V({"3", "1", "2"});
  lp.sense = Sense::kMinimize;
  const LpOutcome out = SolveLp(lp);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.optimum, 1);
  EXPECT_EQ(out.point, V({"0", "1", "0"}));
}

TEST(LpTest, DegenerateCycleExampleTerminates) {
  // Beale's cycling example; Bland's rule must terminate.
  LinearProgram lp;
  lp.num_vars = 4;
  lp.nonnegative.assign(4, true);
  lp.AddRow(V({"1/4", "-8", "-1", "9"}), Relation::kLessEqual, Rat(0));
  lp.AddRow(V({"1/2", "-12", "-1/2", "3"}), Relation::kLessEqual, Rat(0));
  lp.AddRow(V({"0", "0", "1", "0"}), Relation::kLessEqual, Rat(1));
  lp.objective = V({"3/4", "-20", "1/2", "-6"});
  lp.sense = Sense::kMaximize;
  const LpOutcome out = SolveLp(lp);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.optimum, Rat(5, 4));
}

// Optimum over a random polytope equals the minimum over its brute-force
// vertices.
TEST(LpTest, RandomPolytopesMatchVertexOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    HRep h;
    h.dim = 3;
    for (std::size_t c = 0; c < 3; ++c) {
      h.inequalities.push_back({UnitVec(3, c), Rat(-3)});
      h.inequalities.push_back({Scale(Rat(-1), UnitVec(3, c)), Rat(-3)});
    }
    for (int k = 0; k < 4; ++k) {
      Vec a{Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng))};
      Rat b(coef(rng), 2);
      b.canonicalize();
      h.inequalities.push_back({a, b});
    }
    const Vec c{Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng))};
    const std::vector<Vec> verts = testing::BruteForceVertices(h);
    const LpOutcome out = Optimize(h, c, Sense::kMinimize);
    if (verts.empty()) {
      EXPECT_EQ(out.status, LpStatus::kInfeasible);
      continue;
    }
    ASSERT_EQ(out.status, LpStatus::kOptimal);
    EXPECT_EQ(out.optimum, testing::MinOver(verts, c));
    EXPECT_TRUE(Contains(h, out.point));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

}  // namespace
}  // namespace latfree
