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

#include "latfree/relaxation.h"

#include <gtest/gtest.h>

#include "latfree/error.h"
#include "latfree/mixed_integer.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace latfree {
namespace {

using testing::V;

const SplitBody kUnitSplit = MakeSplitSet(2, {0, 1}, {Int(1), Int(0)}, Int(0));

VRep P2() {
  VRep p;
  p.dim = 2;
  p.vertices = {V({"1/2", "1/2"}), V({"1/2", "5/2"}), V({"5/2", "1/2"})};
  p.integer_vars = {0, 1};
  return p;
}

VRep P3() {
  VRep p;
  p.dim = 2;
  p.vertices = {V({"1/2", "1/2"})};
  p.rays = {V({"1", "0"}), V({"1", "1"})};
  p.integer_vars = {0, 1};
  return p;
}

// x_i >= y, x_1 + ... + x_p + y <= p, y >= 0 in (x, y).
VRep ExampleP(std::size_t p) {
  HRep h;
  h.dim = p + 1;
  for (std::size_t i = 0; i < p; ++i) {
    Vec row(p + 1, Rat(0));
    row[i] = 1;
    row[p] = -1;
    h.inequalities.push_back({row, Rat(0)});
  }
  h.inequalities.push_back({Vec(p + 1, Rat(-1)), Rat(-static_cast<long>(p))});
  h.inequalities.push_back({UnitVec(p + 1, p), Rat(0)});
  VRep v = HrepToVrep(h);
  for (std::size_t i = 0; i < p; ++i) v.integer_vars.push_back(i);
  return v;
}

TEST(RelaxationTest, BoundedSplitFixture) {
  const VRep r = RelaxVertices(kUnitSplit, P2());
  EXPECT_EQ(r.vertices,
            (std::vector<Vec>{V({"1", "1/2"}), V({"1", "2"}), V({"5/2", "1/2"})}));
  EXPECT_TRUE(r.rays.empty());
  EXPECT_EQ(RelaxBalas(kUnitSplit, P2()), VrepToHrep(r));
}

TEST(RelaxationTest, UnboundedSplitFixture) {
  const VRep r = RelaxVertices(kUnitSplit, P3());
  EXPECT_EQ(r.vertices, (std::vector<Vec>{V({"1", "1/2"}), V({"1", "1"})}));
  EXPECT_EQ(r.rays, (std::vector<Vec>{V({"1", "0"}), V({"1", "1"})}));
  EXPECT_EQ(RelaxBalas(kUnitSplit, P3()), VrepToHrep(r));
}

TEST(RelaxationTest, SimplexBodyOnExample) {
  for (std::size_t p = 2; p <= 3; ++p) {
    const VRep ex = ExampleP(p);
    const SplitBody body = MakeSimplexBody(p, p + 1);
    const VRep r = RelaxVertices(body, ex);
    std::vector<Vec> expected;
    expected.push_back(ZeroVec(p + 1));
    for (std::size_t i = 0; i < p; ++i) expected.push_back(Scale(Rat(p), UnitVec(p + 1, i)));
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(r.vertices, expected);
    EXPECT_EQ(RelaxBalas(body, ex), VrepToHrep(r));
  }
}

TEST(RelaxationTest, SingleLiftedSystemAgrees) {
  EXPECT_EQ(RelaxBalas(kUnitSplit, P2(), BalasMode::kSingleSystem),
            RelaxBalas(kUnitSplit, P2()));
  EXPECT_EQ(RelaxBalas(kUnitSplit, P3(), BalasMode::kSingleSystem),
            RelaxBalas(kUnitSplit, P3()));
  const VRep ex = ExampleP(2);
  const SplitBody body = MakeSimplexBody(2, 3);
  EXPECT_EQ(RelaxBalas(body, ex, BalasMode::kSingleSystem), RelaxBalas(body, ex));
  testing::Generator gen(91);
  for (int iter = 0; iter < 15; ++iter) {
    testing::InstanceOptions opt;
    opt.max_dim = 2;
    const VRep p = gen.Instance(opt);
    const SplitBody b = gen.Body(p);
    EXPECT_EQ(RelaxBalas(b, p, BalasMode::kSingleSystem), RelaxBalas(b, p));
  }
}

TEST(RelaxationTest, CrossingDetails) {
  const VertexRelaxation d = RelaxVerticesDetailed(kUnitSplit, P2());
  EXPECT_EQ(d.partition.inside, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(d.partition.outside, (std::vector<std::size_t>{2}));
  ASSERT_EQ(d.points.size(), 2u);
  EXPECT_EQ(d.points[0].step, Rat(1, 4));
  EXPECT_EQ(d.points[0].point, V({"1", "1/2"}));
  EXPECT_EQ(d.points[1].point, V({"1", "2"}));
}

TEST(RelaxationTest, TrivialWhenNoVertexInside) {
  const SplitBody far = MakeSplitSet(2, {0, 1}, {Int(1), Int(0)}, Int(5));
  EXPECT_TRUE(IsTrivial(far, P2()));
  EXPECT_EQ(RelaxVertices(far, P2()), CanonicalVrep(P2()));
  EXPECT_FALSE(IsTrivial(kUnitSplit, P2()));
}

TEST(RelaxationTest, EmptyWhenInsideTheBody) {
  VRep p;
  p.dim = 2;
  p.vertices = {V({"1/4", "0"}), V({"3/4", "7"})};
  p.integer_vars = {0, 1};
  const VRep r = RelaxVertices(kUnitSplit, p);
  EXPECT_TRUE(r.IsEmpty());
  EXPECT_TRUE(IsCanonicalEmpty(RelaxBalas(kUnitSplit, p)));
}

TEST(RelaxationTest, BalasNeedsLinearRecessionCone) {
  const SplitBody half(2, {0, 1}, {{{Int(1), Int(0)}, Int(0)}});
  try {
    RelaxBalas(half, P2());
    FAIL() << "expected a precondition error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
}

TEST(RelaxationTest, RejectsBodyOnContinuousCoordinate) {
  VRep p = P2();
  p.integer_vars = {0};
  const SplitBody s = MakeSplitSet(2, {1}, {Int(0), Int(1)}, Int(0));
  EXPECT_THROW(RelaxVertices(s, p), Error);
}

TEST(RelaxationTest, IntersectionCutFixture) {
  // lambda on (1/2, 1/2) in P3: both rays leave the split at x = 1.
  const LiftedCut c = ComputeIntersectionCut(kUnitSplit, P3(), V({"1"}));
  EXPECT_EQ(c.alpha, (std::vector<ExtRat>{ExtRat(Rat(1, 2)), ExtRat(Rat(1, 2))}));
  EXPECT_EQ(c.RayCoefficient(0), 2);
  const VRep vertical = [] {
    VRep p;
    p.dim = 2;
    p.vertices = {V({"1/2", "0"})};
    p.rays = {V({"0", "1"})};
    p.integer_vars = {0, 1};
    return p;
  }();
  const LiftedCut v = ComputeIntersectionCut(kUnitSplit, vertical, V({"1"}));
  EXPECT_TRUE(v.alpha[0].is_infinite());
  EXPECT_EQ(v.RayCoefficient(0), 0);
}

// Random instances: both constructions agree, R sits between the mixed
// integer hull and P, triviality matches the partition, and the boundary
// steps have the stated shape.
TEST(RelaxationTest, PropertiesOnRandomInstances) {
  testing::Generator gen(57);
  int nontrivial = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const VRep p = gen.Instance();
    const SplitBody body = gen.Body(p);
    const VertexRelaxation d = RelaxVerticesDetailed(body, p);
    const VRep& r = d.relaxation;
    const HRep balas = RelaxBalas(body, p);
    ASSERT_EQ(balas, VrepToHrep(r)) << "iteration " << iter;

    const HRep ph = VrepToHrep(p);
    EXPECT_TRUE(IsSubset(r, ph));
    const VRep hull = MixedIntegerHull(p);
    EXPECT_TRUE(IsSubset(hull, balas));
    EXPECT_EQ(IsTrivial(body, p), d.partition.inside.empty());
    EXPECT_EQ(IsTrivial(body, p), balas == ph);
    for (const Vec& x : r.vertices) EXPECT_FALSE(body.StrictlyContains(x));
    if (d.partition.inside.empty()) continue;
    ++nontrivial;

    const Vec w = gen.Weights(p.vertices.size(), d.partition.inside);
    const LiftedCut cut = ComputeIntersectionCut(body, p, w);
    Vec v = ZeroVec(p.dim);
    for (std::size_t i = 0; i < w.size(); ++i) v = AddScaled(v, w[i], p.vertices[i]);
    for (const auto& [k, beta] : cut.beta) {
      EXPECT_GT(beta, 0);
      EXPECT_LE(beta, 1);
      // The crossing is on the boundary of L and inside R.
      const Vec x = AddScaled(v, beta, Sub(p.vertices[k], v));
      EXPECT_FALSE(body.StrictlyContains(x));
      EXPECT_TRUE(Contains(balas, x));
    }
    for (std::size_t j = 0; j < p.rays.size(); ++j) {
      // Concave in lambda: the mixed step is at least the mixed steps.
      ExtRat mixed_of_pure(Rat(0));
      for (std::size_t i : d.partition.inside) {
        const ExtRat a = AlphaBoundary(body, p, UnitVec(p.vertices.size(), i), j);
        if (a.is_infinite() || mixed_of_pure.is_infinite()) {
          mixed_of_pure = ExtRat::Infinity();
        } else {
          mixed_of_pure = ExtRat(Rat(mixed_of_pure.value() + w[i] * a.value()));
        }
      }
      EXPECT_GE(cut.alpha[j], mixed_of_pure);
      if (!cut.alpha[j].is_infinite()) {
        const Vec x = AddScaled(v, cut.alpha[j].value(), p.rays[j]);
        EXPECT_FALSE(body.StrictlyContains(x));
        EXPECT_TRUE(Contains(balas, x));
      }
    }
  }
  EXPECT_GE(nontrivial, 20);
}

}  // namespace
}  // namespace latfree
