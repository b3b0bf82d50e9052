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

#include "latfree/polyhedra.h"

#include <gtest/gtest.h>

#include <random>

#include "latfree/error.h"
#include "support/oracles.h"

namespace latfree {
namespace {

using testing::V;

VRep Triangle() {
  VRep v;
  v.dim = 2;
  v.vertices = {V({"0", "0"}), V({"2", "0"}), V({"0", "2"})};
  return v;
}

TEST(PolyhedraTest, TriangleFacetsAreCanonical) {
  const HRep h = VrepToHrep(Triangle());
  EXPECT_TRUE(h.equalities.empty());
  const std::vector<Halfspace> expected = {{V({"-1", "-1"}), Rat(-2)},
                                           {V({"0", "1"}), Rat(0)},
                                           {V({"1", "0"}), Rat(0)}};
  EXPECT_EQ(h.inequalities, expected);
}

TEST(PolyhedraTest, RedundantRowIsDropped) {
  HRep h;
  h.dim = 2;
  h.inequalities = {{V({"1", "0"}), Rat(0)},
                    {V({"0", "1"}), Rat(0)},
                    {V({"-1", "-1"}), Rat(-2)},
                    {V({"-1", "0"}), Rat(-5)}};
  EXPECT_EQ(Canonicalize(h), VrepToHrep(Triangle()));
}

TEST(PolyhedraTest, ImplicitEqualitiesBecomeEqualities) {
  // Segment x + y = 1, 0 <= x <= 1 written with inequalities only.
  HRep h;
  h.dim = 2;
  h.inequalities = {{V({"1", "1"}), Rat(1)},
                    {V({"-1", "-1"}), Rat(-1)},
                    {V({"1", "0"}), Rat(0)},
                    {V({"-1", "0"}), Rat(-1)}};
  const HRep c = Canonicalize(h);
  ASSERT_EQ(c.equalities.size(), 1u);
  EXPECT_EQ(c.equalities[0], (Halfspace{V({"1", "1"}), Rat(1)}));
  // x column is the pivot, so inequalities only mention y.
  const std::vector<Halfspace> expected = {{V({"0", "-1"}), Rat(-1)},
                                           {V({"0", "1"}), Rat(0)}};
  EXPECT_EQ(c.inequalities, expected);
  VRep seg;
  seg.dim = 2;
  seg.vertices = {V({"0", "1"}), V({"1", "0"})};
  EXPECT_EQ(VrepToHrep(seg), c);
}

TEST(PolyhedraTest, EmptySetHasDistinctForm) {
  HRep h;
  h.dim = 2;
  h.inequalities = {{V({"1", "0"}), Rat(1)}, {V({"-1", "0"}), Rat(0)}};
  const HRep c = Canonicalize(h);
  EXPECT_TRUE(IsCanonicalEmpty(c));
  EXPECT_EQ(c, VrepToHrep(VRep{2, {}, {}, {}}));
  EXPECT_TRUE(HrepToVrep(h).IsEmpty());
}

TEST(PolyhedraTest, UnboundedConversionRoundTrip) {
  VRep v;
  v.dim = 2;
  v.vertices = {V({"1/2", "1/2"})};
  v.rays = {V({"1", "0"}), V({"2", "2"})};
  const HRep h = VrepToHrep(v);
  const VRep back = HrepToVrep(h);
  EXPECT_EQ(back.vertices, std::vector<Vec>{V({"1/2", "1/2"})});
  const std::vector<Vec> rays = {V({"1", "0"}), V({"1", "1"})};
  EXPECT_EQ(back.rays, rays);
  EXPECT_EQ(VrepToHrep(back), h);
}

TEST(PolyhedraTest, LineThrowsNotPointed) {
  HRep h;
  h.dim = 2;
  h.inequalities = {{V({"1", "0"}), Rat(0)}};
  try {
    HrepToVrep(h);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotPointed);
  }
}

TEST(PolyhedraTest, WholeSpaceAndPoint) {
  VRep pt;
  pt.dim = 2;
  pt.vertices = {V({"1/3", "2"})};
  const HRep h = VrepToHrep(pt);
  EXPECT_EQ(h.equalities.size(), 2u);
  EXPECT_TRUE(h.inequalities.empty());
  EXPECT_EQ(HrepToVrep(h).vertices, pt.vertices);
  EXPECT_EQ(Canonicalize(WholeSpace(3)), WholeSpace(3));
}

TEST(PolyhedraTest, ProjectionOfSimplexOntoPlane) {
  // conv{0, e1, e2, e3} projected to (x1, x2) is the unit triangle.
  HRep h;
  h.dim = 3;
  for (std::size_t c = 0; c < 3; ++c) h.inequalities.push_back({UnitVec(3, c), Rat(0)});
  h.inequalities.push_back({V({"-1", "-1", "-1"}), Rat(-1)});
  const HRep p = Project(h, {0, 1});
  VRep tri;
  tri.dim = 2;
  tri.vertices = {V({"0", "0"}), V({"1", "0"}), V({"0", "1"})};
  EXPECT_EQ(p, VrepToHrep(tri));
}

// Random polytopes in dimension 2..4: the LP canonical form, the double
// description form and brute force oracles agree.
class RandomPolytopeTest : public ::testing::TestWithParam<int> {};

std::vector<Vec> RandomPoints(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < count; ++i) {
    Vec p(n);
    for (Rat& x : p) {
      x = Rat(num(rng), den(rng));
      x.canonicalize();
    }
    pts.push_back(p);
  }
  return pts;
}

TEST_P(RandomPolytopeTest, RepresentationsAgree) {
  std::mt19937_64 rng(GetParam());
  const std::size_t n = 2 + GetParam() % 3;
  VRep v;
  v.dim = n;
  v.vertices = RandomPoints(rng, n, n + 3 + GetParam() % 4);
  const HRep h = VrepToHrep(v);

  // Facet oracle (polytopes are full-dimensional with overwhelming odds; the
  // oracle only handles that case).
  if (h.equalities.empty()) {
    EXPECT_EQ(h.inequalities, testing::BruteForceFacets(v.vertices, n));
  }
  // Vertex oracle.
  const VRep back = HrepToVrep(h);
  EXPECT_EQ(back.vertices, testing::BruteForceVertices(h));
  for (const Vec& p : v.vertices) EXPECT_TRUE(Contains(h, p));

  // LP path on a perturbed description: add every generator-induced row
  // twice, shuffle, add a far redundant row.
  HRep noisy = h;
  noisy.inequalities.push_back({UnitVec(n, 0), Rat(-100)});
  for (const Halfspace& r : h.inequalities) {
    noisy.inequalities.push_back({Scale(Rat(3), r.normal), 3 * r.offset});
  }
  std::shuffle(noisy.inequalities.begin(), noisy.inequalities.end(), rng);
  EXPECT_EQ(Canonicalize(noisy), h);

  // Projection onto the first n-1 coordinates equals the hull of the
  // projected points.
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c + 1 < n; ++c) keep.push_back(c);
  VRep projected;
  projected.dim = n - 1;
  for (const Vec& p : v.vertices) projected.vertices.emplace_back(p.begin(), p.end() - 1);
  EXPECT_EQ(Project(h, keep), VrepToHrep(projected));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomPolytopeTest, ::testing::Range(1, 31));

TEST(PolyhedraTest, RandomUnboundedRoundTrip) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> small(-1, 2);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    VRep v;
    v.dim = 3;
    v.vertices = RandomPoints(rng, 3, 3);
    for (int j = 0; j < 2; ++j) {
      Vec r{Rat(small(rng)), Rat(small(rng)), Rat(small(rng))};
      if (!IsZero(r)) v.rays.push_back(r);
    }
    HRep h = VrepToHrep(v);
    VRep back;
    try {
      back = HrepToVrep(h);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kNotPointed);
      continue;
    }
    EXPECT_EQ(VrepToHrep(back), h);
    for (const Vec& p : v.vertices) EXPECT_TRUE(Contains(back, p));
    for (const Vec& p : back.vertices) EXPECT_TRUE(Contains(v, p));
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace latfree
