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

#include "latfree/lattice_free.h"

#include <gtest/gtest.h>

#include "latfree/error.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace latfree {
namespace {

using testing::V;

IntegerBox Cube(std::size_t n, int lo, int hi) {
  return IntegerBox{IntVec(n, Int(lo)), IntVec(n, Int(hi))};
}

HRep Segment(const Vec& a, const Vec& b) {
  VRep v;
  v.dim = a.size();
  v.vertices = {a, b};
  return VrepToHrep(v);
}

TEST(LatticeFreeTest, SimplexBodyWidthAndLatticeFreeness) {
  for (std::size_t p = 1; p <= 4; ++p) {
    const SplitBody s = MakeSimplexBody(p);
    EXPECT_EQ(MaxFacetWidth(s), ExtRat(Rat(p)));
    EXPECT_TRUE(HasLinearRecessionCone(s));
    EXPECT_TRUE(LatticePointFree(s, Cube(p, -1, static_cast<int>(p) + 1)).lattice_free);
  }
}

TEST(LatticeFreeTest, SimplexBodyInLargerSpace) {
  const SplitBody s = MakeSimplexBody(2, 3);
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_EQ(s.facets().size(), 3u);
  EXPECT_EQ(s.integer_vars(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(s.StrictlyContains(V({"1/2", "1/2", "100"})));
  EXPECT_FALSE(s.StrictlyContains(V({"0", "1/2", "0"})));
}

TEST(LatticeFreeTest, SplitWidthIsOne) {
  const SplitBody s = MakeSplitSet(2, {0, 1}, {Int(2), Int(3)}, Int(4));
  EXPECT_EQ(MaxFacetWidth(s), ExtRat(Rat(1)));
  EXPECT_EQ(WidthAlong(s, V({"1", "0"})), ExtRat::Infinity());
  EXPECT_TRUE(HasLinearRecessionCone(s));
  EXPECT_TRUE(LatticePointFree(s, Cube(2, -5, 5)).lattice_free);
}

TEST(LatticeFreeTest, FindsInteriorLatticePoint) {
  const SplitBody s(2, {0, 1},
                    {{{Int(1), Int(0)}, Int(0)},
                     {{Int(0), Int(1)}, Int(0)},
                     {{Int(-1), Int(-1)}, Int(-3)}});
  const LatticeFreeReport r = LatticePointFree(s, Cube(2, -1, 4));
  EXPECT_FALSE(r.lattice_free);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (IntVec{Int(1), Int(1)}));
}

TEST(LatticeFreeTest, HalfplaneHasNoLinearRecessionCone) {
  const SplitBody s(2, {0, 1}, {{{Int(1), Int(0)}, Int(0)}});
  EXPECT_FALSE(HasLinearRecessionCone(s));
}

TEST(LatticeFreeTest, RejectsNormalOnContinuousCoordinate) {
  try {
    SplitBody(2, {0}, {{{Int(1), Int(1)}, Int(0)}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
  }
}

TEST(LatticeFreeTest, RelativeInteriorContainment) {
  const SplitBody s = MakeSimplexBody(2);
  EXPECT_FALSE(ContainsRelativeInterior(Segment(V({"0", "0"}), V({"2", "0"})), s));
  EXPECT_TRUE(ContainsRelativeInterior(Segment(V({"0", "1"}), V({"1", "1"})), s));
  EXPECT_TRUE(ContainsRelativeInterior(s.Hrep(), s));
  EXPECT_FALSE(ContainsRelativeInterior(Segment(V({"2", "0"}), V({"2", "0"})), s));
  EXPECT_FALSE(ContainsRelativeInterior(Segment(V({"1", "1"}), V({"3", "0"})), s));
}

TEST(LatticeFreeTest, RelativeInteriorLatticePoints) {
  // The segment (0,0)-(2,0) has (1,0) in its relative interior.
  const HRep q = Segment(V({"0", "0"}), V({"2", "0"}));
  const LatticeFreeReport r = LatticePointFree(q, BoundingBox(q));
  EXPECT_FALSE(r.lattice_free);
  EXPECT_EQ(*r.witness, (IntVec{Int(1), Int(0)}));
  const HRep q2 = Segment(V({"0", "0"}), V({"1", "1"}));
  EXPECT_TRUE(LatticePointFree(q2, BoundingBox(q2)).lattice_free);
}

TEST(LatticeFreeTest, WidthSizeTakesTheThinnestContainingBody) {
  const std::vector<SplitBody> family = {MakeSimplexBody(2),
                                         MakeSplitSet(2, {0, 1}, {Int(1), Int(0)}, Int(0))};
  const HRep q = Segment(V({"0", "1/2"}), V({"1", "1/2"}));
  const WidthSizeBound w = WidthSizeOverFamily(q, family);
  EXPECT_EQ(w.value, ExtRat(Rat(1)));
  EXPECT_EQ(w.argmin, std::optional<std::size_t>(1));
  const HRep far = Segment(V({"5", "5"}), V({"6", "5"}));
  EXPECT_TRUE(WidthSizeOverFamily(far, family).value.is_infinite());
  EXPECT_FALSE(WidthSizeOverFamily(far, family).argmin.has_value());
}

// Generated bodies are lattice-free, and facet widths agree with a brute-force
// max/min over the body's vertices.
TEST(LatticeFreeTest, GeneratedBodiesMatchOracles) {
  testing::Generator gen(11);
  for (int iter = 0; iter < 40; ++iter) {
    const VRep p = gen.Instance();
    const SplitBody body = gen.Body(p);
    EXPECT_TRUE(HasLinearRecessionCone(body));
    const std::size_t k = body.integer_vars().size();
    const LatticeFreeReport r = LatticePointFree(body, Cube(k, -8, 8));
    EXPECT_TRUE(r.lattice_free);
    if (body.facets().size() == 2) {
      EXPECT_EQ(MaxFacetWidth(body), ExtRat(Rat(1)));
      continue;
    }
    // Restrict to the coordinates the facets touch, where the body is a
    // simplex.
    std::vector<std::size_t> used;
    for (std::size_t c = 0; c < p.dim; ++c) {
      for (const BodyFacet& f : body.facets()) {
        if (f.normal[c] != 0) {
          used.push_back(c);
          break;
        }
      }
    }
    HRep local;
    local.dim = used.size();
    for (const BodyFacet& f : body.facets()) {
      Vec a;
      for (std::size_t c : used) a.emplace_back(f.normal[c]);
      local.inequalities.push_back({a, Rat(f.offset)});
    }
    const std::vector<Vec> verts = testing::BruteForceVertices(local);
    ASSERT_EQ(verts.size(), used.size() + 1);
    for (const ExtRat& w : FacetWidths(body)) EXPECT_LE(w, ExtRat(Rat(2)));
    for (const Halfspace& f : local.inequalities) {
      Rat lo = Dot(f.normal, verts[0]), hi = lo;
      for (const Vec& v : verts) {
        lo = std::min(lo, Dot(f.normal, v));
        hi = std::max(hi, Dot(f.normal, v));
      }
      Vec a(p.dim, Rat(0));
      for (std::size_t i = 0; i < used.size(); ++i) a[used[i]] = f.normal[i];
      EXPECT_EQ(WidthAlong(body, a), ExtRat(Rat(hi - lo)));
    }
  }
}

}  // namespace
}  // namespace latfree
