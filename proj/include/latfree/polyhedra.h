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

// Inequality and generator descriptions of rational polyhedra, their
// canonical forms, conversions and projection.
//
// Canonical inequality form:
//   * equalities: reduced row echelon form of the affine hull, each row
//     scaled to coprime integers (pivot positive);
//   * inequalities: facets only, pivot columns of the equalities eliminated,
//     coprime integers, sorted lexicographically by (normal, offset);
//   * the empty set is exactly one inequality 0 >= 1.
// Two canonical descriptions are equal iff the polyhedra are equal.

#ifndef LATFREE_POLYHEDRA_H_
#define LATFREE_POLYHEDRA_H_

#include <cstddef>
#include <ostream>
#include <vector>

#include "latfree/lp.h"
#include "latfree/rational.h"

namespace latfree {

// normal . x >= offset (or == offset for equalities).
struct Halfspace {
  Vec normal;
  Rat offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};
bool operator<(const Halfspace& a, const Halfspace& b);

struct HRep {
  std::size_t dim = 0;
  std::vector<Halfspace> equalities;
  std::vector<Halfspace> inequalities;
  friend bool operator==(const HRep&, const HRep&) = default;
};

// Points conv(vertices) + cone(rays). No vertices means the empty set.
// integer_vars are 0-based, sorted and distinct; empty for plain polyhedra.
struct VRep {
  std::size_t dim = 0;
  std::vector<Vec> vertices;
  std::vector<Vec> rays;
  std::vector<std::size_t> integer_vars;
  bool IsEmpty() const { return vertices.empty(); }
  friend bool operator==(const VRep&, const VRep&) = default;
};

// Readable one-line-per-row text, for logs and test failures.
std::ostream& operator<<(std::ostream& os, const Halfspace& h);
std::ostream& operator<<(std::ostream& os, const HRep& h);
std::ostream& operator<<(std::ostream& os, const VRep& v);

HRep EmptyHRep(std::size_t dim);
HRep WholeSpace(std::size_t dim);
bool IsCanonicalEmpty(const HRep& h);

// Dimension checks for every row. Throws kDimensionMismatch.
void CheckHRep(const HRep& h);
void CheckVRep(const VRep& v);

LinearProgram ToLinearProgram(const HRep& h);
LpOutcome Optimize(const HRep& h, const Vec& objective, Sense sense);
LpOutcome Optimize(const VRep& v, const Vec& objective, Sense sense);
bool IsFeasible(const HRep& h);

bool Contains(const HRep& h, const Vec& x);
bool InRecessionCone(const HRep& h, const Vec& r);
// Exact membership in conv(vertices) + cone(rays), one LP.
bool Contains(const VRep& v, const Vec& x);
// Generators of a inside b.
bool IsSubset(const VRep& a, const HRep& b);

struct ImplicitEqualities {
  bool feasible = false;
  std::vector<bool> implicit;  // per inequality of the input
  Vec relative_interior;       // strictly satisfies every non-implicit row
};
// One LP: maximize the number of strictly satisfiable rows.
ImplicitEqualities FindImplicitEqualities(const HRep& h);

// LP path: implicit equalities, normalization, one redundancy LP per row.
HRep Canonicalize(const HRep& h);

// Syntactic part of canonicalization only. Assumes `h` has no implicit
// equalities among its inequalities and no redundant rows other than exact
// duplicates; used when those facts are already known.
HRep NormalizeIrredundant(const HRep& h);

// Extreme rays of the pointed cone {y : a.y >= 0 (a in ineqs), e.y = 0 (e in
// eqs)}, each scaled to coprime integers, in no particular order.
// Throws kNotPointed if the cone contains a line.
std::vector<Vec> ConeExtremeRays(std::size_t dim, const std::vector<Vec>& ineqs,
                                 const std::vector<Vec>& eqs);

// Double description conversions; both results are canonical.
HRep VrepToHrep(const VRep& v);
// Throws kNotPointed if the polyhedron contains a line.
VRep HrepToVrep(const HRep& h);
// Minimal generators (vertices sorted, rays primitive and sorted), keeping
// integer_vars.
VRep CanonicalVrep(const VRep& v);

// Fourier-Motzkin projection onto the coordinates `keep` (in that order).
// Result is canonical.
HRep Project(const HRep& h, const std::vector<std::size_t>& keep);

HRep Intersect(const HRep& a, const HRep& b);

// Drops duplicate points and every point that lies in conv(other surviving
// points) + cone(rays), one LP per point in order. Survivors keep their
// relative order.
std::vector<Vec> FilterExtremePoints(std::vector<Vec> points,
                                     const std::vector<Vec>& rays);

}  // namespace latfree

#endif  // LATFREE_POLYHEDRA_H_
