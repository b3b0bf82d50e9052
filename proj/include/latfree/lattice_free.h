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

// Convex bodies L = {x : pi^k . x >= pi0^k} with integral facets supported on
// the integer variables, their widths and lattice-freeness.

#ifndef LATFREE_LATTICE_FREE_H_
#define LATFREE_LATTICE_FREE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "latfree/mixed_integer.h"
#include "latfree/polyhedra.h"
#include "latfree/rational.h"

namespace latfree {

// normal . x >= offset. normal has one entry per coordinate of the ambient
// space and vanishes on the continuous coordinates.
struct BodyFacet {
  IntVec normal;
  Int offset;
  friend bool operator==(const BodyFacet&, const BodyFacet&) = default;
};

class SplitBody {
 public:
  SplitBody() = default;
  // Throws kInvalidInput on a zero normal or a normal that touches a
  // continuous coordinate, kDimensionMismatch on size errors.
  SplitBody(std::size_t dim, std::vector<std::size_t> integer_vars,
            std::vector<BodyFacet> facets);

  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& integer_vars() const { return integer_vars_; }
  const std::vector<BodyFacet>& facets() const { return facets_; }

  HRep Hrep() const;              // in the ambient space
  HRep IntegerSpaceHrep() const;  // restricted to the integer coordinates
  // Every facet strict, i.e. x in int(L).
  bool StrictlyContains(const Vec& x) const;
  Rat FacetSlack(std::size_t k, const Vec& x) const;

  friend bool operator==(const SplitBody&, const SplitBody&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> integer_vars_;
  std::vector<BodyFacet> facets_;
};

// {x : pi0 <= pi.x <= pi0 + 1}.
SplitBody MakeSplitSet(std::size_t dim, std::vector<std::size_t> integer_vars,
                       const IntVec& pi, const Int& pi0);
// {x : x_i >= 0 (i < p), x_1 + ... + x_p <= p} on the first p coordinates of
// a dim-dimensional space whose first p variables are integer.
SplitBody MakeSimplexBody(std::size_t p, std::size_t dim);
inline SplitBody MakeSimplexBody(std::size_t p) { return MakeSimplexBody(p, p); }

// max v.x - min v.x over L. Throws kEmptyInput if L is empty.
ExtRat WidthAlong(const SplitBody& body, const Vec& v);
ExtRat MaxFacetWidth(const SplitBody& body);
std::vector<ExtRat> FacetWidths(const SplitBody& body);

// True iff the recession cone {r : pi^k . r >= 0} is a linear subspace.
bool HasLinearRecessionCone(const SplitBody& body);

struct LatticeFreeReport {
  bool lattice_free = true;
  std::optional<IntVec> witness;
};

// No integer point of the box lies in the interior of the body's projection
// to the integer coordinates.
LatticeFreeReport LatticePointFree(const SplitBody& body, const IntegerBox& box);
// No integer point of the box lies in the relative interior of q.
LatticeFreeReport LatticePointFree(const HRep& q, const IntegerBox& box);
// Integer bounding box of a polyhedron; throws kPrecondition if unbounded.
IntegerBox BoundingBox(const HRep& q);

// q lives in the integer space of the body. True iff q is inside the body and
// its relative interior is inside the body's interior.
bool ContainsRelativeInterior(const HRep& q, const SplitBody& body);

struct WidthSizeBound {
  ExtRat value = ExtRat::Infinity();
  std::optional<std::size_t> argmin;  // index into the candidate list
};
// Minimum max-facet-width over the candidates whose interior contains ri(q).
WidthSizeBound WidthSizeOverFamily(const HRep& q,
                                   const std::vector<SplitBody>& candidates);

}  // namespace latfree

#endif  // LATFREE_LATTICE_FREE_H_
