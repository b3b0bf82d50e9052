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

// Cuts delta.x >= delta0 against a generator description of P, described
// by where they cross the edges and rays emanating from the cut-off
// vertices.

#ifndef LATFREE_CUTS_H_
#define LATFREE_CUTS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "latfree/polyhedra.h"
#include "latfree/rational.h"

namespace latfree {

struct Cut {
  Vec delta;
  Rat delta0;
  friend bool operator==(const Cut&, const Cut&) = default;
};

// Throws kInvalidInput on a zero normal. When every coefficient is integral
// the cut is divided by the gcd of (delta, delta0).
Cut MakeCut(Vec delta, Rat delta0);

struct CutClassification {
  std::vector<std::size_t> cut_off;    // delta.v < delta0
  std::vector<std::size_t> satisfied;  // delta.v >= delta0
  bool nonnegative = true;             // delta.r >= 0 for every ray
  bool is_cut() const { return !cut_off.empty(); }
};

CutClassification ClassifyCut(const VRep& p, const Cut& c);

// lambda has one weight per vertex of P, nonnegative, summing to one and
// supported on the cut-off vertices. The point is v_lambda = sum lambda_i v^i.
//
// sup{alpha >= 0 : delta.(v_lambda + alpha r^j) < delta0}; +inf when
// delta.r^j = 0. Requires a nonnegative cut.
ExtRat AlphaPrime(const VRep& p, const Cut& c, const Vec& lambda, std::size_t ray);
// Step along v^k - v_lambda to the cut hyperplane, for a satisfied vertex k.
// Always in (0, 1].
Rat BetaPrime(const VRep& p, const Cut& c, const Vec& lambda, std::size_t vertex);

// The values at lambda = e^i for every cut-off vertex i.
struct IntersectionProfile {
  std::map<std::pair<std::size_t, std::size_t>, ExtRat> alpha;  // (i, j)
  std::map<std::pair<std::size_t, std::size_t>, Rat> beta;      // (i, k)
};
IntersectionProfile ComputeIntersectionProfile(const VRep& p, const Cut& c);

// Generators of {x in P : delta.x >= delta0} from the satisfied vertices,
// the edge and ray crossings, and the rays of P.
VRep CutPolyhedronVertices(const VRep& p, const Cut& c);

// c1 dominates c2: both nonnegative with the same cut-off set and every
// reciprocal crossing value of c1 is at most that of c2. Throws kPrecondition
// if the cut-off sets differ or a cut is not nonnegative.
bool Dominates(const VRep& p, const Cut& c1, const Cut& c2);

struct DominanceCertificate {
  bool valid = false;
  // Set when valid: convex weights on the family and the combined cut.
  Vec weights;
  std::optional<Cut> combined;
  // Set when not valid: a point of P satisfying every family cut that
  // violates the candidate.
  std::optional<Vec> violating_point;
  Rat min_value;  // min delta.x over P cut by the family
};

// Decides whether the candidate is valid for P intersected with every family
// cut. All cuts must be nonnegative and cut off exactly `cut_off`.
DominanceCertificate ComputeDominanceCertificate(
    const VRep& p, const std::vector<std::size_t>& cut_off,
    const std::vector<Cut>& family, const Cut& candidate);

// For an integral cut, a rational point v = (p_m / q_m) and an integral ray
// r with delta.r > 0: g = prod q_m, s = g delta0 - sum_m d_m p_m delta_m with
// d_m = g / q_m, t = delta.r, so that the crossing step is s / (g t).
struct AlphaDecomposition {
  Int s;
  Int t;
  Int g;
};
AlphaDecomposition DecomposeAlpha(const Vec& v, const IntVec& r, const Cut& c);

}  // namespace latfree

#endif  // LATFREE_CUTS_H_
