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

// R(L, P) = closed convex hull of P minus int(L), computed two ways: from
// the vertices of P and the points where edges and rays leave L, and from a
// lifted disjunctive system projected by Fourier-Motzkin.

#ifndef LATFREE_RELAXATION_H_
#define LATFREE_RELAXATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "latfree/lattice_free.h"
#include "latfree/polyhedra.h"
#include "latfree/rational.h"

namespace latfree {

struct VertexPartition {
  std::vector<std::size_t> inside;   // vertices in int(L)
  std::vector<std::size_t> outside;  // the rest, boundary included
};
VertexPartition PartitionVertices(const SplitBody& body, const VRep& p);

// lambda_in has one weight per vertex of P, nonnegative, summing to one and
// supported on the inside vertices; v = sum lambda_i v^i.
//
// sup{alpha >= 0 : v + alpha r^j in L}, +inf if the ray never leaves L.
ExtRat AlphaBoundary(const SplitBody& body, const VRep& p, const Vec& lambda_in,
                     std::size_t ray);
// sup{beta >= 0 : v + beta (v^k - v) in L} for an outside vertex k; in (0, 1].
Rat BetaBoundary(const SplitBody& body, const VRep& p, const Vec& lambda_in,
                 std::size_t vertex);

// sum_j mu_j / alpha_j + sum_k eps_k / beta_k >= 1 on the lifted space of
// points v + sum eps_k (v^k - v) + sum mu_j r^j.
struct LiftedCut {
  Vec lambda;
  std::vector<ExtRat> alpha;       // per ray
  std::map<std::size_t, Rat> beta;  // per outside vertex
  Rat RayCoefficient(std::size_t j) const { return alpha.at(j).Reciprocal(); }
  Rat VertexCoefficient(std::size_t k) const { return Rat(1) / beta.at(k); }
};
LiftedCut ComputeIntersectionCut(const SplitBody& body, const VRep& p,
                                 const Vec& lambda_in);

struct IntersectionPoint {
  enum class Kind { kRay, kEdge };
  Kind kind = Kind::kRay;
  std::size_t from = 0;  // inside vertex
  std::size_t to = 0;    // ray index or outside vertex index
  Rat step;
  Vec point;
};

struct VertexRelaxation {
  VRep relaxation;  // canonical generators; empty if P lies in int(L)
  VertexPartition partition;
  std::vector<IntersectionPoint> points;  // every finite crossing
};

VertexRelaxation RelaxVerticesDetailed(const SplitBody& body, const VRep& p);
VRep RelaxVertices(const SplitBody& body, const VRep& p);

// Lifted system over (x, x^i, lambda^i), one copy per facet of L using the
// complementary halfspace, projected back to x. Canonical result. Throws
// kPrecondition unless the recession cone of L is a linear space.
//
// kPairwise merges the pieces one at a time, each merge a two-block lifted
// system; kSingleSystem projects one system with a block per facet. Both give
// the same set; the single system is much slower once L has three or more
// facets.
enum class BalasMode { kPairwise, kSingleSystem };
HRep RelaxBalas(const SplitBody& body, const VRep& p,
                BalasMode mode = BalasMode::kPairwise);

// True iff no vertex of P is in int(L), i.e. R(L, P) = P.
bool IsTrivial(const SplitBody& body, const VRep& p);

}  // namespace latfree

#endif  // LATFREE_RELAXATION_H_
