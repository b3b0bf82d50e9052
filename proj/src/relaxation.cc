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

#include <algorithm>

#include "latfree/error.h"

namespace latfree {

namespace {

void CheckPair(const SplitBody& body, const VRep& p) {
  CheckVRep(p);
  if (body.dim() != p.dim) {
    Fail(ErrorKind::kDimensionMismatch, "body and instance dimensions differ");
  }
  std::vector<bool> is_int(p.dim, false);
  for (std::size_t c : p.integer_vars) is_int[c] = true;
  for (std::size_t c : body.integer_vars()) {
    if (!is_int[c]) {
      Fail(ErrorKind::kInvalidInput,
           "body uses a coordinate that is continuous in the instance");
    }
  }
  if (p.IsEmpty()) Fail(ErrorKind::kEmptyInput, "instance has no vertices");
}

Vec InsidePoint(const SplitBody& body, const VRep& p, const Vec& lambda) {
  if (lambda.size() != p.vertices.size()) {
    Fail(ErrorKind::kDimensionMismatch, "lambda needs one weight per vertex");
  }
  Rat total(0);
  Vec x = ZeroVec(p.dim);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (sgn(lambda[i]) < 0) Fail(ErrorKind::kPrecondition, "negative weight");
    if (sgn(lambda[i]) == 0) continue;
    if (!body.StrictlyContains(p.vertices[i])) {
      Fail(ErrorKind::kPrecondition, "weight on a vertex outside int(L)");
    }
    total += lambda[i];
    x = AddScaled(x, lambda[i], p.vertices[i]);
  }
  if (total != 1) Fail(ErrorKind::kPrecondition, "weights must sum to one");
  return x;
}

// Largest step along d from an interior point x that stays in L.
ExtRat StepToBoundary(const SplitBody& body, const Vec& x, const Vec& d) {
  ExtRat best = ExtRat::Infinity();
  for (std::size_t k = 0; k < body.facets().size(); ++k) {
    const Vec a = ToRat(body.facets()[k].normal);
    const Rat rate = Dot(a, d);
    if (sgn(rate) >= 0) continue;
    best = Min(best, ExtRat(Rat(body.FacetSlack(k, x) / -rate)));
  }
  return best;
}

}  // namespace

VertexPartition PartitionVertices(const SplitBody& body, const VRep& p) {
  CheckPair(body, p);
  VertexPartition part;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    (body.StrictlyContains(p.vertices[i]) ? part.inside : part.outside).push_back(i);
  }
  return part;
}

ExtRat AlphaBoundary(const SplitBody& body, const VRep& p, const Vec& lambda_in,
                     std::size_t ray) {
  CheckPair(body, p);
  const Vec x = InsidePoint(body, p, lambda_in);
  return StepToBoundary(body, x, p.rays.at(ray));
}

Rat BetaBoundary(const SplitBody& body, const VRep& p, const Vec& lambda_in,
                 std::size_t vertex) {
  CheckPair(body, p);
  const Vec x = InsidePoint(body, p, lambda_in);
  const Vec& vk = p.vertices.at(vertex);
  if (body.StrictlyContains(vk)) Fail(ErrorKind::kPrecondition, "vertex is inside int(L)");
  // v^k is outside int(L), so the step is finite and at most one.
  return StepToBoundary(body, x, Sub(vk, x)).value();
}

LiftedCut ComputeIntersectionCut(const SplitBody& body, const VRep& p,
                                 const Vec& lambda_in) {
  const VertexPartition part = PartitionVertices(body, p);
  LiftedCut cut;
  cut.lambda = lambda_in;
  for (std::size_t j = 0; j < p.rays.size(); ++j) {
    cut.alpha.push_back(AlphaBoundary(body, p, lambda_in, j));
  }
  for (std::size_t k : part.outside) {
    cut.beta.emplace(k, BetaBoundary(body, p, lambda_in, k));
  }
  return cut;
}

VertexRelaxation RelaxVerticesDetailed(const SplitBody& body, const VRep& p) {
  VertexRelaxation out;
  out.partition = PartitionVertices(body, p);
  out.relaxation.dim = p.dim;
  out.relaxation.integer_vars = p.integer_vars;
  if (out.partition.inside.empty()) {
    out.relaxation = CanonicalVrep(p);
    return out;
  }
  std::vector<Vec> cand;
  for (std::size_t k : out.partition.outside) cand.push_back(p.vertices[k]);
  for (std::size_t i : out.partition.inside) {
    const Vec& vi = p.vertices[i];
    for (std::size_t k : out.partition.outside) {
      const Vec d = Sub(p.vertices[k], vi);
      const Rat beta = StepToBoundary(body, vi, d).value();
      Vec x = AddScaled(vi, beta, d);
      out.points.push_back({IntersectionPoint::Kind::kEdge, i, k, beta, x});
      cand.push_back(std::move(x));
    }
    for (std::size_t j = 0; j < p.rays.size(); ++j) {
      const ExtRat alpha = StepToBoundary(body, vi, p.rays[j]);
      if (alpha.is_infinite()) continue;
      Vec x = AddScaled(vi, alpha.value(), p.rays[j]);
      out.points.push_back({IntersectionPoint::Kind::kRay, i, j, alpha.value(), x});
      cand.push_back(std::move(x));
    }
  }
  std::vector<Vec> rays;
  for (const Vec& r : p.rays) rays.push_back(PrimitiveIntegral(r));
  std::sort(rays.begin(), rays.end());
  out.relaxation.vertices = FilterExtremePoints(std::move(cand), rays);
  std::sort(out.relaxation.vertices.begin(), out.relaxation.vertices.end());
  if (!out.relaxation.vertices.empty()) out.relaxation.rays = std::move(rays);
  return out;
}

VRep RelaxVertices(const SplitBody& body, const VRep& p) {
  return RelaxVerticesDetailed(body, p).relaxation;
}

namespace {

// P intersected with the closed complement of facet k of L.
HRep ComplementPiece(const HRep& ph, const BodyFacet& f) {
  HRep piece = ph;
  piece.inequalities.push_back({Scale(Rat(-1), ToRat(f.normal)), Rat(-f.offset)});
  return piece;
}

// Rows of h over x, homogenized with weight column `lambda` and copied into
// the columns starting at `first` of a `total`-variable system.
Halfspace Homogenize(const Halfspace& h, std::size_t first, std::size_t lambda,
                     std::size_t total) {
  Vec row(total, Rat(0));
  for (std::size_t c = 0; c < h.normal.size(); ++c) row[first + c] = h.normal[c];
  row[lambda] = -h.offset;
  return Halfspace{std::move(row), Rat(0)};
}

// One lifted system for all pieces: x = sum x^i, sum lambda_i = 1, x^i in
// lambda_i * piece_i, lambda >= 0.
HRep LiftedProjection(const std::vector<HRep>& pieces, std::size_t n) {
  const std::size_t m = pieces.size();
  const std::size_t block = n + 1;
  const std::size_t total = n + m * block;
  HRep lifted;
  lifted.dim = total;
  for (std::size_t c = 0; c < n; ++c) {
    Vec row(total, Rat(0));
    row[c] = 1;
    for (std::size_t i = 0; i < m; ++i) row[n + i * block + c] = -1;
    lifted.equalities.push_back({std::move(row), Rat(0)});
  }
  Vec sum(total, Rat(0));
  for (std::size_t i = 0; i < m; ++i) sum[n + i * block + n] = 1;
  lifted.equalities.push_back({std::move(sum), Rat(1)});
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t first = n + i * block, lambda = first + n;
    for (const Halfspace& h : pieces[i].equalities) {
      lifted.equalities.push_back(Homogenize(h, first, lambda, total));
    }
    for (const Halfspace& h : pieces[i].inequalities) {
      lifted.inequalities.push_back(Homogenize(h, first, lambda, total));
    }
    lifted.inequalities.push_back({UnitVec(total, lambda), Rat(0)});
  }
  std::vector<std::size_t> keep(n);
  for (std::size_t c = 0; c < n; ++c) keep[c] = c;
  return Project(lifted, keep);
}

}  // namespace

HRep RelaxBalas(const SplitBody& body, const VRep& p, BalasMode mode) {
  CheckPair(body, p);
  if (!HasLinearRecessionCone(body)) {
    Fail(ErrorKind::kPrecondition, "body recession cone is not a linear space");
  }
  const HRep ph = VrepToHrep(p);
  std::vector<HRep> pieces;
  for (const BodyFacet& f : body.facets()) pieces.push_back(ComplementPiece(ph, f));
  if (mode == BalasMode::kSingleSystem) return LiftedProjection(pieces, p.dim);

  // cl conv of a union is associative. An empty piece only adds recession
  // directions of P, and a nonempty R(L, P) already recedes along all of
  // rec(P) because rec(L) is a linear space. So the nonempty pieces are
  // folded in one at a time.
  std::optional<HRep> acc;
  for (const HRep& piece : pieces) {
    if (!IsFeasible(piece)) continue;
    acc = acc ? LiftedProjection({*acc, piece}, p.dim) : Canonicalize(piece);
  }
  return acc ? *acc : EmptyHRep(p.dim);
}

bool IsTrivial(const SplitBody& body, const VRep& p) {
  return PartitionVertices(body, p).inside.empty();
}

}  // namespace latfree
