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

#include <utility>

#include "latfree/error.h"

namespace latfree {

SplitBody::SplitBody(std::size_t dim, std::vector<std::size_t> integer_vars,
                     std::vector<BodyFacet> facets)
    : dim_(dim), integer_vars_(std::move(integer_vars)), facets_(std::move(facets)) {
  std::vector<bool> is_int(dim_, false);
  for (std::size_t i = 0; i < integer_vars_.size(); ++i) {
    const std::size_t c = integer_vars_[i];
    if (c >= dim_ || (i > 0 && c <= integer_vars_[i - 1])) {
      Fail(ErrorKind::kInvalidInput,
           "integer variables must be sorted, distinct and in range");
    }
    is_int[c] = true;
  }
  for (const BodyFacet& f : facets_) {
    if (f.normal.size() != dim_) {
      Fail(ErrorKind::kDimensionMismatch, "facet normal size differs from dimension");
    }
    bool nonzero = false;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (f.normal[c] == 0) continue;
      nonzero = true;
      if (!is_int[c]) {
        Fail(ErrorKind::kInvalidInput,
             "facet normal touches continuous coordinate " + std::to_string(c));
      }
    }
    if (!nonzero) Fail(ErrorKind::kInvalidInput, "zero facet normal");
  }
}

HRep SplitBody::Hrep() const {
  HRep h;
  h.dim = dim_;
  for (const BodyFacet& f : facets_) {
    h.inequalities.push_back(Halfspace{ToRat(f.normal), Rat(f.offset)});
  }
  return h;
}

HRep SplitBody::IntegerSpaceHrep() const {
  HRep h;
  h.dim = integer_vars_.size();
  for (const BodyFacet& f : facets_) {
    Vec a;
    for (std::size_t c : integer_vars_) a.emplace_back(f.normal[c]);
    h.inequalities.push_back(Halfspace{std::move(a), Rat(f.offset)});
  }
  return h;
}

Rat SplitBody::FacetSlack(std::size_t k, const Vec& x) const {
  const BodyFacet& f = facets_.at(k);
  if (x.size() != dim_) Fail(ErrorKind::kDimensionMismatch, "point size");
  Rat s = -Rat(f.offset);
  for (std::size_t c = 0; c < dim_; ++c) {
    if (f.normal[c] != 0) s += Rat(f.normal[c]) * x[c];
  }
  return s;
}

bool SplitBody::StrictlyContains(const Vec& x) const {
  for (std::size_t k = 0; k < facets_.size(); ++k) {
    if (sgn(FacetSlack(k, x)) <= 0) return false;
  }
  return true;
}

SplitBody MakeSplitSet(std::size_t dim, std::vector<std::size_t> integer_vars,
                       const IntVec& pi, const Int& pi0) {
  IntVec neg(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) neg[i] = -pi[i];
  return SplitBody(dim, std::move(integer_vars),
                   {BodyFacet{pi, pi0}, BodyFacet{neg, Int(-pi0 - 1)}});
}

SplitBody MakeSimplexBody(std::size_t p, std::size_t dim) {
  if (p == 0 || p > dim) Fail(ErrorKind::kInvalidInput, "need 0 < p <= dim");
  std::vector<std::size_t> ints;
  std::vector<BodyFacet> facets;
  IntVec sum(dim, Int(0));
  for (std::size_t i = 0; i < p; ++i) {
    ints.push_back(i);
    IntVec e(dim, Int(0));
    e[i] = 1;
    facets.push_back(BodyFacet{e, Int(0)});
    sum[i] = -1;
  }
  facets.push_back(BodyFacet{sum, Int(-static_cast<long>(p))});
  return SplitBody(dim, std::move(ints), std::move(facets));
}

ExtRat WidthAlong(const SplitBody& body, const Vec& v) {
  const HRep h = body.Hrep();
  const LpOutcome hi = Optimize(h, v, Sense::kMaximize);
  if (hi.status == LpStatus::kInfeasible) Fail(ErrorKind::kEmptyInput, "empty body");
  const LpOutcome lo = Optimize(h, v, Sense::kMinimize);
  if (hi.status == LpStatus::kUnbounded || lo.status == LpStatus::kUnbounded) {
    return ExtRat::Infinity();
  }
  return ExtRat(Rat(hi.optimum - lo.optimum));
}

std::vector<ExtRat> FacetWidths(const SplitBody& body) {
  std::vector<ExtRat> w;
  for (const BodyFacet& f : body.facets()) w.push_back(WidthAlong(body, ToRat(f.normal)));
  return w;
}

ExtRat MaxFacetWidth(const SplitBody& body) {
  ExtRat best(Rat(0));
  for (const ExtRat& w : FacetWidths(body)) {
    if (best < w) best = w;
  }
  return best;
}

bool HasLinearRecessionCone(const SplitBody& body) {
  HRep cone;
  cone.dim = body.dim();
  for (const BodyFacet& f : body.facets()) {
    cone.inequalities.push_back(Halfspace{ToRat(f.normal), Rat(0)});
  }
  for (std::size_t k = 0; k < body.facets().size(); ++k) {
    HRep capped = cone;
    const Vec a = ToRat(body.facets()[k].normal);
    capped.inequalities.push_back(Halfspace{Scale(Rat(-1), a), Rat(-1)});
    const LpOutcome out = Optimize(capped, a, Sense::kMaximize);
    if (out.status != LpStatus::kOptimal || sgn(out.optimum) > 0) return false;
  }
  return true;
}

namespace {

template <typename Pred>
LatticeFreeReport ScanBox(const IntegerBox& box, Pred inside) {
  LatticeFreeReport report;
  const std::size_t k = box.lower.size();
  if (box.upper.size() != k) Fail(ErrorKind::kDimensionMismatch, "box sizes differ");
  if (box.Count() == 0) return report;
  if (box.Count() > kDefaultEnumerationBudget) {
    Fail(ErrorKind::kBudgetExceeded, "box too large for the lattice scan");
  }
  IntVec z = box.lower;
  for (;;) {
    if (inside(ToRat(z))) {
      report.lattice_free = false;
      report.witness = z;
      return report;
    }
    std::size_t i = k;
    bool done = true;
    while (i > 0) {
      --i;
      if (z[i] < box.upper[i]) {
        ++z[i];
        done = false;
        break;
      }
      z[i] = box.lower[i];
    }
    if (done) return report;
  }
}

}  // namespace

LatticeFreeReport LatticePointFree(const SplitBody& body, const IntegerBox& box) {
  const HRep h = body.IntegerSpaceHrep();
  if (box.lower.size() != h.dim) {
    Fail(ErrorKind::kDimensionMismatch, "box size differs from integer variables");
  }
  return ScanBox(box, [&](const Vec& z) {
    for (const Halfspace& r : h.inequalities) {
      if (Dot(r.normal, z) <= r.offset) return false;
    }
    return true;
  });
}

LatticeFreeReport LatticePointFree(const HRep& q, const IntegerBox& box) {
  if (box.lower.size() != q.dim) Fail(ErrorKind::kDimensionMismatch, "box size");
  const HRep c = Canonicalize(q);
  if (IsCanonicalEmpty(c)) return LatticeFreeReport{};
  return ScanBox(box, [&](const Vec& z) {
    for (const Halfspace& r : c.equalities) {
      if (Dot(r.normal, z) != r.offset) return false;
    }
    for (const Halfspace& r : c.inequalities) {
      if (Dot(r.normal, z) <= r.offset) return false;
    }
    return true;
  });
}

IntegerBox BoundingBox(const HRep& q) {
  IntegerBox box;
  for (std::size_t c = 0; c < q.dim; ++c) {
    const Vec e = UnitVec(q.dim, c);
    const LpOutcome lo = Optimize(q, e, Sense::kMinimize);
    const LpOutcome hi = Optimize(q, e, Sense::kMaximize);
    if (lo.status == LpStatus::kInfeasible) {
      return IntegerBox{IntVec(q.dim, Int(1)), IntVec(q.dim, Int(0))};
    }
    if (lo.status != LpStatus::kOptimal || hi.status != LpStatus::kOptimal) {
      Fail(ErrorKind::kPrecondition, "unbounded polyhedron needs an explicit box");
    }
    Int l, u;
    mpz_cdiv_q(l.get_mpz_t(), lo.optimum.get_num_mpz_t(), lo.optimum.get_den_mpz_t());
    mpz_fdiv_q(u.get_mpz_t(), hi.optimum.get_num_mpz_t(), hi.optimum.get_den_mpz_t());
    box.lower.push_back(l);
    box.upper.push_back(u);
  }
  return box;
}

bool ContainsRelativeInterior(const HRep& q, const SplitBody& body) {
  const HRep l = body.IntegerSpaceHrep();
  if (q.dim != l.dim) Fail(ErrorKind::kDimensionMismatch, "q and body spaces differ");
  const ImplicitEqualities imp = FindImplicitEqualities(q);
  if (!imp.feasible) return true;
  // A relative interior point strictly inside plus q inside the body forces
  // the whole relative interior inside: a facet tight at a relative interior
  // point would be constant on q.
  for (const Halfspace& r : l.inequalities) {
    if (Dot(r.normal, imp.relative_interior) <= r.offset) return false;
  }
  for (const Halfspace& r : l.inequalities) {
    const LpOutcome out = Optimize(q, r.normal, Sense::kMinimize);
    if (out.status != LpStatus::kOptimal || out.optimum < r.offset) return false;
  }
  return true;
}

WidthSizeBound WidthSizeOverFamily(const HRep& q,
                                   const std::vector<SplitBody>& candidates) {
  WidthSizeBound best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!ContainsRelativeInterior(q, candidates[i])) continue;
    const ExtRat w = MaxFacetWidth(candidates[i]);
    if (!best.argmin || w < best.value) {
      best.value = w;
      best.argmin = i;
    }
  }
  return best;
}

}  // namespace latfree
