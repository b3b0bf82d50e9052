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

#include "latfree/closure.h"

#include <algorithm>
#include <deque>
#include <utility>

#include "latfree/error.h"
#include "latfree/lp.h"
#include "latfree/relaxation.h"

namespace latfree {

namespace {

Int Floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int Ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::vector<std::size_t> ContinuousVars(std::size_t dim,
                                        const std::vector<std::size_t>& ints) {
  std::vector<bool> is_int(dim, false);
  for (std::size_t c : ints) is_int[c] = true;
  std::vector<std::size_t> cont;
  for (std::size_t c = 0; c < dim; ++c) {
    if (!is_int[c]) cont.push_back(c);
  }
  return cont;
}

Vec Restrict(const Vec& x, const std::vector<std::size_t>& coords) {
  Vec out;
  out.reserve(coords.size());
  for (std::size_t c : coords) out.push_back(x[c]);
  return out;
}

// Row over the coordinates `coords` of a dim-dimensional space.
Vec Embed(const Vec& a, const std::vector<std::size_t>& coords, std::size_t dim) {
  Vec out(dim, Rat(0));
  for (std::size_t i = 0; i < coords.size(); ++i) out[coords[i]] = a[i];
  return out;
}

VRep EmptyVrep(const VRep& like) {
  VRep out;
  out.dim = like.dim;
  out.integer_vars = like.integer_vars;
  return out;
}

IterationRound MeasureRound(HRep h, const Cut& target) {
  IterationRound r;
  r.closure = std::move(h);
  if (IsCanonicalEmpty(r.closure)) {
    r.empty = true;
    r.max_violation = ExtRat(Rat(0));
    return r;
  }
  const LpOutcome o = Optimize(r.closure, target.delta, Sense::kMinimize);
  if (o.status == LpStatus::kUnbounded) {
    r.max_violation = ExtRat::Infinity();
  } else {
    r.min_value = o.optimum;
    r.max_violation = ExtRat(Rat(target.delta0 - o.optimum));
  }
  return r;
}

bool Holds(const IterationRound& r) { return r.max_violation <= ExtRat(Rat(0)); }

}  // namespace

BodyFamily::BodyFamily(std::vector<SplitBody> bodies, std::string label)
    : bodies_(std::move(bodies)), label_(std::move(label)), declared_width_(Rat(0)) {
  for (const SplitBody& b : bodies_) {
    const ExtRat w = MaxFacetWidth(b);
    if (w > declared_width_) declared_width_ = w;
  }
}

VRep Closure(const VRep& p, const BodyFamily& family, RelaxMethod method) {
  CheckVRep(p);
  if (p.IsEmpty()) return EmptyVrep(p);
  HRep all = VrepToHrep(p);
  for (const SplitBody& body : family.bodies()) {
    const HRep r = method == RelaxMethod::kVertices
                       ? VrepToHrep(RelaxVertices(body, p))
                       : RelaxBalas(body, p);
    if (IsCanonicalEmpty(r)) return EmptyVrep(p);
    all = Intersect(all, r);
  }
  VRep out = HrepToVrep(Canonicalize(all));
  out.integer_vars = p.integer_vars;
  return out;
}

std::vector<IntVec> SplitDirections(std::size_t num_integer, int bound) {
  if (bound < 1) Fail(ErrorKind::kInvalidInput, "coefficient bound must be at least 1");
  if (num_integer == 0) return {};
  std::vector<IntVec> out;
  IntVec v(num_integer, Int(-bound));
  for (;;) {
    // Primitive, first nonzero entry positive.
    std::size_t first = 0;
    while (first < num_integer && v[first] == 0) ++first;
    if (first < num_integer && v[first] > 0) {
      Int g(0);
      for (const Int& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
      if (g == 1) out.push_back(v);
    }
    std::size_t i = num_integer;
    while (i > 0 && v[i - 1] == bound) {
      v[i - 1] = -bound;
      --i;
    }
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

BodyFamily EnumerateSplitSets(std::size_t dim, const std::vector<std::size_t>& integer_vars,
                              int bound, const VRep* p, std::size_t budget) {
  if (p != nullptr) {
    CheckVRep(*p);
    if (p->dim != dim) Fail(ErrorKind::kDimensionMismatch, "instance dimension");
  }
  std::vector<SplitBody> bodies;
  auto add = [&](SplitBody b) {
    if (bodies.size() >= budget) {
      Fail(ErrorKind::kBudgetExceeded,
           "more than " + std::to_string(budget) + " split sets");
    }
    bodies.push_back(std::move(b));
  };
  for (const IntVec& dir : SplitDirections(integer_vars.size(), bound)) {
    IntVec pi(dim, Int(0));
    for (std::size_t i = 0; i < integer_vars.size(); ++i) pi[integer_vars[i]] = dir[i];
    if (p == nullptr) {
      add(MakeSplitSet(dim, integer_vars, pi, Int(0)));
      continue;
    }
    if (p->IsEmpty()) continue;
    const Vec a = ToRat(pi);
    Rat lo = Dot(a, p->vertices[0]), hi = lo;
    for (const Vec& v : p->vertices) {
      lo = std::min(lo, Dot(a, v));
      hi = std::max(hi, Dot(a, v));
    }
    for (Int pi0 = Floor(lo); pi0 <= Ceil(hi); ++pi0) {
      SplitBody s = MakeSplitSet(dim, integer_vars, pi, pi0);
      const bool useful = std::any_of(p->vertices.begin(), p->vertices.end(),
                                      [&](const Vec& v) { return s.StrictlyContains(v); });
      if (useful) add(std::move(s));
    }
  }
  return BodyFamily(std::move(bodies), "splits(bound=" + std::to_string(bound) + ")");
}

ClosureTrace IteratedClosure(const VRep& p, const BodyFamily& family, const Cut& target,
                             std::size_t max_rounds, RelaxMethod method) {
  CheckVRep(p);
  if (max_rounds < 1) Fail(ErrorKind::kInvalidInput, "max_rounds must be at least 1");
  if (target.delta.size() != p.dim) Fail(ErrorKind::kDimensionMismatch, "target size");
  ClosureTrace trace;
  trace.family_width = family.declared_width();
  VRep cur = p.IsEmpty() ? EmptyVrep(p) : CanonicalVrep(p);
  trace.rounds.push_back(
      MeasureRound(cur.IsEmpty() ? EmptyHRep(p.dim) : VrepToHrep(cur), target));
  if (Holds(trace.rounds.back())) {
    trace.proved = true;
    trace.stop = StopReason::kProved;
    return trace;
  }
  for (std::size_t k = 1; k <= max_rounds; ++k) {
    VRep next = Closure(cur, family, method);
    HRep h = next.IsEmpty() ? EmptyHRep(p.dim) : VrepToHrep(next);
    const bool same = h == trace.rounds.back().closure;
    trace.rounds.push_back(MeasureRound(std::move(h), target));
    trace.rounds_used = k;
    if (Holds(trace.rounds.back())) {
      trace.proved = true;
      trace.stop = StopReason::kProved;
      return trace;
    }
    if (same) {
      trace.stop = StopReason::kStalled;
      return trace;
    }
    cur = std::move(next);
  }
  trace.stop = StopReason::kRoundLimit;
  return trace;
}

TightProjection ProjectTight(const VRep& p, const Cut& c, std::size_t budget) {
  CheckVRep(p);
  if (c.delta.size() != p.dim) Fail(ErrorKind::kDimensionMismatch, "cut size");
  if (p.integer_vars.empty()) {
    Fail(ErrorKind::kInvalidInput, "instance has no integer variables");
  }
  const VRep hull = MixedIntegerHull(p, budget);
  if (hull.IsEmpty()) Fail(ErrorKind::kPrecondition, "instance has no mixed integer point");
  const LpOutcome best = Optimize(hull, c.delta, Sense::kMinimize);
  if (best.status != LpStatus::kOptimal) {
    Fail(ErrorKind::kPrecondition, "cut objective is unbounded over the integer hull");
  }
  if (best.optimum != c.delta0) {
    Fail(ErrorKind::kPrecondition, "delta0 is not the mixed integer minimum (which is " +
                                       FormatRat(best.optimum) + ")");
  }

  TightProjection out;
  out.outer = VrepToHrep(p);
  HRep t = out.outer;
  t.equalities.push_back({c.delta, c.delta0});
  out.px = Project(t, p.integer_vars);
  const ImplicitEqualities imp = FindImplicitEqualities(t);
  for (std::size_t k = 0; k < out.outer.inequalities.size(); ++k) {
    if (imp.implicit[k]) out.always_tight.push_back(k);
  }

  // Px must equal the hull of its integer points.
  VRep tv = HrepToVrep(t);
  tv.integer_vars = p.integer_vars;
  const VRep tight_hull = MixedIntegerHull(tv, budget);
  VRep shadow;
  shadow.dim = p.integer_vars.size();
  for (const Vec& v : tight_hull.vertices) shadow.vertices.push_back(Restrict(v, p.integer_vars));
  for (const Vec& r : tight_hull.rays) {
    Vec s = Restrict(r, p.integer_vars);
    if (!IsZero(s)) shadow.rays.push_back(std::move(s));
  }
  const HRep shadow_h = shadow.IsEmpty() ? EmptyHRep(shadow.dim) : VrepToHrep(shadow);
  if (shadow_h != out.px) {
    Fail(ErrorKind::kPrecondition,
         "projection of the optimal face is not the hull of its integer points");
  }
  return out;
}

std::vector<FaceRecord> ClassifyFaces(const VRep& p, const Cut& c,
                                      const TightProjection& tight, std::size_t budget) {
  CheckVRep(p);
  const std::vector<std::size_t>& ints = p.integer_vars;
  const std::vector<std::size_t> cont = ContinuousVars(p.dim, ints);
  const HRep& outer = tight.outer;
  std::vector<FaceRecord> faces;
  if (IsCanonicalEmpty(tight.px)) return faces;

  // Breadth-first facet fixing; canonical forms identify faces.
  std::vector<HRep> found = {tight.px};
  std::deque<std::size_t> queue = {0};
  while (!queue.empty()) {
    const HRep g = found[queue.front()];
    queue.pop_front();
    for (std::size_t k = 0; k < g.inequalities.size(); ++k) {
      HRep sub = g;
      sub.equalities.push_back(sub.inequalities[k]);
      sub.inequalities.erase(sub.inequalities.begin() + k);
      sub = Canonicalize(sub);
      if (IsCanonicalEmpty(sub)) continue;
      if (std::find(found.begin(), found.end(), sub) != found.end()) continue;
      if (found.size() >= budget) {
        Fail(ErrorKind::kBudgetExceeded, "more than " + std::to_string(budget) + " faces");
      }
      found.push_back(std::move(sub));
      queue.push_back(found.size() - 1);
    }
  }

  const Vec delta_y = Restrict(c.delta, cont);
  for (HRep& f : found) {
    FaceRecord rec;
    rec.face = std::move(f);
    // Lifted face: P, the cut at equality, and x in F.
    HRep lifted = outer;
    lifted.equalities.push_back({c.delta, c.delta0});
    for (const Halfspace& e : rec.face.equalities) {
      lifted.equalities.push_back({Embed(e.normal, ints, p.dim), e.offset});
    }
    for (const Halfspace& r : rec.face.inequalities) {
      lifted.inequalities.push_back({Embed(r.normal, ints, p.dim), r.offset});
    }
    const ImplicitEqualities imp = FindImplicitEqualities(lifted);
    if (!imp.feasible) Fail(ErrorKind::kInternal, "face of Px has an empty lift");
    for (std::size_t k = 0; k < outer.inequalities.size(); ++k) {
      if (imp.implicit[k]) rec.tight_rows.push_back(k);
    }

    // delta^y in cone{d_k : k tight} + span{d_e : e equality}?
    LinearProgram cone;
    const std::size_t nt = rec.tight_rows.size(), ne = outer.equalities.size();
    cone.num_vars = nt + ne;
    cone.nonnegative.assign(cone.num_vars, false);
    for (std::size_t k = 0; k < nt; ++k) cone.nonnegative[k] = true;
    for (std::size_t j = 0; j < cont.size(); ++j) {
      Vec row(cone.num_vars);
      for (std::size_t k = 0; k < nt; ++k) {
        row[k] = outer.inequalities[rec.tight_rows[k]].normal[cont[j]];
      }
      for (std::size_t e = 0; e < ne; ++e) row[nt + e] = outer.equalities[e].normal[cont[j]];
      cone.AddRow(std::move(row), Relation::kEqual, delta_y[j]);
    }
    const LpOutcome in_cone = SolveLp(cone);
    if (in_cone.status != LpStatus::kInfeasible) {
      rec.kind = FaceKind::kSafe;
      rec.certificate = in_cone.point;
      faces.push_back(std::move(rec));
      continue;
    }

    rec.kind = FaceKind::kViolated;
    // Fix x at a relative interior point of F and push y downhill.
    const Vec xbar = Restrict(imp.relative_interior, ints);
    HRep fiber = outer;
    for (std::size_t i = 0; i < ints.size(); ++i) {
      fiber.equalities.push_back({UnitVec(p.dim, ints[i]), xbar[i]});
    }
    const LpOutcome low = Optimize(fiber, c.delta, Sense::kMinimize);
    Vec point = low.point;
    if (low.status == LpStatus::kUnbounded) {
      const Rat gap = Dot(c.delta, point) - c.delta0;
      if (sgn(gap) >= 0) point = AddScaled(point, gap / -Dot(c.delta, low.ray) + 1, low.ray);
    } else if (low.status != LpStatus::kOptimal || low.optimum >= c.delta0) {
      Fail(ErrorKind::kInternal, "violated face without a violating point");
    }
    rec.violating_point = std::move(point);
    rec.lattice_free = LatticePointFree(rec.face, BoundingBox(rec.face)).lattice_free;
    if (!rec.lattice_free) {
      Fail(ErrorKind::kInternal, "violated face contains an integer point in its interior");
    }
    faces.push_back(std::move(rec));
  }
  return faces;
}

InequalityWidthSize WidthSizeOfInequality(const std::vector<FaceRecord>& faces,
                                          const BodyFamily& candidates) {
  InequalityWidthSize out;
  out.value = ExtRat(Rat(0));
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].kind != FaceKind::kViolated) continue;
    WidthSizeBound b = WidthSizeOverFamily(faces[i].face, candidates.bodies());
    if (b.value > out.value) out.value = b.value;
    out.per_face.emplace(i, std::move(b));
  }
  return out;
}

ProofTrace Prove(const VRep& p, const BodyFamily& family, const Cut& target,
                 std::size_t max_rounds, const BodyFamily* candidates, RelaxMethod method) {
  ProofTrace out;
  out.closure = IteratedClosure(p, family, target, max_rounds, method);
  try {
    out.tight = ProjectTight(p, target);
    out.faces = ClassifyFaces(p, target, *out.tight);
    out.width_size = WidthSizeOfInequality(out.faces, candidates ? *candidates : family);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kPrecondition && e.kind() != ErrorKind::kBudgetExceeded) {
      throw;
    }
    out.tight.reset();
    out.faces.clear();
    out.face_analysis_skipped = e.what();
  }
  return out;
}

ExampleMilp MakeExampleMilp(std::size_t p) {
  if (p < 1) Fail(ErrorKind::kInvalidInput, "p must be at least 1");
  const std::size_t n = p + 1;
  HRep h;
  h.dim = n;
  for (std::size_t i = 0; i < p; ++i) {
    Vec row(n, Rat(0));
    row[i] = 1;
    row[p] = -1;
    h.inequalities.push_back({std::move(row), Rat(0)});
  }
  h.inequalities.push_back({Vec(n, Rat(-1)), Rat(-static_cast<long>(p))});
  h.inequalities.push_back({UnitVec(n, p), Rat(0)});
  ExampleMilp ex;
  ex.hrep = Canonicalize(h);
  ex.vrep = HrepToVrep(ex.hrep);
  for (std::size_t i = 0; i < p; ++i) ex.vrep.integer_vars.push_back(i);
  ex.target = MakeCut(Scale(Rat(-1), UnitVec(n, p)), Rat(0));
  ex.body = MakeSimplexBody(p, n);
  return ex;
}

}  // namespace latfree
