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

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <utility>

#include "latfree/error.h"
#include "latfree/linalg.h"

namespace latfree {

bool operator<(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

std::ostream& operator<<(std::ostream& os, const Halfspace& h) {
  return os << "(" << FormatVec(h.normal) << ", " << FormatRat(h.offset) << ")";
}

std::ostream& operator<<(std::ostream& os, const HRep& h) {
  os << "HRep(dim " << h.dim << ")";
  for (const Halfspace& e : h.equalities) {
    os << "\n  " << FormatVec(e.normal) << " . x = " << FormatRat(e.offset);
  }
  for (const Halfspace& r : h.inequalities) {
    os << "\n  " << FormatVec(r.normal) << " . x >= " << FormatRat(r.offset);
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const VRep& v) {
  os << "VRep(dim " << v.dim << ")";
  for (const Vec& x : v.vertices) os << "\n  vertex " << FormatVec(x);
  for (const Vec& r : v.rays) os << "\n  ray " << FormatVec(r);
  return os;
}

HRep EmptyHRep(std::size_t dim) {
  HRep h;
  h.dim = dim;
  h.inequalities.push_back(Halfspace{ZeroVec(dim), Rat(1)});
  return h;
}

HRep WholeSpace(std::size_t dim) {
  HRep h;
  h.dim = dim;
  return h;
}

bool IsCanonicalEmpty(const HRep& h) {
  return h.equalities.empty() && h.inequalities.size() == 1 &&
         IsZero(h.inequalities[0].normal) && h.inequalities[0].offset == 1;
}

void CheckHRep(const HRep& h) {
  for (const auto* rows : {&h.equalities, &h.inequalities}) {
    for (const Halfspace& r : *rows) {
      if (r.normal.size() != h.dim) {
        Fail(ErrorKind::kDimensionMismatch, "row size differs from dimension");
      }
    }
  }
}

void CheckVRep(const VRep& v) {
  for (const auto* gens : {&v.vertices, &v.rays}) {
    for (const Vec& g : *gens) {
      if (g.size() != v.dim) {
        Fail(ErrorKind::kDimensionMismatch,
             "generator size differs from dimension");
      }
    }
  }
  for (std::size_t i = 0; i < v.integer_vars.size(); ++i) {
    if (v.integer_vars[i] >= v.dim ||
        (i > 0 && v.integer_vars[i] <= v.integer_vars[i - 1])) {
      Fail(ErrorKind::kInvalidInput,
           "integer variables must be sorted, distinct and in range");
    }
  }
}

LinearProgram ToLinearProgram(const HRep& h) {
  CheckHRep(h);
  LinearProgram lp;
  lp.num_vars = h.dim;
  for (const Halfspace& r : h.equalities) {
    lp.AddRow(r.normal, Relation::kEqual, r.offset);
  }
  for (const Halfspace& r : h.inequalities) {
    lp.AddRow(r.normal, Relation::kGreaterEqual, r.offset);
  }
  return lp;
}

LpOutcome Optimize(const HRep& h, const Vec& objective, Sense sense) {
  LinearProgram lp = ToLinearProgram(h);
  lp.objective = objective;
  lp.sense = sense;
  return SolveLp(lp);
}

namespace {

// Variables (lambda, mu) for conv(vertices) + cone(rays); the point is
// sum lambda v + sum mu r.
LinearProgram GeneratorLp(const VRep& v) {
  LinearProgram lp;
  const std::size_t nv = v.vertices.size(), nr = v.rays.size();
  lp.num_vars = nv + nr;
  lp.nonnegative.assign(nv + nr, true);
  Vec ones(nv + nr, Rat(0));
  for (std::size_t i = 0; i < nv; ++i) ones[i] = 1;
  lp.AddRow(ones, Relation::kEqual, Rat(1));
  return lp;
}

Vec GeneratorPoint(const VRep& v, const Vec& weights) {
  Vec x = ZeroVec(v.dim);
  const std::size_t nv = v.vertices.size();
  for (std::size_t i = 0; i < nv; ++i) x = AddScaled(x, weights[i], v.vertices[i]);
  for (std::size_t j = 0; j < v.rays.size(); ++j) {
    x = AddScaled(x, weights[nv + j], v.rays[j]);
  }
  return x;
}

}  // namespace

LpOutcome Optimize(const VRep& v, const Vec& objective, Sense sense) {
  CheckVRep(v);
  if (v.IsEmpty()) return LpOutcome{};
  LinearProgram lp = GeneratorLp(v);
  lp.sense = sense;
  lp.objective.resize(lp.num_vars);
  const std::size_t nv = v.vertices.size();
  for (std::size_t i = 0; i < nv; ++i) lp.objective[i] = Dot(objective, v.vertices[i]);
  for (std::size_t j = 0; j < v.rays.size(); ++j) {
    lp.objective[nv + j] = Dot(objective, v.rays[j]);
  }
  LpOutcome out = SolveLp(lp);
  if (out.status == LpStatus::kInfeasible) return out;
  if (out.status == LpStatus::kUnbounded) {
    Vec ray = ZeroVec(v.dim);
    for (std::size_t j = 0; j < v.rays.size(); ++j) {
      ray = AddScaled(ray, out.ray[nv + j], v.rays[j]);
    }
    out.ray = std::move(ray);
  }
  out.point = GeneratorPoint(v, out.point);
  return out;
}

bool IsFeasible(const HRep& h) {
  return SolveLp(ToLinearProgram(h)).status != LpStatus::kInfeasible;
}

bool Contains(const HRep& h, const Vec& x) {
  CheckHRep(h);
  if (x.size() != h.dim) Fail(ErrorKind::kDimensionMismatch, "point size");
  for (const Halfspace& r : h.equalities) {
    if (Dot(r.normal, x) != r.offset) return false;
  }
  for (const Halfspace& r : h.inequalities) {
    if (Dot(r.normal, x) < r.offset) return false;
  }
  return true;
}

bool InRecessionCone(const HRep& h, const Vec& r) {
  if (r.size() != h.dim) Fail(ErrorKind::kDimensionMismatch, "ray size");
  for (const Halfspace& e : h.equalities) {
    if (sgn(Dot(e.normal, r)) != 0) return false;
  }
  for (const Halfspace& e : h.inequalities) {
    if (sgn(Dot(e.normal, r)) < 0) return false;
  }
  return true;
}

bool Contains(const VRep& v, const Vec& x) {
  CheckVRep(v);
  if (x.size() != v.dim) Fail(ErrorKind::kDimensionMismatch, "point size");
  if (v.IsEmpty()) return false;
  LinearProgram lp = GeneratorLp(v);
  const std::size_t nv = v.vertices.size();
  for (std::size_t c = 0; c < v.dim; ++c) {
    Vec row(lp.num_vars);
    for (std::size_t i = 0; i < nv; ++i) row[i] = v.vertices[i][c];
    for (std::size_t j = 0; j < v.rays.size(); ++j) row[nv + j] = v.rays[j][c];
    lp.AddRow(std::move(row), Relation::kEqual, x[c]);
  }
  return SolveLp(lp).status != LpStatus::kInfeasible;
}

bool IsSubset(const VRep& a, const HRep& b) {
  if (a.dim != b.dim) Fail(ErrorKind::kDimensionMismatch, "dimensions differ");
  if (a.IsEmpty()) return true;
  for (const Vec& x : a.vertices) {
    if (!Contains(b, x)) return false;
  }
  for (const Vec& r : a.rays) {
    if (!InRecessionCone(b, r)) return false;
  }
  return true;
}

ImplicitEqualities FindImplicitEqualities(const HRep& h) {
  CheckHRep(h);
  const std::size_t n = h.dim, m = h.inequalities.size();
  // Variables: x (free), t, s_1..s_m.
  LinearProgram lp;
  lp.num_vars = n + 1 + m;
  lp.nonnegative.assign(lp.num_vars, true);
  for (std::size_t c = 0; c < n; ++c) lp.nonnegative[c] = false;
  lp.objective.assign(lp.num_vars, Rat(0));
  for (std::size_t k = 0; k < m; ++k) lp.objective[n + 1 + k] = 1;
  lp.sense = Sense::kMaximize;
  for (const Halfspace& e : h.equalities) {
    Vec row(lp.num_vars);
    for (std::size_t c = 0; c < n; ++c) row[c] = e.normal[c];
    row[n] = -e.offset;
    lp.AddRow(std::move(row), Relation::kEqual, Rat(0));
  }
  for (std::size_t k = 0; k < m; ++k) {
    const Halfspace& r = h.inequalities[k];
    Vec row(lp.num_vars);
    for (std::size_t c = 0; c < n; ++c) row[c] = r.normal[c];
    row[n] = -r.offset;
    row[n + 1 + k] = -1;
    lp.AddRow(std::move(row), Relation::kGreaterEqual, Rat(0));
    lp.AddRow(UnitVec(lp.num_vars, n + 1 + k), Relation::kLessEqual, Rat(1));
  }
  lp.AddRow(UnitVec(lp.num_vars, n), Relation::kGreaterEqual, Rat(1));
  const LpOutcome out = SolveLp(lp);
  ImplicitEqualities result;
  if (out.status == LpStatus::kInfeasible) return result;
  if (out.status != LpStatus::kOptimal) {
    Fail(ErrorKind::kInternal, "implicit equality LP is unbounded");
  }
  result.feasible = true;
  result.implicit.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    result.implicit[k] = sgn(out.point[n + 1 + k]) == 0;
  }
  const Rat inv_t = Rat(1) / out.point[n];
  result.relative_interior.resize(n);
  for (std::size_t c = 0; c < n; ++c) result.relative_interior[c] = out.point[c] * inv_t;
  return result;
}

HRep NormalizeIrredundant(const HRep& h) {
  CheckHRep(h);
  const std::size_t n = h.dim;
  Matrix eq_rows;
  for (const Halfspace& e : h.equalities) {
    Vec row = e.normal;
    row.push_back(e.offset);
    eq_rows.push_back(std::move(row));
  }
  const Echelon ech = ReducedRowEchelon(eq_rows);
  HRep out;
  out.dim = n;
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    if (ech.pivots[r] == n) return EmptyHRep(n);  // 0 = nonzero
    Vec prim = PrimitiveIntegral(ech.rows[r]);
    Rat offset = prim.back();
    prim.pop_back();
    out.equalities.push_back(Halfspace{std::move(prim), std::move(offset)});
  }
  std::map<Vec, Rat> best;  // normal -> strongest offset
  for (const Halfspace& in : h.inequalities) {
    Vec row = in.normal;
    row.push_back(in.offset);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      const std::size_t p = ech.pivots[r];
      if (sgn(row[p]) != 0) row = AddScaled(row, -row[p], ech.rows[r]);
    }
    row = PrimitiveIntegral(row);
    Rat offset = row.back();
    row.pop_back();
    if (IsZero(row)) {
      if (sgn(offset) > 0) return EmptyHRep(n);
      continue;
    }
    auto it = best.find(row);
    if (it == best.end()) {
      best.emplace(std::move(row), std::move(offset));
    } else if (it->second < offset) {
      it->second = std::move(offset);
    }
  }
  for (auto& [normal, offset] : best) {
    out.inequalities.push_back(Halfspace{normal, offset});
  }
  return out;  // std::map iteration order is the lexicographic order
}

namespace {

// Row `target` is implied iff max{sum y_k b_k + sum z_e e_e :
// sum y_k a_k + sum z_e E_e = a_target, y >= 0} >= b_target, with k ranging
// over `others`.
bool ImpliedByDual(std::size_t n, const std::vector<Halfspace>& eqs,
                   const std::vector<const Halfspace*>& others,
                   const Halfspace& target) {
  const std::size_t ny = others.size(), nz = eqs.size();
  LinearProgram lp;
  lp.num_vars = ny + nz;
  lp.nonnegative.assign(lp.num_vars, false);
  for (std::size_t k = 0; k < ny; ++k) lp.nonnegative[k] = true;
  lp.sense = Sense::kMaximize;
  lp.objective.resize(lp.num_vars);
  for (std::size_t k = 0; k < ny; ++k) lp.objective[k] = others[k]->offset;
  for (std::size_t e = 0; e < nz; ++e) lp.objective[ny + e] = eqs[e].offset;
  for (std::size_t c = 0; c < n; ++c) {
    Vec row(lp.num_vars);
    for (std::size_t k = 0; k < ny; ++k) row[k] = others[k]->normal[c];
    for (std::size_t e = 0; e < nz; ++e) row[ny + e] = eqs[e].normal[c];
    lp.AddRow(std::move(row), Relation::kEqual, target.normal[c]);
  }
  const LpOutcome out = SolveLp(lp);
  // Unbounded dual means an empty primal, which callers rule out.
  return out.status == LpStatus::kUnbounded ||
         (out.status == LpStatus::kOptimal && out.optimum >= target.offset);
}

// Irredundant subset of `ineqs` by Clarkson's method. `interior` satisfies
// the equalities and every row of `ineqs` strictly. Each row is tested by an
// LP against the rows already known to be facets; a violating point found by
// that LP is joined to `interior`, and the first row the segment crosses is a
// facet. A tie at the crossing falls back to one LP against all live rows.
std::vector<Halfspace> RemoveRedundant(std::size_t n,
                                       const std::vector<Halfspace>& eqs,
                                       const std::vector<Halfspace>& ineqs,
                                       const Vec& interior) {
  enum class State { kUnknown, kKept, kDropped };
  const std::size_t m = ineqs.size();
  std::vector<State> state(m, State::kUnknown);
  std::vector<Rat> slack(m);
  for (std::size_t k = 0; k < m; ++k) {
    slack[k] = Dot(ineqs[k].normal, interior) - ineqs[k].offset;
    if (sgn(slack[k]) <= 0) Fail(ErrorKind::kInternal, "interior point is not interior");
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m; ++i) {
    while (state[i] == State::kUnknown) {
      LinearProgram lp;
      lp.num_vars = n;
      lp.sense = Sense::kMinimize;
      lp.objective = ineqs[i].normal;
      for (const Halfspace& e : eqs) lp.AddRow(e.normal, Relation::kEqual, e.offset);
      for (std::size_t k : kept) {
        lp.AddRow(ineqs[k].normal, Relation::kGreaterEqual, ineqs[k].offset);
      }
      const LpOutcome out = SolveLp(lp);
      if (out.status == LpStatus::kInfeasible) {
        Fail(ErrorKind::kInternal, "redundancy LP lost its interior point");
      }
      if (out.status == LpStatus::kOptimal && out.optimum >= ineqs[i].offset) {
        state[i] = State::kDropped;
        break;
      }
      Vec x = out.point;
      if (out.status == LpStatus::kUnbounded) {
        const Rat rate = Dot(ineqs[i].normal, out.ray);
        const Rat gap = Dot(ineqs[i].normal, x) - ineqs[i].offset;
        if (sgn(gap) >= 0) x = AddScaled(x, gap / -rate + 1, out.ray);
      }
      // First live row crossed on the segment from interior to x.
      std::optional<std::size_t> hit;
      Rat best;
      bool tie = false;
      for (std::size_t k = 0; k < m; ++k) {
        if (state[k] == State::kDropped) continue;
        const Rat d = Dot(ineqs[k].normal, x) - ineqs[k].offset;
        if (sgn(d) >= 0) continue;
        const Rat t = slack[k] / (slack[k] - d);
        if (!hit || t < best) {
          hit = k;
          best = t;
          tie = false;
        } else if (t == best) {
          tie = true;
        }
      }
      if (!hit) Fail(ErrorKind::kInternal, "ray shooting found no row");
      if (tie) {
        std::vector<const Halfspace*> others;
        for (std::size_t k = 0; k < m; ++k) {
          if (k != i && state[k] != State::kDropped) others.push_back(&ineqs[k]);
        }
        state[i] = ImpliedByDual(n, eqs, others, ineqs[i]) ? State::kDropped
                                                           : State::kKept;
        if (state[i] == State::kKept) kept.push_back(i);
        break;
      }
      state[*hit] = State::kKept;
      kept.push_back(*hit);
    }
  }
  std::vector<Halfspace> out;
  for (std::size_t k = 0; k < m; ++k) {
    if (state[k] == State::kKept) out.push_back(ineqs[k]);
  }
  return out;
}

}  // namespace

HRep Canonicalize(const HRep& h) {
  CheckHRep(h);
  const ImplicitEqualities imp = FindImplicitEqualities(h);
  if (!imp.feasible) return EmptyHRep(h.dim);
  HRep split;
  split.dim = h.dim;
  split.equalities = h.equalities;
  for (std::size_t k = 0; k < h.inequalities.size(); ++k) {
    if (imp.implicit[k]) {
      split.equalities.push_back(h.inequalities[k]);
    } else {
      split.inequalities.push_back(h.inequalities[k]);
    }
  }
  HRep normal = NormalizeIrredundant(split);
  normal.inequalities = RemoveRedundant(h.dim, normal.equalities,
                                        normal.inequalities, imp.relative_interior);
  return normal;
}

std::vector<Vec> ConeExtremeRays(std::size_t dim, const std::vector<Vec>& ineqs,
                                 const std::vector<Vec>& eqs) {
  for (const auto* rows : {&ineqs, &eqs}) {
    for (const Vec& r : *rows) {
      if (r.size() != dim) Fail(ErrorKind::kDimensionMismatch, "cone row size");
    }
  }
  const Matrix basis = NullSpace(eqs, dim);
  const std::size_t k = basis.size();
  if (k == 0) return {};
  Matrix b;
  for (const Vec& a : ineqs) {
    Vec row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = Dot(a, basis[c]);
    if (!IsZero(row)) b.push_back(std::move(row));
  }
  const std::vector<std::size_t> init = IndependentRows(b);
  if (init.size() < k) Fail(ErrorKind::kNotPointed, "cone contains a line");
  const std::size_t m = b.size();

  Matrix b0;
  for (std::size_t i : init) b0.push_back(b[i]);
  const Matrix inv = Inverse(b0);

  struct Ray {
    Vec z;
    std::vector<bool> zero;  // over rows of b
  };
  std::vector<Ray> rays;
  for (std::size_t c = 0; c < k; ++c) {
    Ray r{Vec(k), std::vector<bool>(m, false)};
    for (std::size_t i = 0; i < k; ++i) r.z[i] = inv[i][c];
    r.z = PrimitiveIntegral(r.z);
    for (std::size_t i = 0; i < k; ++i) r.zero[init[i]] = (i != c);
    rays.push_back(std::move(r));
  }
  std::vector<bool> in_init(m, false);
  for (std::size_t i : init) in_init[i] = true;

  const long need = static_cast<long>(k) - 2;
  for (std::size_t h = 0; h < m; ++h) {
    if (in_init[h]) continue;
    std::vector<Rat> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = Dot(b[h], rays[r].z);
      if (sgn(s[r]) > 0) pos.push_back(r);
      if (sgn(s[r]) < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (sgn(s[r]) == 0) rays[r].zero[h] = true;
      }
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        std::vector<bool> common(m);
        long count = 0;
        for (std::size_t i = 0; i < m; ++i) {
          common[i] = rays[p].zero[i] && rays[q].zero[i];
          count += common[i];
        }
        if (count < need) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          bool superset = true;
          for (std::size_t i = 0; i < m; ++i) {
            if (common[i] && !rays[o].zero[i]) {
              superset = false;
              break;
            }
          }
          if (superset) adjacent = false;
        }
        if (!adjacent) continue;
        Vec z = Add(Scale(s[p], rays[q].z), Scale(-s[q], rays[p].z));
        common[h] = true;
        next.push_back(Ray{PrimitiveIntegral(z), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sgn(s[r]) < 0) continue;
      if (sgn(s[r]) == 0) rays[r].zero[h] = true;
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  std::vector<Vec> out;
  out.reserve(rays.size());
  for (const Ray& r : rays) {
    Vec y = ZeroVec(dim);
    for (std::size_t c = 0; c < k; ++c) y = AddScaled(y, r.z[c], basis[c]);
    out.push_back(PrimitiveIntegral(y));
  }
  return out;
}

HRep VrepToHrep(const VRep& v) {
  CheckVRep(v);
  const std::size_t n = v.dim;
  if (v.IsEmpty()) return EmptyHRep(n);
  // Inequalities a.x >= -c correspond to (a, c) with a.v + c >= 0 and a.r >= 0.
  Matrix g;
  for (const Vec& x : v.vertices) {
    Vec row = x;
    row.push_back(Rat(1));
    g.push_back(std::move(row));
  }
  for (const Vec& r : v.rays) {
    Vec row = r;
    row.push_back(Rat(0));
    g.push_back(std::move(row));
  }
  const Matrix lineality = NullSpace(g, n + 1);
  HRep h;
  h.dim = n;
  for (const Vec& l : lineality) {
    Vec a(l.begin(), l.begin() + n);
    h.equalities.push_back(Halfspace{std::move(a), -l[n]});
  }
  for (const Vec& y : ConeExtremeRays(n + 1, g, lineality)) {
    Vec a(y.begin(), y.begin() + n);
    h.inequalities.push_back(Halfspace{std::move(a), -y[n]});
  }
  return NormalizeIrredundant(h);
}

VRep HrepToVrep(const HRep& h) {
  CheckHRep(h);
  const std::size_t n = h.dim;
  VRep v;
  v.dim = n;
  if (!IsFeasible(h)) return v;
  std::vector<Vec> ineqs, eqs;
  for (const Halfspace& r : h.inequalities) {
    Vec row = r.normal;
    row.push_back(-r.offset);
    ineqs.push_back(std::move(row));
  }
  ineqs.push_back(UnitVec(n + 1, n));
  for (const Halfspace& r : h.equalities) {
    Vec row = r.normal;
    row.push_back(-r.offset);
    eqs.push_back(std::move(row));
  }
  for (const Vec& y : ConeExtremeRays(n + 1, ineqs, eqs)) {
    Vec x(y.begin(), y.begin() + n);
    if (sgn(y[n]) == 0) {
      v.rays.push_back(std::move(x));
    } else {
      v.vertices.push_back(Scale(Rat(1) / y[n], x));
    }
  }
  std::sort(v.vertices.begin(), v.vertices.end());
  std::sort(v.rays.begin(), v.rays.end());
  return v;
}

VRep CanonicalVrep(const VRep& v) {
  VRep out = HrepToVrep(VrepToHrep(v));
  out.integer_vars = v.integer_vars;
  return out;
}

namespace {

struct FmRow {
  Vec a;
  Rat b;
  std::vector<bool> history;
};

constexpr std::size_t kFmRedundancyThreshold = 16;

}  // namespace

HRep Project(const HRep& h, const std::vector<std::size_t>& keep) {
  CheckHRep(h);
  const std::size_t n = h.dim;
  std::vector<bool> kept(n, false);
  for (std::size_t c : keep) {
    if (c >= n || kept[c]) Fail(ErrorKind::kInvalidInput, "bad projection index");
    kept[c] = true;
  }
  auto project_rows = [&](const std::vector<Halfspace>& eqs,
                          const std::vector<FmRow>& ineqs) {
    HRep out;
    out.dim = keep.size();
    auto shrink = [&](const Vec& a) {
      Vec r;
      for (std::size_t c : keep) r.push_back(a[c]);
      return r;
    };
    for (const Halfspace& e : eqs) out.equalities.push_back({shrink(e.normal), e.offset});
    for (const FmRow& r : ineqs) out.inequalities.push_back({shrink(r.a), r.b});
    return Canonicalize(out);
  };

  // Eliminate through equalities first.
  std::vector<Halfspace> eqs = h.equalities;
  std::vector<Halfspace> ineq_rows = h.inequalities;
  for (;;) {
    std::size_t which = eqs.size(), col = n;
    for (std::size_t e = 0; e < eqs.size() && which == eqs.size(); ++e) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!kept[c] && sgn(eqs[e].normal[c]) != 0) {
          which = e;
          col = c;
          break;
        }
      }
    }
    if (which == eqs.size()) break;
    const Halfspace piv = eqs[which];
    eqs.erase(eqs.begin() + which);
    auto substitute = [&](Halfspace& r) {
      if (sgn(r.normal[col]) == 0) return;
      const Rat f = r.normal[col] / piv.normal[col];
      r.normal = AddScaled(r.normal, -f, piv.normal);
      r.offset -= f * piv.offset;
    };
    for (Halfspace& e : eqs) substitute(e);
    for (Halfspace& r : ineq_rows) substitute(r);
  }
  for (const Halfspace& e : eqs) {
    if (IsZero(e.normal) && sgn(e.offset) != 0) return EmptyHRep(keep.size());
  }

  // A relative interior point of the system projects into the relative
  // interior of every intermediate projection, so rows tight there are
  // implicit equalities and the rest can be pruned by ray shooting.
  const ImplicitEqualities imp = FindImplicitEqualities(HRep{n, eqs, ineq_rows});
  if (!imp.feasible) return EmptyHRep(keep.size());
  const Vec& interior = imp.relative_interior;

  auto fresh_rows = [](const std::vector<Halfspace>& hs) {
    std::vector<FmRow> out;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      FmRow r{hs[i].normal, hs[i].offset, std::vector<bool>(hs.size(), false)};
      r.history[i] = true;
      out.push_back(std::move(r));
    }
    return out;
  };
  std::vector<FmRow> rows = fresh_rows(ineq_rows);
  std::size_t steps = 0;  // eliminations since histories were last reset

  for (;;) {
    std::size_t best = n;
    long best_score = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (kept[c]) continue;
      long p = 0, q = 0;
      for (const FmRow& r : rows) {
        p += sgn(r.a[c]) > 0;
        q += sgn(r.a[c]) < 0;
      }
      if (p + q == 0) continue;
      const long score = p * q - p - q;
      if (best == n || score < best_score) {
        best = c;
        best_score = score;
      }
    }
    if (best == n) break;
    ++steps;
    const std::size_t c = best;
    std::vector<const FmRow*> pos, neg;
    std::vector<FmRow> next;
    for (const FmRow& r : rows) {
      if (sgn(r.a[c]) > 0) {
        pos.push_back(&r);
      } else if (sgn(r.a[c]) < 0) {
        neg.push_back(&r);
      } else {
        next.push_back(r);
      }
    }
    for (const FmRow* p : pos) {
      for (const FmRow* q : neg) {
        std::vector<bool> hist(p->history.size());
        std::size_t count = 0;
        for (std::size_t i = 0; i < hist.size(); ++i) {
          hist[i] = p->history[i] || q->history[i];
          count += hist[i];
        }
        if (count > steps + 1) continue;  // Chernikov
        const Rat fp = -q->a[c], fq = p->a[c];
        Vec a = Add(Scale(fp, p->a), Scale(fq, q->a));
        Rat b = fp * p->b + fq * q->b;
        next.push_back(FmRow{std::move(a), std::move(b), std::move(hist)});
      }
    }
    // Normalize, drop tautologies, merge parallel rows.
    std::map<Vec, std::size_t> index;
    rows.clear();
    for (FmRow& r : next) {
      Vec full = r.a;
      full.push_back(r.b);
      full = PrimitiveIntegral(full);
      r.b = full.back();
      full.pop_back();
      r.a = std::move(full);
      if (IsZero(r.a)) {
        if (sgn(r.b) > 0) return EmptyHRep(keep.size());
        continue;
      }
      auto it = index.find(r.a);
      if (it == index.end()) {
        index.emplace(r.a, rows.size());
        rows.push_back(std::move(r));
      } else {
        FmRow& old = rows[it->second];
        const auto weight = [](const std::vector<bool>& hs) {
          return std::count(hs.begin(), hs.end(), true);
        };
        if (old.b < r.b || (old.b == r.b && weight(r.history) < weight(old.history))) {
          old = std::move(r);
        }
      }
    }
    if (rows.size() > kFmRedundancyThreshold) {
      std::vector<Halfspace> all_eqs = eqs, loose;
      std::vector<FmRow> tight, rest;
      for (FmRow& r : rows) {
        if (Dot(r.a, interior) == r.b) {
          all_eqs.push_back({r.a, r.b});
          tight.push_back(std::move(r));
        } else {
          loose.push_back({r.a, r.b});
          rest.push_back(std::move(r));
        }
      }
      const std::vector<Halfspace> facets = RemoveRedundant(n, all_eqs, loose, interior);
      // Survivors come back in input order. Pruning by LP invalidates the
      // histories, so the reduced system starts afresh.
      std::vector<Halfspace> survivors;
      for (const FmRow& r : tight) survivors.push_back({r.a, r.b});
      survivors.insert(survivors.end(), facets.begin(), facets.end());
      rows = fresh_rows(survivors);
      steps = 0;
    }
  }
  return project_rows(eqs, rows);
}

HRep Intersect(const HRep& a, const HRep& b) {
  if (a.dim != b.dim) Fail(ErrorKind::kDimensionMismatch, "dimensions differ");
  HRep out = a;
  out.equalities.insert(out.equalities.end(), b.equalities.begin(), b.equalities.end());
  out.inequalities.insert(out.inequalities.end(), b.inequalities.begin(),
                          b.inequalities.end());
  return out;
}

std::vector<Vec> FilterExtremePoints(std::vector<Vec> points,
                                     const std::vector<Vec>& rays) {
  std::vector<Vec> unique;
  for (Vec& p : points) {
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) {
      unique.push_back(std::move(p));
    }
  }
  if (unique.empty()) return unique;
  const std::size_t n = unique[0].size();
  std::vector<bool> alive(unique.size(), true);
  for (std::size_t i = 0; i < unique.size(); ++i) {
    VRep others;
    others.dim = n;
    others.rays = rays;
    for (std::size_t k = 0; k < unique.size(); ++k) {
      if (k != i && alive[k]) others.vertices.push_back(unique[k]);
    }
    if (others.vertices.empty()) continue;
    if (Contains(others, unique[i])) alive[i] = false;
  }
  std::vector<Vec> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (alive[i]) out.push_back(std::move(unique[i]));
  }
  return out;
}

}  // namespace latfree
