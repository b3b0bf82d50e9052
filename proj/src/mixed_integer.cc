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

#include "latfree/mixed_integer.h"

#include <algorithm>
#include <limits>
#include <set>

#include "latfree/error.h"

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

}  // namespace

ValidationReport Validate(const VRep& p) {
  ValidationReport r;
  auto problem = [&](std::string s) {
    r.ok = false;
    r.problems.push_back(std::move(s));
  };
  try {
    CheckVRep(p);
  } catch (const Error& e) {
    problem(e.what());
    return r;
  }
  if (p.IsEmpty()) problem("no vertices: the polyhedron must be nonempty");
  for (const Vec& ray : p.rays) {
    if (IsZero(ray)) problem("zero ray");
  }
  if (!r.ok) return r;
  VRep canon;
  try {
    canon = CanonicalVrep(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNotPointed) throw;
    problem("polyhedron contains a line");
    return r;
  }
  const std::set<Vec> extreme(canon.vertices.begin(), canon.vertices.end());
  for (const Vec& v : p.vertices) {
    if (!extreme.count(v)) problem("not a vertex: " + FormatVec(v));
  }
  std::set<Vec> extreme_rays(canon.rays.begin(), canon.rays.end());
  std::set<Vec> seen;
  for (const Vec& ray : p.rays) {
    const Vec prim = PrimitiveIntegral(ray);
    if (!extreme_rays.count(prim)) problem("not an extreme ray: " + FormatVec(ray));
    if (!seen.insert(prim).second) problem("duplicate ray: " + FormatVec(ray));
  }
  if (p.vertices.size() != std::set<Vec>(p.vertices.begin(), p.vertices.end()).size()) {
    problem("duplicate vertex");
  }
  return r;
}

std::size_t IntegerBox::Count() const {
  std::size_t total = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (upper[i] < lower[i]) return 0;
    const Int width = upper[i] - lower[i] + 1;
    if (!width.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
    const std::size_t w = width.get_ui();
    if (total > std::numeric_limits<std::size_t>::max() / w) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= w;
  }
  return total;
}

IntegerBox VertexBox(const VRep& p) {
  CheckVRep(p);
  if (p.IsEmpty()) Fail(ErrorKind::kEmptyInput, "empty polyhedron has no box");
  for (const Vec& r : p.rays) {
    for (std::size_t c : p.integer_vars) {
      if (sgn(r[c]) != 0) {
        Fail(ErrorKind::kPrecondition,
             "a ray moves an integer coordinate; supply an explicit box");
      }
    }
  }
  IntegerBox box;
  for (std::size_t c : p.integer_vars) {
    Rat lo = p.vertices[0][c], hi = lo;
    for (const Vec& v : p.vertices) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
    }
    box.lower.push_back(Ceil(lo));
    box.upper.push_back(Floor(hi));
  }
  return box;
}

IntegerBox FundamentalBox(const VRep& p) {
  CheckVRep(p);
  if (p.IsEmpty()) Fail(ErrorKind::kEmptyInput, "empty polyhedron has no box");
  IntegerBox box;
  for (std::size_t c : p.integer_vars) {
    Rat lo = p.vertices[0][c], hi = lo;
    for (const Vec& v : p.vertices) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
    }
    for (const Vec& r : p.rays) {
      const Vec prim = PrimitiveIntegral(r);
      if (sgn(prim[c]) < 0) lo += prim[c];
      if (sgn(prim[c]) > 0) hi += prim[c];
    }
    box.lower.push_back(Ceil(lo));
    box.upper.push_back(Floor(hi));
  }
  return box;
}

MixedIntegerPointSet EnumerateMixedIntegerPoints(const VRep& p,
                                                 const IntegerBox& box,
                                                 std::size_t budget) {
  CheckVRep(p);
  const std::size_t k = p.integer_vars.size();
  if (box.lower.size() != k || box.upper.size() != k) {
    Fail(ErrorKind::kDimensionMismatch, "box size differs from integer variables");
  }
  MixedIntegerPointSet out;
  out.box = box;
  if (p.IsEmpty()) return out;
  const std::size_t count = box.Count();
  if (count > budget) {
    Fail(ErrorKind::kBudgetExceeded,
         "box holds " + std::to_string(count) + " integer assignments, budget is " +
             std::to_string(budget));
  }
  if (count == 0) return out;

  const HRep h = VrepToHrep(p);
  std::vector<bool> is_int(p.dim, false);
  for (std::size_t c : p.integer_vars) is_int[c] = true;
  std::vector<std::size_t> cont;
  for (std::size_t c = 0; c < p.dim; ++c) {
    if (!is_int[c]) cont.push_back(c);
  }

  IntVec z = box.lower;
  for (;;) {
    // Fiber {y : (z, y) in P} in the continuous coordinates.
    HRep fiber;
    fiber.dim = cont.size();
    auto restrict_row = [&](const Halfspace& r) {
      Halfspace out_row{Vec(cont.size()), r.offset};
      for (std::size_t i = 0; i < k; ++i) {
        out_row.offset -= r.normal[p.integer_vars[i]] * z[i];
      }
      for (std::size_t j = 0; j < cont.size(); ++j) out_row.normal[j] = r.normal[cont[j]];
      return out_row;
    };
    for (const Halfspace& r : h.equalities) fiber.equalities.push_back(restrict_row(r));
    for (const Halfspace& r : h.inequalities) fiber.inequalities.push_back(restrict_row(r));
    const VRep fv = HrepToVrep(fiber);
    if (!fv.IsEmpty()) {
      MixedIntegerPoint mp;
      auto lift = [&](const Vec& y, bool is_ray) {
        Vec x(p.dim);
        for (std::size_t i = 0; i < k; ++i) x[p.integer_vars[i]] = is_ray ? Rat(0) : Rat(z[i]);
        for (std::size_t j = 0; j < cont.size(); ++j) x[cont[j]] = y[j];
        return x;
      };
      for (const Vec& y : fv.vertices) mp.fiber_vertices.push_back(lift(y, false));
      for (const Vec& y : fv.rays) mp.fiber_rays.push_back(lift(y, true));
      mp.point = mp.fiber_vertices.front();
      out.points.push_back(std::move(mp));
    }
    // Odometer, last coordinate fastest.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (z[i] < box.upper[i]) {
        ++z[i];
        break;
      }
      z[i] = box.lower[i];
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

VRep MixedIntegerHull(const VRep& p, std::size_t budget) {
  CheckVRep(p);
  VRep hull;
  hull.dim = p.dim;
  hull.integer_vars = p.integer_vars;
  if (p.IsEmpty()) return hull;
  const MixedIntegerPointSet pts =
      EnumerateMixedIntegerPoints(p, FundamentalBox(p), budget);
  if (pts.points.empty()) return hull;
  for (const MixedIntegerPoint& mp : pts.points) {
    hull.vertices.insert(hull.vertices.end(), mp.fiber_vertices.begin(),
                         mp.fiber_vertices.end());
  }
  hull.rays = p.rays;
  return CanonicalVrep(hull);
}

}  // namespace latfree
