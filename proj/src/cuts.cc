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

#include "latfree/cuts.h"

#include <algorithm>

#include "latfree/error.h"
#include "latfree/lp.h"

namespace latfree {

Cut MakeCut(Vec delta, Rat delta0) {
  if (IsZero(delta)) Fail(ErrorKind::kInvalidInput, "cut normal is zero");
  if (IsIntegral(delta) && IsIntegral(delta0)) {
    Vec full = delta;
    full.push_back(delta0);
    full = PrimitiveIntegral(full);
    delta0 = full.back();
    full.pop_back();
    delta = std::move(full);
  }
  return Cut{std::move(delta), std::move(delta0)};
}

namespace {

void CheckCut(const VRep& p, const Cut& c) {
  CheckVRep(p);
  if (c.delta.size() != p.dim) {
    Fail(ErrorKind::kDimensionMismatch, "cut size differs from dimension");
  }
  if (IsZero(c.delta)) Fail(ErrorKind::kInvalidInput, "cut normal is zero");
}

// v_lambda after validating lambda against the cut-off set.
Vec WeightedPoint(const VRep& p, const Cut& c, const Vec& lambda) {
  if (lambda.size() != p.vertices.size()) {
    Fail(ErrorKind::kDimensionMismatch, "lambda needs one weight per vertex");
  }
  Rat total(0);
  Vec x = ZeroVec(p.dim);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (sgn(lambda[i]) < 0) Fail(ErrorKind::kPrecondition, "negative weight");
    if (sgn(lambda[i]) == 0) continue;
    if (Dot(c.delta, p.vertices[i]) >= c.delta0) {
      Fail(ErrorKind::kPrecondition, "weight on a vertex the cut does not cut off");
    }
    total += lambda[i];
    x = AddScaled(x, lambda[i], p.vertices[i]);
  }
  if (total != 1) Fail(ErrorKind::kPrecondition, "weights must sum to one");
  return x;
}

}  // namespace

CutClassification ClassifyCut(const VRep& p, const Cut& c) {
  CheckCut(p, c);
  CutClassification out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (Dot(c.delta, p.vertices[i]) < c.delta0) {
      out.cut_off.push_back(i);
    } else {
      out.satisfied.push_back(i);
    }
  }
  for (const Vec& r : p.rays) {
    if (sgn(Dot(c.delta, r)) < 0) out.nonnegative = false;
  }
  return out;
}

ExtRat AlphaPrime(const VRep& p, const Cut& c, const Vec& lambda, std::size_t ray) {
  CheckCut(p, c);
  const Vec x = WeightedPoint(p, c, lambda);
  const Rat t = Dot(c.delta, p.rays.at(ray));
  if (sgn(t) < 0) Fail(ErrorKind::kPrecondition, "cut is not nonnegative on this ray");
  if (sgn(t) == 0) return ExtRat::Infinity();
  return ExtRat(Rat((c.delta0 - Dot(c.delta, x)) / t));
}

Rat BetaPrime(const VRep& p, const Cut& c, const Vec& lambda, std::size_t vertex) {
  CheckCut(p, c);
  const Vec x = WeightedPoint(p, c, lambda);
  const Vec& vk = p.vertices.at(vertex);
  const Rat dk = Dot(c.delta, vk);
  if (dk < c.delta0) Fail(ErrorKind::kPrecondition, "vertex is cut off");
  const Rat dx = Dot(c.delta, x);
  return (c.delta0 - dx) / (dk - dx);
}

IntersectionProfile ComputeIntersectionProfile(const VRep& p, const Cut& c) {
  const CutClassification cls = ClassifyCut(p, c);
  if (!cls.nonnegative) Fail(ErrorKind::kPrecondition, "cut is not nonnegative");
  IntersectionProfile prof;
  const std::size_t nv = p.vertices.size();
  for (std::size_t i : cls.cut_off) {
    const Vec e = UnitVec(nv, i);
    for (std::size_t j = 0; j < p.rays.size(); ++j) {
      prof.alpha.emplace(std::make_pair(i, j), AlphaPrime(p, c, e, j));
    }
    for (std::size_t k : cls.satisfied) {
      prof.beta.emplace(std::make_pair(i, k), BetaPrime(p, c, e, k));
    }
  }
  return prof;
}

VRep CutPolyhedronVertices(const VRep& p, const Cut& c) {
  const CutClassification cls = ClassifyCut(p, c);
  if (!cls.nonnegative) Fail(ErrorKind::kPrecondition, "cut is not nonnegative");
  const IntersectionProfile prof = ComputeIntersectionProfile(p, c);
  std::vector<Vec> cand;
  for (std::size_t k : cls.satisfied) cand.push_back(p.vertices[k]);
  for (const auto& [ik, beta] : prof.beta) {
    const Vec& vi = p.vertices[ik.first];
    cand.push_back(AddScaled(vi, beta, Sub(p.vertices[ik.second], vi)));
  }
  for (const auto& [ij, alpha] : prof.alpha) {
    if (alpha.is_infinite()) continue;
    cand.push_back(AddScaled(p.vertices[ij.first], alpha.value(), p.rays[ij.second]));
  }
  VRep q;
  q.dim = p.dim;
  q.integer_vars = p.integer_vars;
  q.rays = p.rays;
  q.vertices = FilterExtremePoints(std::move(cand), p.rays);
  if (q.vertices.empty()) q.rays.clear();
  std::sort(q.vertices.begin(), q.vertices.end());
  return q;
}

bool Dominates(const VRep& p, const Cut& c1, const Cut& c2) {
  const CutClassification a = ClassifyCut(p, c1), b = ClassifyCut(p, c2);
  if (!a.nonnegative || !b.nonnegative) {
    Fail(ErrorKind::kPrecondition, "dominance needs nonnegative cuts");
  }
  if (a.cut_off != b.cut_off) {
    Fail(ErrorKind::kPrecondition, "cuts cut off different vertex sets");
  }
  const IntersectionProfile p1 = ComputeIntersectionProfile(p, c1);
  const IntersectionProfile p2 = ComputeIntersectionProfile(p, c2);
  for (const auto& [key, a1] : p1.alpha) {
    if (a1.Reciprocal() > p2.alpha.at(key).Reciprocal()) return false;
  }
  for (const auto& [key, b1] : p1.beta) {
    if (Rat(1) / b1 > Rat(1) / p2.beta.at(key)) return false;
  }
  return true;
}

DominanceCertificate ComputeDominanceCertificate(
    const VRep& p, const std::vector<std::size_t>& cut_off,
    const std::vector<Cut>& family, const Cut& candidate) {
  CheckVRep(p);
  if (family.empty()) Fail(ErrorKind::kInvalidInput, "empty cut family");
  std::vector<std::size_t> vc = cut_off;
  std::sort(vc.begin(), vc.end());
  std::vector<const Cut*> all;
  for (const Cut& f : family) all.push_back(&f);
  all.push_back(&candidate);
  for (const Cut* c : all) {
    const CutClassification cls = ClassifyCut(p, *c);
    if (cls.cut_off != vc) {
      Fail(ErrorKind::kPrecondition, "cut-off set mismatch");
    }
    if (!cls.nonnegative) Fail(ErrorKind::kPrecondition, "cut is not nonnegative");
  }
  if (vc.empty()) Fail(ErrorKind::kPrecondition, "cuts cut off no vertex");
  std::vector<std::size_t> vs;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    if (!std::binary_search(vc.begin(), vc.end(), k)) vs.push_back(k);
  }
  const std::size_t nc = vc.size(), ns = vs.size(), nr = p.rays.size();
  const std::size_t nl = family.size();
  const Vec& d = candidate.delta;

  // Primal: x = sum lambda_i v^i + sum eps_ik (v^k - v^i) + sum mu_j r^j,
  // sum lambda = 1, sum_k eps_ik <= lambda_i, family cuts, minimize d.x.
  const std::size_t n_eps = nc * ns;
  LinearProgram primal;
  primal.num_vars = nc + n_eps + nr;
  primal.nonnegative.assign(primal.num_vars, true);
  std::vector<Vec> col_dir(primal.num_vars);  // x-space direction per variable
  for (std::size_t a = 0; a < nc; ++a) col_dir[a] = p.vertices[vc[a]];
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < ns; ++b) {
      col_dir[nc + a * ns + b] = Sub(p.vertices[vs[b]], p.vertices[vc[a]]);
    }
  }
  for (std::size_t j = 0; j < nr; ++j) col_dir[nc + n_eps + j] = p.rays[j];
  auto project = [&](const Vec& w) {
    Vec row(primal.num_vars);
    for (std::size_t v = 0; v < primal.num_vars; ++v) row[v] = Dot(w, col_dir[v]);
    return row;
  };
  {
    Vec ones(primal.num_vars, Rat(0));
    for (std::size_t a = 0; a < nc; ++a) ones[a] = 1;
    primal.AddRow(std::move(ones), Relation::kEqual, Rat(1));
  }
  for (std::size_t a = 0; a < nc; ++a) {
    Vec row(primal.num_vars, Rat(0));
    row[a] = 1;
    for (std::size_t b = 0; b < ns; ++b) row[nc + a * ns + b] = -1;
    primal.AddRow(std::move(row), Relation::kGreaterEqual, Rat(0));
  }
  for (const Cut& f : family) {
    primal.AddRow(project(f.delta), Relation::kGreaterEqual, f.delta0);
  }
  primal.objective = project(d);
  primal.sense = Sense::kMinimize;
  const LpOutcome po = SolveLp(primal);
  if (po.status == LpStatus::kInfeasible) {
    Fail(ErrorKind::kPrecondition, "P cut by the family is empty");
  }
  auto to_x = [&](const Vec& vars) {
    Vec x = ZeroVec(p.dim);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (sgn(vars[v]) != 0) x = AddScaled(x, vars[v], col_dir[v]);
    }
    return x;
  };
  DominanceCertificate cert;
  if (po.status == LpStatus::kUnbounded) {
    Vec x = to_x(po.point);
    const Vec ray = to_x(po.ray);
    const Rat step = (Dot(d, x) - candidate.delta0) / (-Dot(d, ray)) + 1;
    cert.violating_point = AddScaled(x, step < 1 ? Rat(1) : step, ray);
    return cert;
  }
  cert.min_value = po.optimum;
  if (po.optimum < candidate.delta0) {
    cert.violating_point = to_x(po.point);
    return cert;
  }

  // Dual: variables w (family, >= 0), z (cut-off vertices, >= 0), u0 free.
  LinearProgram dual;
  dual.num_vars = nl + nc + 1;
  dual.nonnegative.assign(dual.num_vars, true);
  dual.nonnegative[nl + nc] = false;
  dual.sense = Sense::kMaximize;
  dual.objective.assign(dual.num_vars, Rat(0));
  for (std::size_t l = 0; l < nl; ++l) dual.objective[l] = family[l].delta0;
  dual.objective[nl + nc] = 1;
  for (std::size_t v = 0; v < primal.num_vars; ++v) {
    Vec row(dual.num_vars, Rat(0));
    for (std::size_t l = 0; l < nl; ++l) row[l] = Dot(family[l].delta, col_dir[v]);
    if (v < nc) {
      row[nl + v] = 1;
      row[nl + nc] = 1;
    } else if (v < nc + n_eps) {
      row[nl + (v - nc) / ns] = -1;
    }
    dual.AddRow(std::move(row), Relation::kLessEqual, Dot(d, col_dir[v]));
  }
  const LpOutcome du = SolveLp(dual);
  if (du.status != LpStatus::kOptimal || du.optimum != po.optimum) {
    Fail(ErrorKind::kInternal, "dominance LP duality check failed");
  }
  Rat total(0);
  for (std::size_t l = 0; l < nl; ++l) total += du.point[l];
  if (sgn(total) == 0) Fail(ErrorKind::kInternal, "zero certificate weights");
  cert.weights.resize(nl);
  Vec combo = ZeroVec(p.dim);
  Rat combo0(0);
  for (std::size_t l = 0; l < nl; ++l) {
    cert.weights[l] = du.point[l] / total;
    combo = AddScaled(combo, cert.weights[l], family[l].delta);
    combo0 += cert.weights[l] * family[l].delta0;
  }
  cert.combined = Cut{std::move(combo), std::move(combo0)};
  if (!Dominates(p, *cert.combined, candidate)) {
    Fail(ErrorKind::kInternal, "combined cut does not dominate the candidate");
  }
  cert.valid = true;
  return cert;
}

AlphaDecomposition DecomposeAlpha(const Vec& v, const IntVec& r, const Cut& c) {
  if (v.size() != c.delta.size() || r.size() != c.delta.size()) {
    Fail(ErrorKind::kDimensionMismatch, "sizes differ");
  }
  if (!IsIntegral(c.delta) || !IsIntegral(c.delta0)) {
    Fail(ErrorKind::kPrecondition, "decomposition needs an integral cut");
  }
  AlphaDecomposition out;
  out.g = 1;
  for (const Rat& x : v) out.g *= x.get_den();
  out.s = c.delta0.get_num() * out.g;
  for (std::size_t m = 0; m < v.size(); ++m) {
    const Int dm = out.g / v[m].get_den();
    out.s -= dm * v[m].get_num() * c.delta[m].get_num();
  }
  out.t = 0;
  for (std::size_t m = 0; m < v.size(); ++m) out.t += c.delta[m].get_num() * r[m];
  if (out.t <= 0) Fail(ErrorKind::kPrecondition, "delta . r must be positive");
  return out;
}

}  // namespace latfree
