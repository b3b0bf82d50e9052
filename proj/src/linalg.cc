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

#include "latfree/linalg.h"

#include <utility>

#include "latfree/error.h"

namespace latfree {

Echelon ReducedRowEchelon(const Matrix& m,
                          std::optional<std::size_t> pivot_columns) {
  Echelon e;
  Matrix a = m;
  if (a.empty()) return e;
  const std::size_t cols = a[0].size();
  for (const Vec& row : a) {
    if (row.size() != cols) {
      Fail(ErrorKind::kDimensionMismatch, "ragged matrix");
    }
  }
  const std::size_t limit = pivot_columns.value_or(cols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rat inv = Rat(1) / a[r][c];
    for (Rat& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(a[r][k]) != 0) a[i][k] -= f * a[r][k];
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

std::size_t Rank(const Matrix& m) { return ReducedRowEchelon(m).rows.size(); }

Matrix NullSpace(const Matrix& m, std::size_t n) {
  Matrix basis;
  if (m.empty()) {
    for (std::size_t i = 0; i < n; ++i) basis.push_back(UnitVec(n, i));
    return basis;
  }
  const Echelon e = ReducedRowEchelon(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = UnitVec(n, f);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> SpanMembership(const std::vector<Vec>& generators,
                                  const Vec& target) {
  const std::size_t n = target.size();
  const std::size_t k = generators.size();
  // Columns are generators, last column is the target.
  Matrix a(n, Vec(k + 1));
  for (std::size_t j = 0; j < k; ++j) {
    if (generators[j].size() != n) {
      Fail(ErrorKind::kDimensionMismatch, "generator size differs from target");
    }
    for (std::size_t i = 0; i < n; ++i) a[i][j] = generators[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) a[i][k] = target[i];
  if (n == 0) return ZeroVec(k);
  const Echelon e = ReducedRowEchelon(a, k);
  // Zero rows were dropped by the elimination, so consistency is checked on
  // the original system.
  Vec coeffs = ZeroVec(k);
  for (std::size_t r = 0; r < e.rows.size(); ++r) coeffs[e.pivots[r]] = e.rows[r][k];
  Vec combo = ZeroVec(n);
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(coeffs[j]) != 0) combo = AddScaled(combo, coeffs[j], generators[j]);
  }
  if (combo != target) return std::nullopt;
  return coeffs;
}

Matrix Inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) Fail(ErrorKind::kDimensionMismatch, "not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const Echelon e = ReducedRowEchelon(aug, n);
  if (e.rows.size() != n) Fail(ErrorKind::kInvalidInput, "singular matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (e.pivots[i] != i) Fail(ErrorKind::kInvalidInput, "singular matrix");
  }
  Matrix inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  }
  return inv;
}

std::vector<std::size_t> IndependentRows(const Matrix& m) {
  std::vector<std::size_t> chosen;
  Matrix basis;  // kept in echelon form
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Vec v = m[i];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(v[pivots[b]]) != 0) v = AddScaled(v, -v[pivots[b]], basis[b]);
    }
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) continue;
    const Rat inv = Rat(1) / v[p];
    for (Rat& x : v) x *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(basis[b][p]) != 0) basis[b] = AddScaled(basis[b], -basis[b][p], v);
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(i);
  }
  return chosen;
}

}  // namespace latfree
