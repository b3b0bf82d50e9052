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

#include "latfree/lp.h"

#include <limits>
#include <utility>

#include "latfree/error.h"

namespace latfree {

namespace {

thread_local std::size_t pivot_counter = 0;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau in maximization form. Row `profit` holds reduced profits and,
// in its last entry, minus the current objective value.
class Tableau {
 public:
  Tableau(std::size_t cols) : cols_(cols), profit_(cols + 1) {}

  void AddRow(Vec row, std::size_t basic) {
    rows_.push_back(std::move(row));
    basis_.push_back(basic);
  }

  void SetObjective(const Vec& c) {
    profit_ = c;
    profit_.resize(cols_ + 1);
    profit_[cols_] = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t k = 0; k <= cols_; ++k) {
        if (sgn(rows_[i][k]) != 0) profit_[k] -= cb * rows_[i][k];
      }
    }
  }

  // Returns kNone at optimality, otherwise the entering column that has no
  // blocking row.
  std::size_t Run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && sgn(profit_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rat best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rat ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      Pivot(leave, enter);
    }
  }

  void Pivot(std::size_t r, std::size_t j) {
    ++pivot_counter;
    Vec& pr = rows_[r];
    const Rat inv = Rat(1) / pr[j];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k <= cols_; ++k) {
      if (sgn(pr[k]) != 0) {
        pr[k] *= inv;
        nz.push_back(k);
      }
    }
    auto eliminate = [&](Vec& row) {
      if (sgn(row[j]) == 0) return;
      const Rat f = row[j];
      for (std::size_t k : nz) row[k] -= f * pr[k];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(profit_);
    basis_[r] = j;
  }

  void DeleteRows(const std::vector<bool>& drop) {
    std::vector<Vec> rows;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (drop[i]) continue;
      rows.push_back(std::move(rows_[i]));
      basis.push_back(basis_[i]);
    }
    rows_ = std::move(rows);
    basis_ = std::move(basis);
  }

  Rat Value() const { return -profit_[cols_]; }
  std::size_t num_rows() const { return rows_.size(); }
  const Vec& row(std::size_t i) const { return rows_[i]; }
  std::size_t basic(std::size_t i) const { return basis_[i]; }

  Vec Solution() const {
    Vec x(cols_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][cols_];
    return x;
  }

  Vec Direction(std::size_t enter) const {
    Vec d(cols_, Rat(0));
    d[enter] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) d[basis_[i]] = -rows_[i][enter];
    return d;
  }

 private:
  std::size_t cols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> basis_;
  Vec profit_;
};

}  // namespace

void LinearProgram::AddRow(Vec coeffs, Relation relation, Rat rhs) {
  rows.push_back(LinearRow{std::move(coeffs), relation, std::move(rhs)});
}

std::size_t LpPivotCount() { return pivot_counter; }

LpOutcome SolveLp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  if (!lp.objective.empty() && lp.objective.size() != n) {
    Fail(ErrorKind::kDimensionMismatch, "objective size differs from num_vars");
  }
  if (!lp.nonnegative.empty() && lp.nonnegative.size() != n) {
    Fail(ErrorKind::kDimensionMismatch, "sign pattern size differs");
  }

  // Structural columns: nonnegative variables map to one column, free ones to
  // a plus/minus pair.
  std::vector<std::size_t> plus(n), minus(n, kNone);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < n; ++v) {
    plus[v] = cols++;
    if (lp.nonnegative.empty() || !lp.nonnegative[v]) minus[v] = cols++;
  }
  const std::size_t structural = cols;

  struct Prepared {
    Vec coeffs;
    Relation rel;
    Rat rhs;
  };
  std::vector<Prepared> prepared;
  prepared.reserve(lp.rows.size());
  std::size_t slack_cols = 0, art_cols = 0;
  for (const LinearRow& row : lp.rows) {
    if (row.coeffs.size() != n) {
      Fail(ErrorKind::kDimensionMismatch, "constraint size differs from num_vars");
    }
    Prepared p{Vec(structural, Rat(0)), row.relation, row.rhs};
    for (std::size_t v = 0; v < n; ++v) {
      if (sgn(row.coeffs[v]) == 0) continue;
      p.coeffs[plus[v]] = row.coeffs[v];
      if (minus[v] != kNone) p.coeffs[minus[v]] = -row.coeffs[v];
    }
    const bool flip = sgn(p.rhs) < 0 ||
                      (sgn(p.rhs) == 0 && p.rel == Relation::kGreaterEqual);
    if (flip) {
      for (Rat& x : p.coeffs) x = -x;
      p.rhs = -p.rhs;
      if (p.rel == Relation::kLessEqual) {
        p.rel = Relation::kGreaterEqual;
      } else if (p.rel == Relation::kGreaterEqual) {
        p.rel = Relation::kLessEqual;
      }
    }
    if (p.rel != Relation::kEqual) ++slack_cols;
    if (p.rel != Relation::kLessEqual) ++art_cols;
    prepared.push_back(std::move(p));
  }

  const std::size_t total = structural + slack_cols + art_cols;
  Tableau t(total);
  std::size_t next_slack = structural;
  std::size_t next_art = structural + slack_cols;
  std::vector<bool> is_art(total, false);
  for (Prepared& p : prepared) {
    Vec row(total + 1, Rat(0));
    for (std::size_t k = 0; k < structural; ++k) row[k] = p.coeffs[k];
    row[total] = p.rhs;
    std::size_t basic;
    if (p.rel == Relation::kLessEqual) {
      row[next_slack] = 1;
      basic = next_slack++;
    } else {
      if (p.rel == Relation::kGreaterEqual) row[next_slack++] = -1;
      row[next_art] = 1;
      is_art[next_art] = true;
      basic = next_art++;
    }
    t.AddRow(std::move(row), basic);
  }

  std::vector<bool> allowed(total, true);
  if (art_cols > 0) {
    Vec c(total, Rat(0));
    for (std::size_t k = 0; k < total; ++k) {
      if (is_art[k]) c[k] = -1;
    }
    t.SetObjective(c);
    t.Run(allowed);
    if (sgn(t.Value()) < 0) return LpOutcome{};
    std::vector<bool> drop(t.num_rows(), false);
    bool any_drop = false;
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
      if (!is_art[t.basic(i)]) continue;
      std::size_t j = 0;
      while (j < total && (is_art[j] || sgn(t.row(i)[j]) == 0)) ++j;
      if (j < total) {
        t.Pivot(i, j);
      } else {
        drop[i] = true;
        any_drop = true;
      }
    }
    if (any_drop) t.DeleteRows(drop);
    for (std::size_t k = 0; k < total; ++k) {
      if (is_art[k]) allowed[k] = false;
    }
  }

  Vec c(total, Rat(0));
  bool has_objective = false;
  for (std::size_t v = 0; v < n && !lp.objective.empty(); ++v) {
    Rat coef = lp.sense == Sense::kMaximize ? lp.objective[v] : -lp.objective[v];
    if (sgn(coef) == 0) continue;
    has_objective = true;
    if (minus[v] != kNone) c[minus[v]] = -coef;
    c[plus[v]] = std::move(coef);
  }
  std::size_t unbounded_col = kNone;
  if (has_objective) {
    t.SetObjective(c);
    unbounded_col = t.Run(allowed);
  }

  auto to_original = [&](const Vec& cols_value) {
    Vec x(n, Rat(0));
    for (std::size_t v = 0; v < n; ++v) {
      x[v] = cols_value[plus[v]];
      if (minus[v] != kNone) x[v] -= cols_value[minus[v]];
    }
    return x;
  };

  LpOutcome out;
  out.point = to_original(t.Solution());
  if (unbounded_col != kNone) {
    out.status = LpStatus::kUnbounded;
    out.ray = to_original(t.Direction(unbounded_col));
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.optimum = lp.objective.empty() ? Rat(0) : Dot(lp.objective, out.point);
  return out;
}

}  // namespace latfree
