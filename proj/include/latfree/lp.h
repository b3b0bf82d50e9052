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

// Exact two-phase primal simplex with Bland's rule.

#ifndef LATFREE_LP_H_
#define LATFREE_LP_H_

#include <cstddef>
#include <vector>

#include "latfree/rational.h"

namespace latfree {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMinimize, kMaximize };

struct LinearRow {
  Vec coeffs;
  Relation relation = Relation::kGreaterEqual;
  Rat rhs;
};

struct LinearProgram {
  std::size_t num_vars = 0;
  Sense sense = Sense::kMaximize;
  Vec objective;  // empty means the zero objective
  std::vector<LinearRow> rows;
  // Per-variable sign restriction; empty means every variable is free.
  std::vector<bool> nonnegative;

  // Convenience builders.
  void AddRow(Vec coeffs, Relation relation, Rat rhs);
};

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rat optimum;  // valid when optimal
  Vec point;    // optimal point, or a feasible point when unbounded
  Vec ray;      // improving ray when unbounded
};

LpOutcome SolveLp(const LinearProgram& lp);

// Total number of simplex pivots performed by this thread so far.
std::size_t LpPivotCount();

}  // namespace latfree

#endif  // LATFREE_LP_H_
