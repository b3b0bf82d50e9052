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

// Dense exact linear algebra on row lists.

#ifndef LATFREE_LINALG_H_
#define LATFREE_LINALG_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "latfree/rational.h"

namespace latfree {

using Matrix = std::vector<Vec>;  // row-major

struct Echelon {
  Matrix rows;                      // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Pivots are searched only among the first `pivot_columns` columns (all
// columns when the argument is omitted).
Echelon ReducedRowEchelon(const Matrix& m,
                          std::optional<std::size_t> pivot_columns = {});
std::size_t Rank(const Matrix& m);

// Basis of {x : m x = 0} where every row of m has size n.
Matrix NullSpace(const Matrix& m, std::size_t n);

// Some coefficients c with sum_k c_k generators[k] = target, or nothing.
// Free coefficients are set to zero, so the answer is deterministic.
std::optional<Vec> SpanMembership(const std::vector<Vec>& generators,
                                  const Vec& target);

// Inverse of a square nonsingular matrix. Throws kInvalidInput if singular.
Matrix Inverse(const Matrix& m);

// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> IndependentRows(const Matrix& m);

}  // namespace latfree

#endif  // LATFREE_LINALG_H_
