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

// Mixed integer instances: validation, brute-force enumeration of the
// mixed integer points and the hull oracle built on it.

#ifndef LATFREE_MIXED_INTEGER_H_
#define LATFREE_MIXED_INTEGER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "latfree/polyhedra.h"
#include "latfree/rational.h"

namespace latfree {

inline constexpr std::size_t kDefaultEnumerationBudget = 200000;

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

// Checks dimensions, integer variable indices, nonemptiness, pointedness and
// that every listed vertex and ray is extreme.
ValidationReport Validate(const VRep& p);

// Closed integer box over the integer variables, in integer_vars order.
struct IntegerBox {
  IntVec lower;
  IntVec upper;
  std::size_t Count() const;  // saturates at SIZE_MAX
};

// Integer hull of the projection of the vertices onto the integer
// coordinates. Throws kPrecondition if a ray moves an integer coordinate.
IntegerBox VertexBox(const VRep& p);

// Box that contains every mixed integer point of conv(V) + [0,1]-combinations
// of the (integral) rays; enough for the hull oracle even when P is
// unbounded.
IntegerBox FundamentalBox(const VRep& p);

struct MixedIntegerPoint {
  Vec point;                   // one feasible completion
  std::vector<Vec> fiber_vertices;  // vertices of {x in P : x_I = z}
  std::vector<Vec> fiber_rays;
};

struct MixedIntegerPointSet {
  IntegerBox box;
  std::vector<MixedIntegerPoint> points;  // ordered by integer part
};

// Every integer assignment in the box whose fiber in P is nonempty.
// Throws kBudgetExceeded if the box holds more than `budget` assignments.
MixedIntegerPointSet EnumerateMixedIntegerPoints(
    const VRep& p, const IntegerBox& box,
    std::size_t budget = kDefaultEnumerationBudget);

// conv of the mixed integer points of P, canonical. Empty VRep if none.
VRep MixedIntegerHull(const VRep& p,
                      std::size_t budget = kDefaultEnumerationBudget);

}  // namespace latfree

#endif  // LATFREE_MIXED_INTEGER_H_
