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

// Closures over finite families of lattice-free bodies, iterated closures,
// and the face analysis that bounds the width needed to prove a cut.

#ifndef LATFREE_CLOSURE_H_
#define LATFREE_CLOSURE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latfree/cuts.h"
#include "latfree/lattice_free.h"
#include "latfree/mixed_integer.h"
#include "latfree/polyhedra.h"
#include "latfree/rational.h"

namespace latfree {

class BodyFamily {
 public:
  BodyFamily() = default;
  BodyFamily(std::vector<SplitBody> bodies, std::string label);

  const std::vector<SplitBody>& bodies() const { return bodies_; }
  const std::string& label() const { return label_; }
  // Max of MaxFacetWidth over the members; 0 for an empty family.
  const ExtRat& declared_width() const { return declared_width_; }
  std::size_t size() const { return bodies_.size(); }

 private:
  std::vector<SplitBody> bodies_;
  std::string label_;
  ExtRat declared_width_;
};

enum class RelaxMethod { kVertices, kBalas };

// Intersection of R(L, P) over the family, canonical. P itself for an empty
// family.
VRep Closure(const VRep& p, const BodyFamily& family,
             RelaxMethod method = RelaxMethod::kVertices);

inline constexpr std::size_t kDefaultSplitBudget = 5000;

// Splits {pi0 <= pi.x <= pi0 + 1} over the integer variables with
// |pi|_inf <= bound, pi primitive with its first nonzero entry positive.
// Given P, pi0 runs over [floor(min pi.v), ceil(max pi.v)] on the vertices and
// only splits with a vertex of P in their interior are kept; without P,
// pi0 = 0. Throws kInvalidInput for bound < 1, kBudgetExceeded past `budget`.
BodyFamily EnumerateSplitSets(std::size_t dim,
                              const std::vector<std::size_t>& integer_vars,
                              int bound, const VRep* p = nullptr,
                              std::size_t budget = kDefaultSplitBudget);
// Primitive directions only, as above.
std::vector<IntVec> SplitDirections(std::size_t num_integer, int bound);

// One round of an iterated closure, measured against the target cut
// delta.x >= delta0.
struct IterationRound {
  HRep closure;
  bool empty = false;
  std::optional<Rat> min_value;  // min delta.x; unset if empty or unbounded
  // max(delta0 - delta.x) over the closure: +inf if unbounded below, 0 if the
  // closure is empty.
  ExtRat max_violation;
};

enum class StopReason { kProved, kStalled, kRoundLimit };

struct ClosureTrace {
  std::vector<IterationRound> rounds;  // rounds[0] is P itself
  bool proved = false;
  StopReason stop = StopReason::kRoundLimit;
  std::size_t rounds_used = 0;
  ExtRat family_width;
};

// P^0 = P, P^k = Closure(P^{k-1}, family). Stops once the target holds on
// P^k, when P^k equals P^{k-1}, or after max_rounds rounds.
ClosureTrace IteratedClosure(const VRep& p, const BodyFamily& family,
                             const Cut& target, std::size_t max_rounds,
                             RelaxMethod method = RelaxMethod::kVertices);

// Projection of the optimal face {(x, y) in P : delta.(x, y) = delta0} onto
// the integer coordinates x (in integer_vars order).
struct TightProjection {
  HRep px;
  HRep outer;  // canonical description of P whose rows the indices refer to
  std::vector<std::size_t> always_tight;  // M^=: inequality rows of `outer`
};

// Throws kPrecondition unless delta0 is the mixed integer minimum of delta
// over P (checked by enumeration) and the projection equals the hull of its
// integer points.
TightProjection ProjectTight(const VRep& p, const Cut& c,
                             std::size_t budget = kDefaultEnumerationBudget);

enum class FaceKind { kSafe, kViolated };

struct FaceRecord {
  HRep face;                            // in x-space
  std::vector<std::size_t> tight_rows;  // M^F, inequality rows of `outer`
  FaceKind kind = FaceKind::kSafe;
  // kSafe: delta^y = sum coefficient * (y-part of the row), with one entry
  // per tight row followed by one per equality of `outer`.
  Vec certificate;
  // kViolated: a point of P over ri(F) that violates the cut, and the result
  // of the lattice point check on ri(F).
  std::optional<Vec> violating_point;
  bool lattice_free = true;
};

inline constexpr std::size_t kDefaultFaceBudget = 2000;

// Every nonempty face of Px, the improper face included, in discovery order
// (improper face first). A face is safe iff delta^y lies in the cone of the
// y-parts of the rows tight on its lifted face (equalities with both signs);
// otherwise some point of P over ri(F) violates the cut.
std::vector<FaceRecord> ClassifyFaces(const VRep& p, const Cut& c,
                                      const TightProjection& tight,
                                      std::size_t budget = kDefaultFaceBudget);

struct InequalityWidthSize {
  // Max over violated faces of the smallest candidate width; 0 when no face
  // is violated; +inf if some violated face fits in no candidate. An upper
  // bound restricted to the candidates.
  ExtRat value;
  std::map<std::size_t, WidthSizeBound> per_face;  // face index -> bound
};
InequalityWidthSize WidthSizeOfInequality(const std::vector<FaceRecord>& faces,
                                          const BodyFamily& candidates);

// Iterated closure plus, when its preconditions hold, the face analysis of
// the target on P and the candidate width bound (candidates default to the
// family).
struct ProofTrace {
  ClosureTrace closure;
  std::optional<TightProjection> tight;
  std::vector<FaceRecord> faces;
  std::optional<InequalityWidthSize> width_size;
  std::string face_analysis_skipped;  // reason, when the analysis did not run
};
ProofTrace Prove(const VRep& p, const BodyFamily& family, const Cut& target,
                 std::size_t max_rounds, const BodyFamily* candidates = nullptr,
                 RelaxMethod method = RelaxMethod::kVertices);

// x_i >= y (i = 1..p), x_1 + ... + x_p + y <= p, y >= 0 with x integer; the
// target y <= 0 written as -y >= 0, and the body S^p in (x, y)-space.
struct ExampleMilp {
  HRep hrep;
  VRep vrep;
  Cut target;
  SplitBody body;
};
ExampleMilp MakeExampleMilp(std::size_t p);

}  // namespace latfree

#endif  // LATFREE_CLOSURE_H_
