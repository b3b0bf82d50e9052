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

// JSON files. Every document carries "v": 1; rationals are "p/q" strings
// ("p" for integers, "inf" for +infinity); integer variable indices are
// 1-based on disk and 0-based in memory.

#ifndef LATFREE_JSON_IO_H_
#define LATFREE_JSON_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latfree/closure.h"
#include "latfree/cuts.h"
#include "latfree/lattice_free.h"
#include "latfree/polyhedra.h"
#include "latfree/relaxation.h"

namespace latfree {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Throws kParse on malformed documents or a missing or unknown "v".
Json ParseJson(const std::string& text);
Json ReadJsonFile(const std::string& path);
void CheckVersion(const Json& doc);

Json ToJson(const Rat& r);
Json ToJson(const ExtRat& r);
Json ToJson(const Vec& v);
Json ToJson(const IntVec& v);
Rat RatFromJson(const Json& j);
ExtRat ExtRatFromJson(const Json& j);
Vec VecFromJson(const Json& j);
IntVec IntVecFromJson(const Json& j);

// {"dim", "integer_vars", "vertices", "rays"}.
Json ToJson(const VRep& p);
VRep VRepFromJson(const Json& j);
// {"dim", "equalities": [{"a", "b"}], "inequalities": [{"a", "b"}]} with
// a.x == b and a.x >= b.
Json ToJson(const HRep& h);
HRep HRepFromJson(const Json& j);
// {"dim", "integer_vars", "facets": [{"pi", "pi0"}]}, facet pi.x >= pi0 with
// pi over all dim coordinates.
Json ToJson(const SplitBody& body);
SplitBody SplitBodyFromJson(const Json& j);
// {"delta", "delta0"}: delta.x >= delta0.
Json ToJson(const Cut& c);
Cut CutFromJson(const Json& j);
// {"label", "bodies": [...]}; a bare body document is a one-member family.
Json ToJson(const BodyFamily& family);
BodyFamily BodyFamilyFromJson(const Json& j);
// {"cuts": [...]}.
std::vector<Cut> CutListFromJson(const Json& j);

Json ToJson(const IntersectionPoint& ip);
Json ToJson(const FaceRecord& f);
Json ToJson(const ClosureTrace& t);
Json ToJson(const ProofTrace& t);
Json ToJson(const DominanceCertificate& d);
Json ToJson(const MixedIntegerPointSet& s);

// Top-level document: {"v": 1, "kind": kind, ...fields of body}.
Json Document(const std::string& kind, Json body);

}  // namespace latfree

#endif  // LATFREE_JSON_IO_H_
