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

#include "latfree/json_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "latfree/error.h"

namespace latfree {

namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Fail(ErrorKind::kParse, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) Fail(ErrorKind::kParse, std::string("missing field '") + key + "'");
  return *it;
}

const Json& ArrayField(const Json& j, const char* key) {
  const Json& a = Field(j, key);
  if (!a.is_array()) Fail(ErrorKind::kParse, std::string("'") + key + "' must be an array");
  return a;
}

std::size_t Dim(const Json& j) {
  const Json& d = Field(j, "dim");
  if (!d.is_number_unsigned()) Fail(ErrorKind::kParse, "'dim' must be a nonnegative integer");
  return d.get<std::size_t>();
}

std::vector<std::size_t> IntegerVars(const Json& j, std::size_t dim) {
  std::vector<std::size_t> out;
  if (!j.contains("integer_vars")) return out;
  for (const Json& e : ArrayField(j, "integer_vars")) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() < 1 || e.get<std::size_t>() > dim) {
      Fail(ErrorKind::kParse, "integer_vars entries must be in 1.." + std::to_string(dim));
    }
    out.push_back(e.get<std::size_t>() - 1);
  }
  return out;
}

Json IntegerVarsJson(const std::vector<std::size_t>& vars) {
  Json a = Json::array();
  for (std::size_t c : vars) a.push_back(c + 1);
  return a;
}

Vec SizedVec(const Json& j, std::size_t dim, const char* what) {
  Vec v = VecFromJson(j);
  if (v.size() != dim) {
    Fail(ErrorKind::kParse, std::string(what) + " has " + std::to_string(v.size()) +
                                " entries, expected " + std::to_string(dim));
  }
  return v;
}

Json Rows(const std::vector<Halfspace>& rows) {
  Json a = Json::array();
  for (const Halfspace& h : rows) a.push_back({{"a", ToJson(h.normal)}, {"b", ToJson(h.offset)}});
  return a;
}

std::vector<Halfspace> RowsFromJson(const Json& j, const char* key, std::size_t dim) {
  std::vector<Halfspace> out;
  if (!j.contains(key)) return out;
  for (const Json& r : ArrayField(j, key)) {
    out.push_back({SizedVec(Field(r, "a"), dim, "row"), RatFromJson(Field(r, "b"))});
  }
  return out;
}

Json Indices(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (std::size_t i : v) a.push_back(i);
  return a;
}

}  // namespace

Json ParseJson(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  CheckVersion(doc);
  return doc;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kParse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return ParseJson(ss.str());
  } catch (const Error& e) {
    Fail(e.kind(), path + ": " + e.what());
  }
}

void CheckVersion(const Json& doc) {
  if (!doc.is_object()) Fail(ErrorKind::kParse, "document must be a JSON object");
  const auto it = doc.find("v");
  if (it == doc.end()) Fail(ErrorKind::kParse, "missing schema version \"v\"");
  if (!it->is_number_integer() || it->get<long long>() != kSchemaVersion) {
    Fail(ErrorKind::kParse, "unsupported schema version " + it->dump());
  }
}

Json ToJson(const Rat& r) { return FormatRat(r); }
Json ToJson(const ExtRat& r) { return FormatExtRat(r); }

Json ToJson(const Vec& v) {
  Json a = Json::array();
  for (const Rat& e : v) a.push_back(FormatRat(e));
  return a;
}

Json ToJson(const IntVec& v) {
  Json a = Json::array();
  for (const Int& e : v) a.push_back(e.get_str());
  return a;
}

Rat RatFromJson(const Json& j) {
  if (j.is_string()) return ParseRat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  Fail(ErrorKind::kParse, "expected a rational string, got " + j.dump());
}

ExtRat ExtRatFromJson(const Json& j) {
  if (j.is_string()) return ParseExtRat(j.get<std::string>());
  return ExtRat(RatFromJson(j));
}

Vec VecFromJson(const Json& j) {
  if (!j.is_array()) Fail(ErrorKind::kParse, "expected an array of rationals");
  Vec v;
  for (const Json& e : j) v.push_back(RatFromJson(e));
  return v;
}

IntVec IntVecFromJson(const Json& j) {
  const Vec v = VecFromJson(j);
  if (!IsIntegral(v)) Fail(ErrorKind::kParse, "expected integers, got " + j.dump());
  return ToInt(v);
}

Json ToJson(const VRep& p) {
  Json j;
  j["dim"] = p.dim;
  j["integer_vars"] = IntegerVarsJson(p.integer_vars);
  Json verts = Json::array(), rays = Json::array();
  for (const Vec& v : p.vertices) verts.push_back(ToJson(v));
  for (const Vec& r : p.rays) rays.push_back(ToJson(r));
  j["vertices"] = std::move(verts);
  j["rays"] = std::move(rays);
  return j;
}

VRep VRepFromJson(const Json& j) {
  VRep p;
  p.dim = Dim(j);
  p.integer_vars = IntegerVars(j, p.dim);
  if (!j.contains("vertices") && (j.contains("inequalities") || j.contains("equalities"))) {
    VRep v = HrepToVrep(HRepFromJson(j));
    v.integer_vars = p.integer_vars;
    return v;
  }
  for (const Json& v : ArrayField(j, "vertices")) p.vertices.push_back(SizedVec(v, p.dim, "vertex"));
  if (j.contains("rays")) {
    for (const Json& r : ArrayField(j, "rays")) p.rays.push_back(SizedVec(r, p.dim, "ray"));
  }
  return p;
}

Json ToJson(const HRep& h) {
  Json j;
  j["dim"] = h.dim;
  j["equalities"] = Rows(h.equalities);
  j["inequalities"] = Rows(h.inequalities);
  return j;
}

HRep HRepFromJson(const Json& j) {
  HRep h;
  h.dim = Dim(j);
  h.equalities = RowsFromJson(j, "equalities", h.dim);
  h.inequalities = RowsFromJson(j, "inequalities", h.dim);
  return h;
}

Json ToJson(const SplitBody& body) {
  Json j;
  j["dim"] = body.dim();
  j["integer_vars"] = IntegerVarsJson(body.integer_vars());
  Json facets = Json::array();
  for (const BodyFacet& f : body.facets()) {
    facets.push_back({{"pi", ToJson(f.normal)}, {"pi0", f.offset.get_str()}});
  }
  j["facets"] = std::move(facets);
  return j;
}

SplitBody SplitBodyFromJson(const Json& j) {
  const std::size_t dim = Dim(j);
  std::vector<BodyFacet> facets;
  for (const Json& f : ArrayField(j, "facets")) {
    IntVec pi = IntVecFromJson(Field(f, "pi"));
    if (pi.size() != dim) Fail(ErrorKind::kParse, "facet pi must have dim entries");
    const Rat pi0 = RatFromJson(Field(f, "pi0"));
    if (!IsIntegral(pi0)) Fail(ErrorKind::kParse, "facet pi0 must be an integer");
    facets.push_back({std::move(pi), pi0.get_num()});
  }
  return SplitBody(dim, IntegerVars(j, dim), std::move(facets));
}

Json ToJson(const Cut& c) { return {{"delta", ToJson(c.delta)}, {"delta0", ToJson(c.delta0)}}; }

Cut CutFromJson(const Json& j) {
  return MakeCut(VecFromJson(Field(j, "delta")), RatFromJson(Field(j, "delta0")));
}

Json ToJson(const BodyFamily& family) {
  Json bodies = Json::array();
  for (const SplitBody& b : family.bodies()) bodies.push_back(ToJson(b));
  return {{"label", family.label()},
          {"declared_width", ToJson(family.declared_width())},
          {"bodies", std::move(bodies)}};
}

BodyFamily BodyFamilyFromJson(const Json& j) {
  if (j.is_object() && j.contains("facets")) return BodyFamily({SplitBodyFromJson(j)}, "body");
  std::vector<SplitBody> bodies;
  for (const Json& b : ArrayField(j, "bodies")) bodies.push_back(SplitBodyFromJson(b));
  const std::string label =
      j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "family";
  return BodyFamily(std::move(bodies), label);
}

std::vector<Cut> CutListFromJson(const Json& j) {
  std::vector<Cut> out;
  for (const Json& c : ArrayField(j, "cuts")) out.push_back(CutFromJson(c));
  return out;
}

Json ToJson(const IntersectionPoint& ip) {
  const bool ray = ip.kind == IntersectionPoint::Kind::kRay;
  Json j;
  j["kind"] = ray ? "ray" : "edge";
  j["inside_vertex"] = ip.from;
  j[ray ? "ray" : "outside_vertex"] = ip.to;
  j["step"] = ToJson(ip.step);
  j["point"] = ToJson(ip.point);
  return j;
}

Json ToJson(const FaceRecord& f) {
  Json j;
  j["kind"] = f.kind == FaceKind::kSafe ? "safe" : "violated";
  j["face"] = ToJson(f.face);
  j["tight_rows"] = Indices(f.tight_rows);
  if (f.kind == FaceKind::kSafe) {
    j["certificate"] = ToJson(f.certificate);
  } else {
    j["lattice_free"] = f.lattice_free;
    if (f.violating_point) j["violating_point"] = ToJson(*f.violating_point);
  }
  return j;
}

Json ToJson(const ClosureTrace& t) {
  Json rounds = Json::array();
  for (const IterationRound& r : t.rounds) {
    Json jr;
    jr["empty"] = r.empty;
    jr["optimum"] = r.min_value ? ToJson(*r.min_value) : Json(nullptr);
    jr["max_violation"] = ToJson(r.max_violation);
    jr["closure"] = ToJson(r.closure);
    rounds.push_back(std::move(jr));
  }
  const char* stop = t.stop == StopReason::kProved    ? "proved"
                     : t.stop == StopReason::kStalled ? "stalled"
                                                      : "round_limit";
  Json j;
  j["proved"] = t.proved;
  j["stop"] = stop;
  j["rounds_used"] = t.rounds_used;
  j["family_width"] = ToJson(t.family_width);
  j["rounds"] = std::move(rounds);
  return j;
}

Json ToJson(const ProofTrace& t) {
  Json j = ToJson(t.closure);
  if (t.tight) {
    j["tight_projection"] = ToJson(t.tight->px);
    j["outer"] = ToJson(t.tight->outer);
    j["always_tight"] = Indices(t.tight->always_tight);
  }
  Json faces = Json::array(), violated = Json::array();
  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    faces.push_back(ToJson(t.faces[i]));
    if (t.faces[i].kind == FaceKind::kViolated) violated.push_back(i);
  }
  j["faces"] = std::move(faces);
  j["violated_faces"] = std::move(violated);
  if (t.width_size) {
    j["width_size_bound"] = ToJson(t.width_size->value);
    Json per = Json::object();
    for (const auto& [face, b] : t.width_size->per_face) {
      per[std::to_string(face)] = {{"value", ToJson(b.value)},
                                   {"candidate", b.argmin ? Json(*b.argmin) : Json(nullptr)}};
    }
    j["width_size_per_face"] = std::move(per);
  } else {
    j["width_size_bound"] = nullptr;
    j["face_analysis_skipped"] = t.face_analysis_skipped;
  }
  return j;
}

Json ToJson(const DominanceCertificate& d) {
  Json j;
  j["valid"] = d.valid;
  j["min_value"] = ToJson(d.min_value);
  if (d.valid) {
    j["weights"] = ToJson(d.weights);
    if (d.combined) j["combined"] = ToJson(*d.combined);
  } else if (d.violating_point) {
    j["violating_point"] = ToJson(*d.violating_point);
  }
  return j;
}

Json ToJson(const MixedIntegerPointSet& s) {
  Json pts = Json::array();
  for (const MixedIntegerPoint& m : s.points) {
    Json verts = Json::array(), rays = Json::array();
    for (const Vec& v : m.fiber_vertices) verts.push_back(ToJson(v));
    for (const Vec& r : m.fiber_rays) rays.push_back(ToJson(r));
    pts.push_back({{"point", ToJson(m.point)},
                   {"fiber_vertices", std::move(verts)},
                   {"fiber_rays", std::move(rays)}});
  }
  return {{"box", {{"lower", ToJson(s.box.lower)}, {"upper", ToJson(s.box.upper)}}},
          {"points", std::move(pts)}};
}

Json Document(const std::string& kind, Json body) {
  Json j;
  j["v"] = kSchemaVersion;
  j["kind"] = kind;
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  return j;
}

}  // namespace latfree
