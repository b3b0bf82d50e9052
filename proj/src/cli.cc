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

#include "latfree/cli.h"

#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "latfree/closure.h"
#include "latfree/cuts.h"
#include "latfree/error.h"
#include "latfree/json_io.h"
#include "latfree/lattice_free.h"
#include "latfree/mixed_integer.h"
#include "latfree/relaxation.h"

namespace latfree {

namespace {

struct Options {
  std::string instance;
  std::string body;
  std::string cut;
  std::string cut2;
  std::string cuts;
  std::string family = "simplex";
  std::string candidates;
  std::string method = "vertices";
  std::string relax_method = "both";
  std::string emit = "both";
  std::vector<std::string> along;
  std::size_t rounds = 3;
  std::size_t example_p = 0;
  std::size_t p = 2;
  std::size_t dim = 0;
  std::vector<std::size_t> integer_vars;
  int bound = 1;
  std::size_t budget = kDefaultEnumerationBudget;
};

VRep LoadInstance(const Options& o) {
  VRep p = VRepFromJson(ReadJsonFile(o.instance));
  CheckVRep(p);
  return CanonicalVrep(p);
}

// x_i >= 0 on the integer variables and their sum at most k.
SplitBody SimplexOn(const VRep& p) {
  const std::size_t k = p.integer_vars.size();
  std::vector<BodyFacet> facets;
  IntVec sum(p.dim, Int(0));
  for (std::size_t c : p.integer_vars) {
    IntVec e(p.dim, Int(0));
    e[c] = 1;
    sum[c] = -1;
    facets.push_back({std::move(e), Int(0)});
  }
  facets.push_back({std::move(sum), Int(-static_cast<long>(k))});
  return SplitBody(p.dim, p.integer_vars, std::move(facets));
}

// "simplex", "splits:B" or a family file.
BodyFamily LoadFamily(const std::string& name, const VRep& p) {
  if (name == "simplex") {
    return BodyFamily({SimplexOn(p)}, "simplex(" + std::to_string(p.integer_vars.size()) + ")");
  }
  if (name.rfind("splits:", 0) == 0) {
    int bound = 0;
    try {
      bound = std::stoi(name.substr(7));
    } catch (const std::exception&) {
      Fail(ErrorKind::kParse, "bad family '" + name + "'");
    }
    return EnumerateSplitSets(p.dim, p.integer_vars, bound, &p);
  }
  return BodyFamilyFromJson(ReadJsonFile(name));
}

RelaxMethod ParseMethod(const std::string& m) {
  return m == "balas" ? RelaxMethod::kBalas : RelaxMethod::kVertices;
}

void EmitPolyhedron(Json& j, const std::string& key, const VRep* v, const HRep* h,
                    const std::string& emit) {
  Json poly;
  if (emit != "hrep") {
    if (v != nullptr) {
      poly["vrep"] = ToJson(*v);
    } else {
      VRep conv = IsCanonicalEmpty(*h) ? VRep{h->dim, {}, {}, {}} : HrepToVrep(*h);
      poly["vrep"] = ToJson(conv);
    }
  }
  if (emit != "vrep") {
    if (h != nullptr) {
      poly["hrep"] = ToJson(*h);
    } else {
      poly["hrep"] = ToJson(v->IsEmpty() ? EmptyHRep(v->dim) : VrepToHrep(*v));
    }
  }
  j[key] = std::move(poly);
}

Json Relax(const Options& o) {
  const VRep p = LoadInstance(o);
  const SplitBody body = SplitBodyFromJson(ReadJsonFile(o.body));
  Json j;
  j["trivial"] = IsTrivial(body, p);
  std::optional<HRep> from_vertices, from_balas;
  if (o.relax_method != "balas") {
    const VertexRelaxation r = RelaxVerticesDetailed(body, p);
    Json inside = Json::array(), outside = Json::array(), points = Json::array();
    for (std::size_t i : r.partition.inside) inside.push_back(i);
    for (std::size_t i : r.partition.outside) outside.push_back(i);
    for (const IntersectionPoint& ip : r.points) points.push_back(ToJson(ip));
    j["inside_vertices"] = std::move(inside);
    j["outside_vertices"] = std::move(outside);
    j["intersection_points"] = std::move(points);
    from_vertices =
        r.relaxation.IsEmpty() ? EmptyHRep(p.dim) : VrepToHrep(r.relaxation);
    EmitPolyhedron(j, "vertices_path", &r.relaxation, &*from_vertices, o.emit);
  }
  if (o.relax_method != "vertices") {
    from_balas = RelaxBalas(body, p);
    EmitPolyhedron(j, "balas_path", nullptr, &*from_balas, o.emit);
  }
  if (from_vertices && from_balas) j["paths_agree"] = *from_vertices == *from_balas;
  return j;
}

Json ClosureVerb(const Options& o) {
  const VRep p = LoadInstance(o);
  const BodyFamily family = LoadFamily(o.family, p);
  const VRep c = Closure(p, family, ParseMethod(o.method));
  Json j;
  j["family"] = ToJson(family);
  EmitPolyhedron(j, "closure", &c, nullptr, o.emit);
  return j;
}

Json Dominate(const Options& o) {
  const VRep p = LoadInstance(o);
  const Cut c1 = CutFromJson(ReadJsonFile(o.cut));
  const Cut c2 = CutFromJson(ReadJsonFile(o.cut2));
  return {{"dominates", Dominates(p, c1, c2)}};
}

Json Certify(const Options& o) {
  const VRep p = LoadInstance(o);
  const std::vector<Cut> family = CutListFromJson(ReadJsonFile(o.cuts));
  const Cut candidate = CutFromJson(ReadJsonFile(o.cut));
  const CutClassification cls = ClassifyCut(p, candidate);
  Json j = ToJson(ComputeDominanceCertificate(p, cls.cut_off, family, candidate));
  Json cut_off = Json::array();
  for (std::size_t i : cls.cut_off) cut_off.push_back(i);
  j["cut_off_vertices"] = std::move(cut_off);
  return j;
}

Json Width(const Options& o) {
  const SplitBody body = SplitBodyFromJson(ReadJsonFile(o.body));
  Json j;
  j["max_facet_width"] = ToJson(MaxFacetWidth(body));
  Json per = Json::array();
  for (const ExtRat& w : FacetWidths(body)) per.push_back(ToJson(w));
  j["facet_widths"] = std::move(per);
  if (!o.along.empty()) {
    Vec v;
    for (const std::string& e : o.along) v.push_back(ParseRat(e));
    j["width_along"] = ToJson(WidthAlong(body, v));
  }
  return j;
}

Json Faces(const Options& o) {
  const VRep p = LoadInstance(o);
  const Cut c = CutFromJson(ReadJsonFile(o.cut));
  const TightProjection tp = ProjectTight(p, c, o.budget);
  const std::vector<FaceRecord> faces = ClassifyFaces(p, c, tp);
  Json j;
  j["tight_projection"] = ToJson(tp.px);
  j["outer"] = ToJson(tp.outer);
  Json m = Json::array();
  for (std::size_t k : tp.always_tight) m.push_back(k);
  j["always_tight"] = std::move(m);
  Json fs = Json::array();
  for (const FaceRecord& f : faces) fs.push_back(ToJson(f));
  j["faces"] = std::move(fs);
  if (!o.candidates.empty()) {
    j["width_size_bound"] = ToJson(WidthSizeOfInequality(faces, LoadFamily(o.candidates, p)).value);
  }
  return j;
}

Json ProveVerb(const Options& o, bool& proved) {
  VRep p;
  Cut target;
  if (o.example_p > 0) {
    const ExampleMilp ex = MakeExampleMilp(o.example_p);
    p = ex.vrep;
    target = ex.target;
  } else {
    p = LoadInstance(o);
    target = CutFromJson(ReadJsonFile(o.cut));
  }
  const BodyFamily family = LoadFamily(o.family, p);
  std::optional<BodyFamily> candidates;
  if (!o.candidates.empty()) candidates = LoadFamily(o.candidates, p);
  const ProofTrace t = Prove(p, family, target, o.rounds, candidates ? &*candidates : nullptr,
                             ParseMethod(o.method));
  proved = t.closure.proved;
  Json j;
  j["instance"] = ToJson(p);
  j["target"] = ToJson(target);
  j["family"] = ToJson(family);
  Json trace = ToJson(t);
  for (auto& [k, v] : trace.items()) j[k] = std::move(v);
  return j;
}

Json EnumerateSplits(const Options& o) {
  if (!o.instance.empty()) {
    const VRep p = LoadInstance(o);
    return ToJson(EnumerateSplitSets(p.dim, p.integer_vars, o.bound, &p, o.budget));
  }
  if (o.dim == 0) Fail(ErrorKind::kInvalidInput, "give --instance or --dim");
  std::vector<std::size_t> ints;
  for (std::size_t c : o.integer_vars) {
    if (c < 1 || c > o.dim) Fail(ErrorKind::kInvalidInput, "integer var out of range");
    ints.push_back(c - 1);
  }
  return ToJson(EnumerateSplitSets(o.dim, ints, o.bound, nullptr, o.budget));
}

Json Example(const Options& o) {
  const ExampleMilp ex = MakeExampleMilp(o.p);
  return {{"instance", ToJson(ex.vrep)},
          {"hrep", ToJson(ex.hrep)},
          {"target", ToJson(ex.target)},
          {"body", ToJson(ex.body)},
          {"body_width", ToJson(MaxFacetWidth(ex.body))}};
}

Json OracleHull(const Options& o) {
  const VRep p = LoadInstance(o);
  const MixedIntegerPointSet pts = EnumerateMixedIntegerPoints(p, FundamentalBox(p), o.budget);
  const VRep hull = MixedIntegerHull(p, o.budget);
  Json j = ToJson(pts);
  EmitPolyhedron(j, "hull", &hull, nullptr, o.emit);
  return j;
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return kExitUsage;
    case ErrorKind::kBudgetExceeded: return kExitBudget;
    case ErrorKind::kInternal: return kExitInternal;
    default: return kExitData;
  }
}

void ReportError(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Document("error", {{"error", kind}, {"message", message}}).dump() << "\n";
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact lattice-free cuts, relaxations and split closures", "latfree"};
  app.require_subcommand(1);
  const std::vector<std::string> methods = {"vertices", "balas"};
  const std::vector<std::string> emits = {"vrep", "hrep", "both"};

  auto instance = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--instance", o.instance, "instance JSON (V- or H-form)")
                    ->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto emit = [&](CLI::App* s) {
    s->add_option("--emit", o.emit, "polyhedron output form")->check(CLI::IsMember(emits));
  };
  auto budget = [&](CLI::App* s) {
    s->add_option("--budget", o.budget, "enumeration budget");
  };

  CLI::App* relax = app.add_subcommand("relax", "R(L, P) from vertices and/or the lifted system");
  instance(relax);
  relax->add_option("--body", o.body, "body JSON")->required()->check(CLI::ExistingFile);
  relax->add_option("--method", o.relax_method)
      ->check(CLI::IsMember({"vertices", "balas", "both"}));
  emit(relax);

  CLI::App* closure = app.add_subcommand("closure", "intersection of R(L, P) over a family");
  instance(closure);
  closure->add_option("--family", o.family, "simplex | splits:B | family JSON");
  closure->add_option("--method", o.method)->check(CLI::IsMember(methods));
  emit(closure);

  CLI::App* dominate = app.add_subcommand("dominate", "does --cut dominate --cut2 on P");
  instance(dominate);
  dominate->add_option("--cut", o.cut)->required()->check(CLI::ExistingFile);
  dominate->add_option("--cut2", o.cut2)->required()->check(CLI::ExistingFile);

  CLI::App* certify = app.add_subcommand("certify", "dominance certificate for a candidate cut");
  instance(certify);
  certify->add_option("--cuts", o.cuts, "family of cuts {\"cuts\": [...]}")
      ->required()
      ->check(CLI::ExistingFile);
  certify->add_option("--candidate", o.cut)->required()->check(CLI::ExistingFile);

  CLI::App* width = app.add_subcommand("width", "facet widths of a body");
  width->add_option("--body", o.body)->required()->check(CLI::ExistingFile);
  width->add_option("--along", o.along, "comma-separated rationals")->delimiter(',');

  CLI::App* faces = app.add_subcommand("faces", "violated-face analysis of a valid cut");
  instance(faces);
  faces->add_option("--cut", o.cut)->required()->check(CLI::ExistingFile);
  faces->add_option("--candidates", o.candidates, "simplex | splits:B | family JSON");
  budget(faces);

  CLI::App* prove = app.add_subcommand("prove", "iterated closure proof of a cut");
  instance(prove, false);
  prove->add_option("--cut", o.cut)->check(CLI::ExistingFile);
  prove->add_option("--example-p", o.example_p, "use the example MILP with this p");
  prove->add_option("--family", o.family, "simplex | splits:B | family JSON");
  prove->add_option("--candidates", o.candidates, "width-size candidates (default: family)");
  prove->add_option("--rounds", o.rounds)->check(CLI::PositiveNumber);
  prove->add_option("--method", o.method)->check(CLI::IsMember(methods));

  CLI::App* splits = app.add_subcommand("enumerate-splits", "split sets with |pi|_inf <= B");
  instance(splits, false);
  splits->add_option("--dim", o.dim);
  splits->add_option("--integer-vars", o.integer_vars, "1-based")->delimiter(',');
  splits->add_option("--bound", o.bound)->check(CLI::PositiveNumber);
  budget(splits);

  CLI::App* example = app.add_subcommand("example", "the example MILP");
  example->add_option("--p", o.p)->check(CLI::PositiveNumber);

  CLI::App* hull = app.add_subcommand("oracle-hull", "mixed integer points and their hull");
  instance(hull);
  budget(hull);
  emit(hull);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    ReportError(err, "usage", e.what());
    return kExitUsage;
  }
  if (prove->parsed() && o.example_p == 0 && (o.instance.empty() || o.cut.empty())) {
    ReportError(err, "usage", "prove needs --example-p or both --instance and --cut");
    return kExitUsage;
  }

  try {
    Json body;
    int code = kExitOk;
    std::string kind;
    if (relax->parsed()) {
      body = Relax(o), kind = "relax";
    } else if (closure->parsed()) {
      body = ClosureVerb(o), kind = "closure";
    } else if (dominate->parsed()) {
      body = Dominate(o), kind = "dominate";
    } else if (certify->parsed()) {
      body = Certify(o), kind = "certify";
    } else if (width->parsed()) {
      body = Width(o), kind = "width";
    } else if (faces->parsed()) {
      body = Faces(o), kind = "faces";
    } else if (prove->parsed()) {
      bool proved = false;
      body = ProveVerb(o, proved), kind = "prove";
      code = proved ? kExitOk : kExitNotProved;
    } else if (splits->parsed()) {
      body = EnumerateSplits(o), kind = "family";
    } else if (example->parsed()) {
      body = Example(o), kind = "example";
    } else {
      body = OracleHull(o), kind = "oracle-hull";
    }
    out << Document(kind, std::move(body)).dump(2) << "\n";
    return code;
  } catch (const Error& e) {
    ReportError(err, ErrorKindName(e.kind()), e.what());
    return ExitCodeFor(e.kind());
  }
}

}  // namespace latfree
