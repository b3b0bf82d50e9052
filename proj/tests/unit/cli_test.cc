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

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "latfree/error.h"
#include "latfree/json_io.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace latfree {
namespace {

using testing::V;

struct CliRun {
  int code;
  Json out;
  std::string err;
};

CliRun Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "latfree");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  Json j = out.str().empty() ? Json() : Json::parse(out.str());
  return {code, std::move(j), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("latfree_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::filesystem::path dir_;
};

const char* kP2 =
    R"({"v":1,"dim":2,"integer_vars":[1,2],)"
    R"("vertices":[["1/2","1/2"],["1/2","5/2"],["5/2","1/2"]],"rays":[]})";
const char* kSplitX1 =
    R"({"v":1,"dim":2,"integer_vars":[1,2],)"
    R"("facets":[{"pi":["1","0"],"pi0":"0"},{"pi":["-1","0"],"pi0":"-1"}]})";

TEST_F(CliTest, ProveExample) {
  const CliRun r = Invoke({"prove", "--example-p", "2", "--family", "simplex"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out["v"], 1);
  EXPECT_TRUE(r.out["proved"].get<bool>());
  ASSERT_EQ(r.out["rounds"].size(), 2u);
  EXPECT_EQ(r.out["rounds"][0]["max_violation"], "2/3");
  EXPECT_EQ(r.out["rounds"][1]["optimum"], "0");
  EXPECT_EQ(r.out["width_size_bound"], "2");
  EXPECT_EQ(r.out["violated_faces"], Json::array({0}));
}

TEST_F(CliTest, ProveWithSplitsIsNotProved) {
  const CliRun r = Invoke({"prove", "--example-p", "2", "--family", "splits:2", "--rounds", "3"});
  EXPECT_EQ(r.code, kExitNotProved) << r.err;
  EXPECT_FALSE(r.out["proved"].get<bool>());
  EXPECT_EQ(r.out["width_size_bound"], "inf");
}

TEST_F(CliTest, RelaxBothPathsAgree) {
  const CliRun r = Invoke({"relax", "--instance", Write("p2.json", kP2), "--body",
                        Write("split.json", kSplitX1), "--method", "both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out["paths_agree"].get<bool>());
  EXPECT_EQ(r.out["vertices_path"]["vrep"]["vertices"],
            Json::parse(R"([["1","1/2"],["1","2"],["5/2","1/2"]])"));
  ASSERT_EQ(r.out["intersection_points"].size(), 2u);
  EXPECT_EQ(r.out["intersection_points"][0]["kind"], "edge");
}

TEST_F(CliTest, WidthOfSimplex) {
  const std::string s3 =
      R"({"v":1,"dim":3,"integer_vars":[1,2,3],"facets":[{"pi":["1","0","0"],"pi0":"0"},)"
      R"({"pi":["0","1","0"],"pi0":"0"},{"pi":["0","0","1"],"pi0":"0"},)"
      R"({"pi":["-1","-1","-1"],"pi0":"-3"}]})";
  const CliRun r = Invoke({"width", "--body", Write("s3.json", s3), "--along", "1,1,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out["max_facet_width"], "3");
  EXPECT_EQ(r.out["width_along"], "3");
}

TEST_F(CliTest, EmittedPolyhedraRoundTrip) {
  const std::string p2 = Write("p2.json", kP2);
  const CliRun r = Invoke({"closure", "--instance", p2, "--family", "splits:1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json& h = r.out["closure"]["hrep"];
  const HRep parsed = HRepFromJson(h);
  EXPECT_EQ(ToJson(parsed), h);
  EXPECT_EQ(Canonicalize(parsed), parsed);
  const Json& v = r.out["closure"]["vrep"];
  EXPECT_EQ(ToJson(CanonicalVrep(VRepFromJson(v))), v);

  // The emitted family re-parses to the same family.
  const CliRun fam = Invoke({"enumerate-splits", "--instance", p2, "--bound", "2"});
  ASSERT_EQ(fam.code, kExitOk) << fam.err;
  const std::string fam_path = Write("fam.json", fam.out.dump());
  EXPECT_EQ(ToJson(BodyFamilyFromJson(ReadJsonFile(fam_path))),
            ToJson(BodyFamilyFromJson(fam.out)));
  const CliRun again = Invoke({"closure", "--instance", p2, "--family", fam_path});
  EXPECT_EQ(again.code, kExitOk) << again.err;
}

TEST_F(CliTest, RandomRoundTrips) {
  testing::Generator gen(5);
  for (int i = 0; i < 30; ++i) {
    const VRep p = gen.Instance();
    const Json jp = ToJson(p);
    EXPECT_EQ(ToJson(VRepFromJson(jp)), jp);
    const HRep h = VrepToHrep(p);
    EXPECT_EQ(HRepFromJson(ToJson(h)), h);
    const SplitBody b = gen.Body(p);
    EXPECT_EQ(SplitBodyFromJson(ToJson(b)), b);
    if (auto c = gen.NonnegativeCut(p)) EXPECT_EQ(CutFromJson(ToJson(*c)), *c);
  }
}

TEST_F(CliTest, ErrorsAndExitCodes) {
  CliRun r = Invoke({"width", "--body", Write("bad.json", R"({"v":2,"dim":1})")});
  EXPECT_EQ(r.code, kExitUsage);
  const Json e = Json::parse(r.err);
  EXPECT_EQ(e["kind"], "error");
  EXPECT_EQ(e["error"], "parse");

  r = Invoke({"width", "--body", Write("nov.json", R"({"dim":1})")});
  EXPECT_EQ(r.code, kExitUsage);
  r = Invoke({"width", "--body", Write("junk.json", "{not json")});
  EXPECT_EQ(r.code, kExitUsage);
  r = Invoke({"frobnicate"});
  EXPECT_EQ(r.code, kExitUsage);

  // Parses, but the normal touches nothing integer: semantic error.
  r = Invoke({"width", "--body",
              Write("cont.json", R"({"v":1,"dim":2,"integer_vars":[1],)"
                                 R"("facets":[{"pi":["0","1"],"pi0":"0"}]})")});
  EXPECT_EQ(r.code, kExitData);

  r = Invoke({"oracle-hull", "--instance", Write("p2.json", kP2), "--budget", "2"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_EQ(Json::parse(r.err)["error"], "budget_exceeded");
}

TEST_F(CliTest, DominateAndCertify) {
  const std::string p2 = Write("p2.json", kP2);
  const std::string c1 = Write("c1.json", R"({"v":1,"delta":["1","1"],"delta0":"2"})");
  const std::string c2 = Write("c2.json", R"({"v":1,"delta":["2","1"],"delta0":"3"})");
  CliRun r = Invoke({"dominate", "--instance", p2, "--cut", c1, "--cut2", c1});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out["dominates"].get<bool>());

  const std::string fam =
      Write("cuts.json", R"({"v":1,"cuts":[{"delta":["1","1"],"delta0":"2"}]})");
  r = Invoke({"certify", "--instance", p2, "--cuts", fam, "--candidate", c1});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out["valid"].get<bool>());
  r = Invoke({"certify", "--instance", p2, "--cuts", fam, "--candidate", c2});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(r.out["valid"].get<bool>());
  EXPECT_TRUE(r.out.contains("violating_point"));
}

TEST_F(CliTest, ExampleAndOracle) {
  CliRun r = Invoke({"example", "--p", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out["body_width"], "3");
  const std::string inst = Write("ex.json", Document("instance", r.out["instance"]).dump());
  r = Invoke({"oracle-hull", "--instance", inst, "--emit", "vrep"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(r.out["hull"].contains("hrep"));
  // Integer hull of the example lies in y = 0.
  for (const Json& v : r.out["hull"]["vrep"]["vertices"]) EXPECT_EQ(v[3], "0");
}

}  // namespace
}  // namespace latfree
