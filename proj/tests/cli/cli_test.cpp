// Copyright 2026 The ratbase Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the command line in-process against files in a scratch directory.

#include <gtest/gtest.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "ratbase/io.hpp"
#include "ratbase/polytope.hpp"

namespace ratbase::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ratbase_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    Write("z.json", R"({"name": "Z", "basis": ["e1"], "vertices": [["1"]]})");
    Write("cube2.json", R"({"name": "cube2", "basis": ["e1", "e2"], "vertices": [["1", "1"], ["1", "-1"]]})");
    Write("cube2b.json", R"({"name": "cube2b", "basis": ["f1", "f2"], "vertices": [["1", "1"], ["1", "-1"]]})");
    Write("cube3.json",
          R"({"name": "cube3", "basis": ["e1", "e2", "e3"],
              "vertices": [["1", "1", "1"], ["1", "1", "-1"], ["1", "-1", "1"], ["1", "-1", "-1"]]})");
    Write("lambda.json",
          R"({"name": "L", "basis": ["e1", "e2"],
              "vertices": [["1", "1/3"], ["1/3", "1"], ["1", "-1/3"], ["1/3", "-1"]]})");
    Write("i.json", R"({"domain": "z.json", "codomain": "cube2.json", "basis_map": {"e1": "e1"}})");
    Write("j.json", R"({"domain": "z.json", "codomain": "cube2b.json", "basis_map": {"e1": "f1"}})");
  }

  void TearDown() override {
    fs::remove_all(dir_);
    ::unsetenv("RATBASE_VERTEX_BUDGET");
    SetDefaultBudget(Budget{});
  }

  void Write(const std::string& name, const std::string& text) { io::WriteTextFile(dir_ / name, text); }
  std::string Read(const std::string& name) { return io::ReadTextFile(dir_ / name); }
  std::string P(const std::string& name) { return (dir_ / name).string(); }

  CliRun Cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = RunCli(args, out, err);
    return {code, out.str(), err.str()};
  }

  CliRun Example(const std::string& extra = "") {
    std::vector<std::string> args = {"paper", "example", "--eta", "1/20", "--eps", "1/2", "--delta", "3/5"};
    if (!extra.empty()) args.push_back(extra);
    return Cli(args);
  }

  fs::path dir_;
};

TEST_F(CliTest, CubeConstants) {
  CliRun r = Cli({"space", "constants", P("cube2.json")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("K_u: 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("K_s: 1\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExampleNormAndConstants) {
  ASSERT_EQ(Cli({"paper", "example", "--eta", "1/20", "--eps", "1/2", "--delta", "3/5", "-o", P("ex.json")}).code,
            kOk);
  CliRun norm = Cli({"space", "norm", P("ex.json"), "8/5,8/5,-3/5"});
  EXPECT_EQ(norm.code, kOk);
  EXPECT_EQ(norm.out, "norm: 1\n");
  CliRun k = Cli({"--json", "space", "constants", P("ex.json")});
  auto j = nlohmann::json::parse(k.out);
  EXPECT_EQ(j["K_u"], "11/5");
  EXPECT_EQ(j["K_s"], "8/5");
}

TEST_F(CliTest, ExampleCertificates) {
  CliRun r = Example();
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("all_certificates_pass: YES"), std::string::npos);
  EXPECT_NE(r.out.find("K_u: 11/5"), std::string::npos);
  CliRun bad = Cli({"paper", "example", "--eta", "1/2", "--eps", "1/2", "--delta", "3/5"});
  EXPECT_EQ(bad.code, kPrecondition);
  EXPECT_NE(bad.err.find("eta"), std::string::npos);
}

TEST_F(CliTest, NonUniversalBound) {
  CliRun r = Cli({"paper", "non-universal-bound", "--eta", "1/20", "--eps", "1/2", "--delta", "3/5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "bound: 59/35\nexceeds 8/5: YES\n");
  ASSERT_EQ(Example("--out=" + P("ex.json")).code, kOk);
  CliRun c = Cli({"paper", "non-universal-bound", "--eta", "1/20", "--eps", "1/2", "--delta", "3/5", "--candidate",
               P("ex.json")});
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.out.find("hypotheses_met: NO"), std::string::npos) << c.out;
}

TEST_F(CliTest, Rationalize) {
  CliRun r = Cli({"paper", "rationalize", "--space", P("cube3.json"), "--lambda", "e1,e2", "--lambda-ball",
               P("lambda.json"), "--delta", "1/2", "--delta-prime", "3/5", "--eps", "3/4", "-o", P("ap.json")});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("all_certificates_pass: YES"), std::string::npos);
  EXPECT_EQ(io::ReadSpaceFile(P("ap.json")).labels(), (std::vector<std::string>{"e1", "e2", "e3"}));
  CliRun bad = Cli({"paper", "rationalize", "--space", P("cube2.json"), "--lambda", "e1,e2", "--lambda-ball",
                 P("lambda.json"), "--delta", "1/5", "--delta-prime", "1/4", "--eps", "1/2"});
  EXPECT_EQ(bad.code, kPrecondition);
  EXPECT_NE(bad.err.find("5/4"), std::string::npos);
}

TEST_F(CliTest, AmalgamateCubesOverInterval) {
  CliRun r = Cli({"amalgamate", "--z", P("z.json"), "--x", P("cube2.json"), "--y", P("cube2b.json"), "--i", P("i.json"),
               "--j", P("j.json"), "--out", P("w.json")});
  EXPECT_EQ(r.code, kOk) << r.err;
  BasedSpace w = io::ReadSpaceFile(P("w.json"));
  EXPECT_EQ(w.dim(), 3u);
  EXPECT_EQ(w.ball().vertices().size(), 8u);
  auto cert = nlohmann::json::parse(Read("w.certificate.json"));
  EXPECT_TRUE(cert["i_prime_isometric"].get<bool>());
  EXPECT_TRUE(cert["j_prime_isometric"].get<bool>());
  EXPECT_TRUE(cert["square_commutes"].get<bool>());
  EXPECT_EQ(cert["K_u"]["W"], "1");
}

TEST_F(CliTest, AmalgamateDegenerate) {
  Write("id.json", R"({"domain": "cube2.json", "codomain": "cube2.json", "basis_map": {"e1": "e1", "e2": "e2"}})");
  CliRun r = Cli({"amalgamate", "--z", P("cube2.json"), "--x", P("cube2.json"), "--y", P("cube2.json"), "--i",
               P("id.json"), "--j", P("id.json"), "--out", P("w.json")});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(io::ReadSpaceFile(P("w.json")).ball(), io::ReadSpaceFile(P("cube2.json")).ball());
}

TEST_F(CliTest, AmalgamateNonIsometric) {
  Write("long.json", R"({"name": "long", "basis": ["f1", "f2"], "vertices": [["2", "0"], ["0", "1"]]})");
  Write("jl.json", R"({"domain": "z.json", "codomain": "long.json", "basis_map": {"e1": "f1"}})");
  CliRun r = Cli({"amalgamate", "--z", P("z.json"), "--x", P("cube2.json"), "--y", P("long.json"), "--i", P("i.json"),
               "--j", P("jl.json"), "--out", P("w.json")});
  EXPECT_EQ(r.code, kNotIsometric);
  EXPECT_NE(r.err.find("vertex (-1)"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(dir_ / "w.json"));
}

TEST_F(CliTest, TrivialChain) {
  CliRun r = Cli({"--json", "chain", "--max-dim", "1", "--steps", "3", "--out-dir", P("chain")});
  EXPECT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["stages"], 1);
  EXPECT_EQ(j["pending"], 0);
  EXPECT_TRUE(fs::exists(dir_ / "chain" / "U0.json"));
  EXPECT_FALSE(fs::exists(dir_ / "chain" / "U1.json"));
}

TEST_F(CliTest, ChainIsDeterministic) {
  std::vector<std::string> args = {"chain", "--max-dim", "2", "--max-den", "2", "--k-bound", "2", "--steps", "20",
                                   "--out-dir"};
  args.push_back(P("a"));
  CliRun a = Cli(args);
  args.back() = P("b");
  CliRun b = Cli(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("witnesses_valid: YES"), std::string::npos);
  auto ledger = nlohmann::json::parse(Read("a/ledger.json"));
  ASSERT_GE(ledger.size(), 10u);
  for (std::size_t t = 0; t < 10; ++t) EXPECT_TRUE(ledger[t]["verified"].get<bool>()) << t;
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(dir_ / "a")) {
    if (!entry.is_regular_file()) continue;
    fs::path rel = fs::relative(entry.path(), dir_ / "a");
    EXPECT_EQ(io::ReadTextFile(entry.path()), io::ReadTextFile(dir_ / "b" / rel)) << rel;
    ++files;
  }
  EXPECT_GT(files, 20u);
}

TEST_F(CliTest, SubspaceAndOneBase) {
  CliRun s = Cli({"space", "subspace", P("cube3.json"), "e1,e3"});
  EXPECT_EQ(s.code, kOk);
  BasedSpace sub = io::ParseSpace(s.out);
  EXPECT_EQ(sub.labels(), (std::vector<std::string>{"e1", "e3"}));
  Write("hex.json", R"({"name": "hex", "basis": ["e1", "e2"], "vertices": [["1", "0"], ["0", "1"], ["1", "1"]]})");
  CliRun o = Cli({"space", "one-base", P("hex.json"), "-o", P("ob.json")});
  EXPECT_EQ(o.code, kOk);
  // Intersecting the hexagon with its reflection leaves the cross-polytope.
  Write("cross.json", R"({"basis": ["e1", "e2"], "vertices": [["1", "0"], ["0", "1"]]})");
  EXPECT_EQ(io::ReadSpaceFile(P("ob.json")).ball(), io::ReadSpaceFile(P("cross.json")).ball());
}

TEST_F(CliTest, ValidationFailures) {
  Write("bad.json", R"({"name": "b", "basis": ["e1", "e2"], "vertices": [["2", "0"], ["0", "1"]]})");
  CliRun r = Cli({"--json", "space", "validate", P("bad.json")});
  EXPECT_EQ(r.code, kValidation);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_FALSE(j["checks"]["unit_basis"]["passed"].get<bool>());
  // Canonical files list both members of every vertex pair.
  EXPECT_EQ(Cli({"space", "validate", P("cube2.json")}).code, kValidation);
  io::WriteTextFile(dir_ / "full.json", io::SerializeSpace(io::ReadSpaceFile(P("cube2.json"))));
  EXPECT_EQ(Cli({"space", "validate", P("full.json")}).code, kOk);
  Write("flat.json", R"({"basis": ["e1", "e2"], "vertices": [["1", "1"]]})");
  EXPECT_EQ(Cli({"space", "norm", P("flat.json"), "1,1"}).code, kValidation);
}

TEST_F(CliTest, ParseFailures) {
  Write("float.json", R"({"basis": ["e1"], "vertices": [[0.5]]})");
  EXPECT_EQ(Cli({"space", "norm", P("float.json"), "1"}).code, kParse);
  EXPECT_EQ(Cli({"space", "norm", P("missing.json"), "1"}).code, kParse);
  EXPECT_EQ(Cli({"space", "norm", P("cube2.json"), "1,x"}).code, kParse);
  EXPECT_EQ(Cli({"space", "norm", P("cube2.json"), "1"}).code, kParse);
  EXPECT_EQ(Cli({"frobnicate"}).code, kParse);
  EXPECT_EQ(Cli({}).code, kParse);
  EXPECT_EQ(Cli({"--help"}).code, kOk);
}

TEST_F(CliTest, BudgetOverride) {
  ::setenv("RATBASE_VERTEX_BUDGET", "3", 1);
  CliRun r = Cli({"space", "constants", P("cube3.json")});
  EXPECT_EQ(r.code, kBudget) << r.out << r.err;
  ::setenv("RATBASE_VERTEX_BUDGET", "many", 1);
  EXPECT_EQ(Cli({"space", "constants", P("cube3.json")}).code, kParse);
}

TEST_F(CliTest, JsonAndMeta) {
  CliRun plain = Cli({"--json", "paper", "non-universal-bound", "--eta", "1/20", "--eps", "1/2", "--delta", "3/5"});
  auto j = nlohmann::json::parse(plain.out);
  EXPECT_EQ(j["bound"], "59/35");
  EXPECT_EQ(j["one_plus_delta"], "8/5");
  EXPECT_TRUE(j["exceeds"].get<bool>());
  EXPECT_FALSE(j.contains("meta"));
  CliRun meta = Cli({"--json", "--meta", "paper", "non-universal-bound", "--eta", "1/20", "--eps", "1/2", "--delta",
                  "3/5"});
  EXPECT_EQ(nlohmann::json::parse(meta.out)["meta"]["tool"], "ratbase");
  CliRun text = Cli({"--meta", "paper", "non-universal-bound", "--eta", "1/20", "--eps", "1/2", "--delta", "3/5"});
  EXPECT_EQ(text.out.rfind("# ratbase", 0), 0u);
  CliRun err = Cli({"--json", "paper", "example", "--eta", "1", "--eps", "1/2", "--delta", "3/5"});
  EXPECT_EQ(err.code, kPrecondition);
  EXPECT_EQ(nlohmann::json::parse(err.out)["exit_code"], kPrecondition);
}

}  // namespace
}  // namespace ratbase::cli
