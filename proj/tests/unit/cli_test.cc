// Copyright 2026 The cmld Authors.
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

#include "cmld/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cmld::cli {
namespace {

using Json = nlohmann::json;

std::string Fixture(const std::string& name) {
  return std::string(CMLD_FIXTURE_DIR) + "/" + name;
}

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

// Each fixture command line, with file names resolved.
std::vector<std::vector<std::string>> FixtureSuite() {
  const std::vector<std::vector<std::string>> raw = {
      {"decide", "triangle.graph", "rgb.motif"},
      {"decide", "two_edges.graph", "rrgg.motif"},
      {"decide", "star.graph", "star.motif", "--k", "2"},
      {"find", "triangle.graph", "rgb.motif"},
      {"find", "rrg_triangle.graph", "rgb.motif"},
      {"min-add", "path_rbg.graph", "rg.motif"},
      {"min-cc", "two_edges.graph", "rrgg.motif"},
      {"min-substitute", "rrg_triangle.graph", "rgb.motif"},
      {"mld", "pair.circuit", "--k", "2"},
      {"mld", "pair.circuit", "--k", "2", "--colors", "pair.colors", "--motif",
       "pair_mu1.motif"},
      {"selftest"},
  };
  std::vector<std::vector<std::string>> out;
  for (auto args : raw) {
    for (auto& a : args) {
      if (a.find('.') != std::string::npos) a = Fixture(a);
    }
    out.push_back(args);
  }
  return out;
}

TEST(CliTest, DecideTriangle) {
  const Result r = RunCli({"decide", Fixture("triangle.graph"), Fixture("rgb.motif")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["answer"], "yes");
  EXPECT_GE(j["trials"].get<int>(), 1);
  EXPECT_EQ(j["plan"]["q"], 0.25);
  EXPECT_EQ(j["seed"], 1);
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_NE(r.err.find("decide: yes"), std::string::npos);
}

TEST(CliTest, NoAnswerIsStillSuccess) {
  const Result r = RunCli({"decide", Fixture("two_edges.graph"), Fixture("rrgg.motif")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["answer"], "no");
  EXPECT_EQ(r.json()["trials"], r.json()["plan"]["trials"]);
}

TEST(CliTest, VariantParameters) {
  EXPECT_EQ(RunCli({"min-substitute", Fixture("rrg_triangle.graph"),
                    Fixture("rgb.motif")}).json()["p"], 1);
  EXPECT_EQ(RunCli({"min-add", Fixture("path_rbg.graph"), Fixture("rg.motif")})
                .json()["p"], 1);
  EXPECT_TRUE(RunCli({"min-add", Fixture("path_rbg.graph"), Fixture("rg.motif"),
                      "--max-p", "0"}).json()["p"].is_null());
  EXPECT_EQ(RunCli({"min-cc", Fixture("two_edges.graph"), Fixture("rrgg.motif")})
                .json()["q"], 2);
  const Json found =
      RunCli({"find", Fixture("triangle.graph"), Fixture("rgb.motif")}).json();
  EXPECT_EQ(found["vertices"], Json::array({"a", "b", "c"}));
  EXPECT_EQ(RunCli({"decide", Fixture("star.graph"), Fixture("star.motif"), "--k", "5"})
                .json()["answer"], "no");
}

TEST(CliTest, MldCommand) {
  EXPECT_EQ(RunCli({"mld", Fixture("pair.circuit"), "--k", "2"}).json()["answer"], "yes");
  const std::vector<std::string> colored = {"mld", Fixture("pair.circuit"), "--k", "2",
                                            "--colors", Fixture("pair.colors"),
                                            "--motif"};
  auto with = [&](const char* motif) {
    auto args = colored;
    args.push_back(Fixture(motif));
    return RunCli(args).json()["answer"];
  };
  EXPECT_EQ(with("pair_mu2.motif"), "yes");
  EXPECT_EQ(with("pair_mu1.motif"), "no");
  EXPECT_EQ(RunCli({"mld", Fixture("mixed.circuit"), "--k", "2"}).json()["answer"], "yes");
  EXPECT_EQ(RunCli({"mld", Fixture("pair.circuit"), "--k", "3"}).code, kExitInput);
  EXPECT_EQ(RunCli({"mld", Fixture("pair.circuit"), "--k", "2", "--colors",
                    Fixture("pair.colors")}).code, kExitInput);
}

TEST(CliTest, MalformedMotifReportsLine) {
  const Result r =
      RunCli({"decide", Fixture("triangle.graph"), Fixture("malformed.motif")});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(RunCli({}).code, kExitInput);
  EXPECT_EQ(RunCli({"bogus"}).code, kExitInput);
  EXPECT_EQ(RunCli({"decide", "/nonexistent.graph", Fixture("rgb.motif")}).code,
            kExitInput);
  EXPECT_EQ(RunCli({"decide", Fixture("triangle.graph"), Fixture("rgb.motif"),
                    "--delta", "0"}).code, kExitInput);
  EXPECT_EQ(RunCli({"decide", Fixture("triangle.graph"), Fixture("rgb.motif"),
                    "--threads", "0"}).code, kExitInput);
  EXPECT_EQ(RunCli({"decide", Fixture("triangle.graph"), Fixture("rgb.motif"),
                    "--max-k", "2"}).code, kExitResource);
  EXPECT_EQ(RunCli({"min-substitute", Fixture("triangle.graph"), Fixture("rgb.motif"),
                    "--max-substitute-k", "2"}).code, kExitResource);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST(CliTest, OptionsReachTheReport) {
  const Json j = RunCli({"decide", Fixture("triangle.graph"), Fixture("rgb.motif"),
                         "--seed", "99", "--field-bits", "11", "--timing"})
                     .json();
  EXPECT_EQ(j["seed"], 99);
  EXPECT_EQ(j["field_bits"], 11);
  EXPECT_TRUE(j.contains("wall_seconds"));
  const Json capped = RunCli({"decide", Fixture("two_edges.graph"),
                              Fixture("rrgg.motif"), "--max-reps", "3"})
                          .json();
  EXPECT_EQ(capped["trials"], 3);
}

TEST(CliTest, EnvironmentSuppliesDefaults) {
  ::setenv("CMLD_SEED", "1234", 1);
  const Json env = RunCli({"decide", Fixture("triangle.graph"), Fixture("rgb.motif")}).json();
  const Json flag = RunCli({"decide", Fixture("triangle.graph"), Fixture("rgb.motif"),
                            "--seed", "5"}).json();
  ::setenv("CMLD_SEED", "not-a-number", 1);
  const int bad = RunCli({"decide", Fixture("triangle.graph"), Fixture("rgb.motif")}).code;
  ::unsetenv("CMLD_SEED");
  EXPECT_EQ(env["seed"], 1234);
  EXPECT_EQ(flag["seed"], 5);
  EXPECT_EQ(bad, kExitInput);
}

TEST(CliTest, JsonIdenticalAcrossThreadCounts) {
  for (const auto& base : FixtureSuite()) {
    auto one = base;
    one.insert(one.end(), {"--seed", "7", "--threads", "1"});
    auto eight = base;
    eight.insert(eight.end(), {"--seed", "7", "--threads", "8"});
    const Result a = RunCli(one);
    const Result b = RunCli(eight);
    ASSERT_EQ(a.code, 0) << base[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << base[0];
  }
}

TEST(CliTest, FormatIsAFixedPoint) {
  const std::vector<std::pair<std::string, std::string>> files = {
      {"graph", "triangle.graph"},     {"graph", "rrg_triangle.graph"},
      {"graph", "path_rbg.graph"},     {"graph", "two_edges.graph"},
      {"graph", "star.graph"},         {"motif", "rgb.motif"},
      {"motif", "rrgg.motif"},         {"motif", "star.motif"},
      {"coloring", "pair.colors"},     {"circuit", "pair.circuit"},
      {"circuit", "mixed.circuit"},
  };
  const std::string tmp = ::testing::TempDir() + "cmld_format_roundtrip";
  for (const auto& [kind, file] : files) {
    const Result first = RunCli({"format", kind, Fixture(file)});
    ASSERT_EQ(first.code, 0) << file << ": " << first.err;
    std::ofstream(tmp) << first.out;
    const Result second = RunCli({"format", kind, tmp});
    EXPECT_EQ(second.out, first.out) << file;
  }
  EXPECT_EQ(RunCli({"format", "motif", Fixture("malformed.motif")}).code, kExitInput);
}

}  // namespace
}  // namespace cmld::cli
