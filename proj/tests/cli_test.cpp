// Copyright 2026 The starapolar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "starapolar/cli.hpp"

#include <gtest/gtest.h>
#include <stdlib.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "starapolar/io.hpp"

namespace starapolar::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto dir = fs::temp_directory_path() / "starapolar_cli_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << body;
  return p.string();
}

const std::string kCusp = "x0^3 - x1^2*x2";
const std::string kConicTangent = "x0*x2^2 + x0^2*x1";

std::string cusp_lines() { return write_temp("cusp.txt", "y0\ny1\ny1 - y2\ny0 + y1 + y2\n"); }

std::string conic_lines() {
  return write_temp("conic.txt",
                    "y0+(47/132)*y1-3*y2\n4*y0-(20/3)*y1-10*y2\n2*y0+(862/33)*y1+7*y2\n11*y0-(421/12)*y1+6*y2\n");
}

TEST(CliRho, Values) {
  auto r = call({"rho", "--d", "3", "--r", "5", "--n", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("= 5"), std::string::npos);
  r = call({"--json", "rho", "--d", "3", "--r", "4", "--n", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.json()["rho"], -4);
  EXPECT_EQ(r.json()["note"], "necessary condition fails");
}

TEST(CliRho, UsageErrors) {
  auto r = call({"rho", "--d", "2", "--r", "1", "--n", "2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("r >= n"), std::string::npos) << r.err;
  EXPECT_EQ(call({"rho", "--d", "2"}).code, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(CliClassify, Examples) {
  EXPECT_EQ(call({"--json", "classify", "--d", "3", "--r", "7", "--n", "5"}).json()["verdict"], "Exists");
  EXPECT_EQ(call({"--json", "classify", "--d", "3", "--r", "7", "--n", "5"}).json()["rule"], "exceptional-triple");
  EXPECT_EQ(call({"--json", "classify", "--d", "6", "--r", "7", "--n", "2"}).json()["verdict"], "ConjecturalExists");
  EXPECT_EQ(call({"--json", "classify", "--d", "3", "--r", "8", "--n", "5"}).json()["verdict"], "Exists");
  EXPECT_EQ(call({"--json", "classify", "--d", "3", "--r", "6", "--n", "5"}).json()["verdict"], "NotExists");
}

TEST(CliJactest, ReportsRankFull) {
  for (const auto& [args, rank] : std::vector<std::pair<std::vector<std::string>, int>>{
           {{"--d", "4", "--r", "6", "--n", "3"}, 35}, {{"--d", "3", "--r", "6", "--n", "4"}, 35},
           {{"--d", "2", "--r", "3", "--n", "2"}, 6}}) {
    std::vector<std::string> full{"jactest", "--json"};
    full.insert(full.end(), args.begin(), args.end());
    const auto r = call(full);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["rank"], rank);
    EXPECT_EQ(j["verdict"], "RankFull");
    EXPECT_EQ(j["prime"], kDefaultPrime);
    EXPECT_EQ(j["seed"], 1);
    EXPECT_EQ(j["trials"], 3);
  }
}

TEST(CliJactest, FlagsAndEnvironment) {
  setenv("STARAPOLAR_SEED", "17", 1);
  setenv("STARAPOLAR_TRIALS", "2", 1);
  auto j = call({"--json", "jactest", "--d", "2", "--r", "3", "--n", "2"}).json();
  EXPECT_EQ(j["seed"], 17);
  EXPECT_EQ(j["trials"], 2);
  j = call({"--json", "--seed", "4", "jactest", "--d", "2", "--r", "3", "--n", "2", "--prime", "10007"}).json();
  EXPECT_EQ(j["seed"], 4);
  EXPECT_EQ(j["prime"], 10007);
  unsetenv("STARAPOLAR_SEED");
  unsetenv("STARAPOLAR_TRIALS");
  EXPECT_EQ(call({"jactest", "--d", "2", "--r", "3", "--n", "2", "--prime", "10000"}).code, kExitFailure);
  EXPECT_EQ(call({"jactest", "--d", "2", "--r", "3", "--n", "2", "--trials", "0"}).code, kExitUsage);
}

TEST(CliStar, PaperLines) {
  const auto r = call({"--json", "star", "--forms", cusp_lines()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = r.json();
  ASSERT_EQ(j["points"].size(), 6u);
  EXPECT_EQ(j["points"][5]["coordinates"], (Json{"1", "-1/2", "-1/2"}));
  EXPECT_EQ(j["points"][5]["tag"], (Json{3, 4}));
  EXPECT_EQ(j["hilbert_function"], (Json{1, 3, 6, 6, 6}));
  EXPECT_EQ(j["generators"].size(), 4u);
  const auto text = call({"star", "--forms", cusp_lines()});
  EXPECT_NE(text.out.find("6 points"), std::string::npos);
}

TEST(CliStar, CoordinateAndConcurrentLines) {
  auto j = call({"--json", "star", "--forms", write_temp("coord.json", R"([[1,0,0],[0,1,0],[0,0,1]])")}).json();
  EXPECT_EQ(j["points"].size(), 3u);
  const auto r = call({"--json", "star", "--forms", write_temp("conc.txt", "y0\ny1\ny0+y1\ny2\n")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_EQ(r.json()["witness"], (Json{1, 2, 3}));
  EXPECT_NE(r.err.find("{1,2,3}"), std::string::npos);
  EXPECT_EQ(call({"star", "--forms", "/nonexistent/lines.txt"}).code, kExitFailure);
}

TEST(CliPerp, CuspDegreeTwo) {
  const auto r = call({"--json", "perp", "--form", kCusp, "--degree", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto piece = r.json()["pieces"][0];
  EXPECT_EQ(piece["dimension"], 3);
  EXPECT_EQ(piece["basis"], (Json{"y0*y1", "y0*y2", "y2^2"}));
  const auto all = call({"--json", "perp", "--form", kCusp, "--catalecticant"}).json();
  EXPECT_EQ(all["pieces"].size(), 5u);
  EXPECT_EQ(all["pieces"][2]["catalecticant"].size(), 3u);
  EXPECT_EQ(call({"perp", "--form", "x0 + x1^2"}).code, kExitFailure);
  const auto wide = call({"--json", "perp", "--form", "x0^2", "--vars", "3", "--degree", "1"}).json();
  EXPECT_EQ(wide["pieces"][0]["basis"], (Json{"y1", "y2"}));
}

TEST(CliApolarCheck, Golden) {
  auto r = call({"--json", "apolar-check", "--form", kConicTangent, "--forms", conic_lines()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["apolar"], true);
  EXPECT_EQ(call({"--json", "apolar-check", "--form", kCusp, "--forms", cusp_lines()}).json()["apolar"], true);
  r = call({"--json", "apolar-check", "--form", kCusp, "--forms", conic_lines()});
  EXPECT_EQ(r.json()["apolar"], false);
  EXPECT_TRUE(r.json().contains("failing_generator"));
}

TEST(CliWaring, CuspDecomposition) {
  const auto r = call({"--json", "waring", "--form", kCusp, "--forms", cusp_lines()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["feasible"], true);
  EXPECT_EQ(j["residual"], "0");
  ASSERT_EQ(j["terms"].size(), 6u);
  EXPECT_EQ(j["terms"][0]["coefficient"], "1/3");
  EXPECT_EQ(j["terms"][0]["linear_form"], "x2");
  EXPECT_EQ(call({"--json", "waring", "--form", "x0^3 + x2^3", "--forms", write_temp("two.txt", "y1\ny2\n")})
                .json()["feasible"],
            false);
}

TEST(CliSweep, ConjectureRange) {
  const auto dir = fs::temp_directory_path() / "starapolar_cli_test";
  fs::create_directories(dir);
  const auto out = (dir / "sweep.jsonl").string();
  fs::remove(out);
  auto r = call({"--json", "sweep", "--n", "2", "--dmin", "3", "--dmax", "3", "--mode", "conjecture", "--out", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["written"], 1);
  EXPECT_EQ(r.json()["records"][0]["report"]["verdict"], "RankFull");
  r = call({"--json", "sweep", "--dmax", "3", "--out", out});
  EXPECT_EQ(r.json()["skipped"], 1);
  EXPECT_EQ(call({"sweep", "--dmax", "3", "--out", "/nonexistent-dir/x.jsonl"}).code, kExitFailure);
  EXPECT_EQ(call({"sweep", "--dmax", "3", "--out", out, "--mode", "bogus"}).code, kExitUsage);
}

TEST(CliJson, ErrorsAreJsonToo) {
  const auto r = call({"--json", "perp", "--form", "x0 + * x1"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_TRUE(r.json().contains("error"));
}

}  // namespace
}  // namespace starapolar::cli
