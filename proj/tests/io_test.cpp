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

#include "starapolar/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "starapolar/sweep.hpp"
#include "support/golden.hpp"

namespace starapolar {
namespace {

namespace fs = std::filesystem;

fs::path temp_path(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "starapolar_io_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  fs::remove(p);
  return p;
}

TEST(ReportJson, HasAllFields) {
  const auto rep = jacobian_rank_test({2, 3, 2});
  const auto j = to_json(rep);
  for (const char* key : {"d", "r", "n", "m", "target", "prime", "seed", "trials", "rank", "verdict", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["verdict"], "RankFull");
  EXPECT_EQ(j["rank"], 6);
  EXPECT_EQ(j["prime"], kDefaultPrime);
  const auto back = report_from_json(j);
  EXPECT_EQ(back.triple, rep.triple);
  EXPECT_EQ(back.trial_ranks, rep.trial_ranks);
  EXPECT_EQ(back.verdict, rep.verdict);
}

TEST(MatrixJson, RowMajorStrings) {
  const RationalField q;
  const auto m = Matrix<RationalField>::from_rows(q, 2, {{Rational(1), Rational(-1) / Rational(2)}, {Rational(0), Rational(3)}});
  EXPECT_EQ(matrix_to_json(m).dump(), R"([["1","-1/2"],["0","3"]])");
}

TEST(LinearForms, TextLines) {
  const auto forms = read_linear_forms("# four lines\ny0\n\ny1\ny1 - y2\ny0+y1+y2\n", Ring::Dual);
  ASSERT_EQ(forms.size(), 4u);
  for (const auto& f : forms) EXPECT_EQ(f.num_vars(), 3u);
  EXPECT_EQ(forms[0], golden::dual({"y0"})[0]);
}

TEST(LinearForms, JsonCoefficientArrays) {
  const auto forms = read_linear_forms(R"([[1, "47/132", -3], "4*y0 - (20/3)*y1 - 10*y2", ["2", "862/33", "7"]])",
                                       Ring::Dual);
  ASSERT_EQ(forms.size(), 3u);
  const auto expected = golden::dual(golden::kConicTangentLines);
  EXPECT_EQ(forms[0], expected[0]);
  EXPECT_EQ(forms[1], expected[1]);
  EXPECT_EQ(forms[2], expected[2]);
}

TEST(LinearForms, Errors) {
  EXPECT_THROW(read_linear_forms("y0*y1\n", Ring::Dual), DomainError);
  EXPECT_THROW(read_linear_forms("[[1, 2.5]]", Ring::Dual), ParseError);
  EXPECT_THROW(read_linear_forms("[1, 2", Ring::Dual), ParseError);
  EXPECT_THROW(read_linear_forms("x0\n", Ring::Dual), ParseError);
  EXPECT_THROW(read_linear_forms("y3\n", Ring::Dual, 3), ParseError);
  EXPECT_THROW(read_file("/nonexistent/forms.txt"), Error);
}

TEST(SweepRecordJson, RoundTripAndPayload) {
  SweepRecord rec{{3, 4, 2}, SweepSource::Jactest, std::nullopt, jacobian_rank_test({3, 4, 2}), utc_timestamp(),
                  tool_version()};
  const auto j = to_json(rec);
  const auto back = sweep_record_from_json(Json::parse(j.dump()));
  EXPECT_EQ(sweep_payload(back), sweep_payload(rec));
  EXPECT_FALSE(sweep_payload(rec).contains("timestamp"));
  EXPECT_FALSE(sweep_payload(rec)["report"].contains("elapsed_ms"));
  EXPECT_EQ(rec.timestamp.size(), 20u);
}

TEST(Sweep, ConjectureCellsAndIdempotence) {
  const auto path = temp_path("conjecture.jsonl");
  SweepOptions o;
  o.dmin = 3;
  o.dmax = 4;
  o.out = path.string();
  std::ostringstream err;
  const auto first = run_sweep(o, err);
  EXPECT_EQ(first.written, 2u);
  EXPECT_EQ(first.skipped, 0u);
  for (const auto& r : first.records) EXPECT_EQ(r.report->verdict, RankVerdict::RankFull);
  const auto second = run_sweep(o, err);
  EXPECT_EQ(second.written, 0u);
  EXPECT_EQ(second.skipped, 2u);
  o.force = true;
  EXPECT_EQ(run_sweep(o, err).written, 2u);
  EXPECT_EQ(read_sweep_log(o.out).size(), 4u);
  // a different seed is a different cell
  o.force = false;
  o.jactest.seed = 5;
  EXPECT_EQ(run_sweep(o, err).written, 2u);
}

TEST(Sweep, DeterministicPayloads) {
  SweepOptions o;
  o.dmin = 3;
  o.dmax = 5;
  o.jobs = 3;
  std::ostringstream err;
  o.out = temp_path("a.jsonl").string();
  auto a = run_sweep(o, err).records;
  o.out = temp_path("b.jsonl").string();
  o.jobs = 1;
  auto b = run_sweep(o, err).records;
  auto by_d = [](const SweepRecord& x, const SweepRecord& y) { return x.triple.d < y.triple.d; };
  std::sort(a.begin(), a.end(), by_d);
  std::sort(b.begin(), b.end(), by_d);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(sweep_payload(a[i]).dump(), sweep_payload(b[i]).dump());
}

TEST(Sweep, PartialLineIsRepaired) {
  const auto path = temp_path("partial.jsonl");
  {
    std::ofstream f(path);
    f << R"({"triple":{"d":3,"r":4,"n":2},"sou)";
  }
  SweepOptions o;
  o.dmin = 3;
  o.dmax = 3;
  o.out = path.string();
  std::ostringstream err;
  EXPECT_EQ(run_sweep(o, err).written, 1u);
  std::size_t bad = 0;
  EXPECT_EQ(read_sweep_log(o.out, &bad).size(), 1u);
  EXPECT_EQ(bad, 1u);
}

TEST(Sweep, ClassifyMode) {
  SweepOptions o;
  o.mode = SweepMode::Classify;
  o.n = 3;
  o.dmin = 3;
  o.dmax = 4;
  o.out = temp_path("classify.jsonl").string();
  std::ostringstream err;
  const auto s = run_sweep(o, err);
  EXPECT_EQ(s.written, 4u + 5u);
  for (const auto& r : s.records) {
    ASSERT_TRUE(r.classification);
    EXPECT_EQ(r.classification->verdict, classify(r.triple).verdict);
  }
}

TEST(Sweep, UnwritablePath) {
  SweepOptions o;
  o.out = "/nonexistent-dir/log.jsonl";
  std::ostringstream err;
  EXPECT_THROW(run_sweep(o, err), Error);
}

}  // namespace
}  // namespace starapolar
