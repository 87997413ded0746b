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

// JSON and text formats shared by the command line and the sweep log.
// Scalars are always decimal strings, rationals as "p/q".

#ifndef STARAPOLAR_IO_HPP
#define STARAPOLAR_IO_HPP

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "starapolar/existence.hpp"
#include "starapolar/parse.hpp"

namespace starapolar {

using Json = nlohmann::json;
using QForm = HomogeneousForm<RationalField>;

Json to_json(const Triple& t);
Json to_json(const JacobianTestReport& report);
Json to_json(const Triple& t, const ClassificationVerdict& v);

// Inverse of to_json(report); elapsed_ms and note are optional on input.
JacobianTestReport report_from_json(const Json& j);

template <class Scalar>
Json scalars_to_json(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

// Row-major array of rows.
template <Field F>
Json matrix_to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(scalars_to_json(m.row(i)));
  return rows;
}

// Linear forms for a hyperplane set, either one expression per line (blank
// lines and lines starting with '#' are skipped) or a JSON array whose items
// are expression strings or coefficient arrays like ["1", "-1/2", 3].
// All forms share one variable count: num_vars when given, else the largest
// needed by any entry.
std::vector<QForm> read_linear_forms(std::string_view text, Ring ring, std::optional<std::size_t> num_vars = {});
std::vector<QForm> read_linear_forms_file(const std::string& path, Ring ring,
                                          std::optional<std::size_t> num_vars = {});

std::string slurp(std::istream& in);
std::string read_file(const std::string& path);

enum class SweepSource { Classify, Jactest };

std::string to_string(SweepSource s);

struct SweepRecord {
  Triple triple;
  SweepSource source;
  std::optional<ClassificationVerdict> classification;
  std::optional<JacobianTestReport> report;
  std::string timestamp;  // UTC, ISO 8601
  std::string version;
};

Json to_json(const SweepRecord& rec);
SweepRecord sweep_record_from_json(const Json& j);

// Same JSON with timestamp and elapsed_ms removed; equal payloads mean equal
// computations.
Json sweep_payload(const SweepRecord& rec);

std::string utc_timestamp();

const char* tool_version();

}  // namespace starapolar

#endif  // STARAPOLAR_IO_HPP
