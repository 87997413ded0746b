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

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace starapolar {

#ifndef STARAPOLAR_VERSION
#define STARAPOLAR_VERSION "0.0.0"
#endif

const char* tool_version() { return STARAPOLAR_VERSION; }

Json to_json(const Triple& t) { return Json{{"d", t.d}, {"r", t.r}, {"n", t.n}}; }

Json to_json(const JacobianTestReport& rep) {
  Json j = to_json(rep.triple);
  j["m"] = rep.m;
  j["target"] = rep.target;
  j["prime"] = rep.prime;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["rank"] = rep.rank;
  j["trial_ranks"] = rep.trial_ranks;
  j["resamples"] = rep.resamples;
  j["verdict"] = to_string(rep.verdict);
  j["elapsed_ms"] = rep.elapsed_ms;
  j["note"] = rep.note;
  return j;
}

JacobianTestReport report_from_json(const Json& j) {
  JacobianTestReport rep{};
  rep.triple = {j.at("d").get<int>(), j.at("r").get<int>(), j.at("n").get<int>()};
  rep.m = j.at("m").get<std::size_t>();
  rep.target = j.at("target").get<std::size_t>();
  rep.prime = j.at("prime").get<std::uint64_t>();
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.trials = j.at("trials").get<unsigned>();
  rep.rank = j.at("rank").get<std::size_t>();
  if (j.contains("trial_ranks")) rep.trial_ranks = j["trial_ranks"].get<std::vector<std::size_t>>();
  rep.resamples = j.value("resamples", 0u);
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict == "RankFull")
    rep.verdict = RankVerdict::RankFull;
  else if (verdict == "RankDeficient")
    rep.verdict = RankVerdict::RankDeficient;
  else
    throw ParseError("unknown rank verdict '" + verdict + "'", 0);
  rep.elapsed_ms = j.value("elapsed_ms", 0.0);
  rep.note = j.value("note", std::string());
  return rep;
}

Json to_json(const Triple& t, const ClassificationVerdict& v) {
  Json j = to_json(t);
  j["verdict"] = to_string(v.verdict);
  j["rule"] = v.rule;
  j["note"] = v.note;
  return j;
}

std::string slurp(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return slurp(in);
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// A coefficient vector as an expression, so both inputs share one parser.
std::string coefficients_to_expression(const Json& item, Ring ring) {
  std::string expr;
  for (std::size_t k = 0; k < item.size(); ++k) {
    const auto& c = item[k];
    std::string value;
    if (c.is_string())
      value = c.get<std::string>();
    else if (c.is_number_integer())
      value = std::to_string(c.get<std::int64_t>());
    else
      throw ParseError("coefficient must be an integer or a \"p/q\" string", k);
    if (!expr.empty()) expr += " + ";
    expr += "(" + Rational::parse(value).to_string() + ")*" + variable_letter(ring) + std::to_string(k);
  }
  return expr.empty() ? "0" : expr;
}

}  // namespace

std::vector<QForm> read_linear_forms(std::string_view text, Ring ring, std::optional<std::size_t> num_vars) {
  std::vector<std::string> exprs;
  std::vector<std::size_t> widths;  // coefficient-array length, 0 for expressions
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '[') {
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    for (const auto& item : j) {
      if (item.is_string()) {
        exprs.push_back(item.get<std::string>());
        widths.push_back(0);
      } else if (item.is_array()) {
        exprs.push_back(coefficients_to_expression(item, ring));
        widths.push_back(item.size());
      } else {
        throw ParseError("each entry must be a string or a coefficient array", 0);
      }
    }
  } else {
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      exprs.push_back(line);
      widths.push_back(0);
    }
  }
  std::size_t nv = num_vars.value_or(0);
  if (!num_vars) {
    for (std::size_t i = 0; i < exprs.size(); ++i)
      nv = std::max({nv, widths[i], parse_form(exprs[i], {ring, std::nullopt}).num_vars()});
  }
  std::vector<QForm> forms;
  for (const auto& e : exprs) {
    auto f = parse_form(e, {ring, nv});
    if (f.degree() != 1) throw DomainError("'" + e + "' is not a linear form");
    forms.push_back(std::move(f));
  }
  return forms;
}

std::vector<QForm> read_linear_forms_file(const std::string& path, Ring ring, std::optional<std::size_t> num_vars) {
  return read_linear_forms(read_file(path), ring, num_vars);
}

std::string to_string(SweepSource s) { return s == SweepSource::Classify ? "classify" : "jactest"; }

Json to_json(const SweepRecord& rec) {
  Json j;
  j["triple"] = to_json(rec.triple);
  j["source"] = to_string(rec.source);
  if (rec.classification) j["classification"] = to_json(rec.triple, *rec.classification);
  if (rec.report) j["report"] = to_json(*rec.report);
  j["timestamp"] = rec.timestamp;
  j["version"] = rec.version;
  return j;
}

namespace {

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::Exists, Verdict::NotExists, Verdict::ConjecturalExists, Verdict::Undetermined})
    if (to_string(v) == s) return v;
  throw ParseError("unknown verdict '" + s + "'", 0);
}

}  // namespace

SweepRecord sweep_record_from_json(const Json& j) {
  SweepRecord rec{};
  const auto& t = j.at("triple");
  rec.triple = {t.at("d").get<int>(), t.at("r").get<int>(), t.at("n").get<int>()};
  const auto source = j.at("source").get<std::string>();
  if (source == "classify")
    rec.source = SweepSource::Classify;
  else if (source == "jactest")
    rec.source = SweepSource::Jactest;
  else
    throw ParseError("unknown record source '" + source + "'", 0);
  if (j.contains("classification")) {
    const auto& c = j["classification"];
    rec.classification = ClassificationVerdict{verdict_from_string(c.at("verdict").get<std::string>()),
                                               c.at("rule").get<std::string>(), c.value("note", std::string())};
  }
  if (j.contains("report")) rec.report = report_from_json(j["report"]);
  rec.timestamp = j.value("timestamp", std::string());
  rec.version = j.value("version", std::string());
  return rec;
}

Json sweep_payload(const SweepRecord& rec) {
  Json j = to_json(rec);
  j.erase("timestamp");
  if (j.contains("report")) j["report"].erase("elapsed_ms");
  return j;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace starapolar
