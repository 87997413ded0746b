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

#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "starapolar/apolar.hpp"
#include "starapolar/io.hpp"
#include "starapolar/sweep.hpp"

namespace starapolar::cli {
namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::uint64_t prime = kDefaultPrime;
  unsigned trials = 3;
};

struct TripleArgs {
  int d = 0;
  int r = 0;
  int n = 0;

  Triple get() const {
    const Triple t{d, r, n};
    try {
      validate(t);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return t;
  }
};

void add_triple_options(CLI::App* cmd, TripleArgs& t) {
  cmd->add_option("--d", t.d, "form degree")->required();
  cmd->add_option("--r", t.r, "number of hyperplanes")->required();
  cmd->add_option("--n", t.n, "projective dimension")->required();
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json forms_to_json(const std::vector<QForm>& forms) {
  Json a = Json::array();
  for (const auto& f : forms) a.push_back(print_form(f));
  return a;
}

JacobianTestOptions jactest_options(const Globals& g) {
  JacobianTestOptions o;
  o.prime = g.prime;
  o.seed = g.seed;
  o.trials = g.trials;
  return o;
}

void print_report(std::ostream& out, const JacobianTestReport& rep) {
  out << to_string(rep.triple) << ": rank " << rep.rank << " of " << rep.target << " (m = " << rep.m << "), "
      << to_string(rep.verdict) << '\n';
  out << "  prime " << rep.prime << ", seed " << rep.seed << ", trials " << rep.trials << ", per-trial ranks";
  for (auto k : rep.trial_ranks) out << ' ' << k;
  out << '\n' << "  " << rep.note << '\n';
}

HyperplaneSet<RationalField> read_hyperplanes(const std::string& path, std::optional<std::size_t> nv) {
  return HyperplaneSet<RationalField>::from_forms(read_linear_forms_file(path, Ring::Dual, nv));
}

QForm read_primal(const std::string& text, std::optional<std::size_t> nv) { return parse_form(text, {Ring::Primal, nv}); }

int cmd_rho(const Globals& g, const TripleArgs& a, std::ostream& out) {
  const Triple t = a.get();
  const auto value = rho(t);
  const std::string note = value < 0 ? "necessary condition fails" : "necessary condition holds";
  if (g.json) {
    Json j = to_json(t);
    j["rho"] = value;
    j["note"] = note;
    print_json(out, j);
  } else {
    out << "rho" << to_string(t) << " = " << value << "  (" << note << ")\n";
  }
  return kExitOk;
}

int cmd_classify(const Globals& g, const TripleArgs& a, std::ostream& out) {
  const Triple t = a.get();
  const auto v = classify(t);
  if (g.json)
    print_json(out, to_json(t, v));
  else
    out << to_string(t) << ": " << to_string(v.verdict) << " [" << v.rule << "] " << v.note << '\n';
  return kExitOk;
}

int cmd_jactest(const Globals& g, const TripleArgs& a, std::ostream& out) {
  const auto rep = jacobian_rank_test(a.get(), jactest_options(g));
  if (g.json)
    print_json(out, to_json(rep));
  else
    print_report(out, rep);
  return kExitOk;
}

int cmd_star(const Globals& g, const std::string& path, std::optional<std::size_t> nv, std::ostream& out) {
  const auto star = StarConfiguration<RationalField>::build(read_hyperplanes(path, nv));
  const auto& hs = star.hyperplanes;
  const auto t_max = static_cast<unsigned>(hs.r());
  const auto hf = hilbert_function(hs.field(), point_coordinates(star.points), t_max);
  std::vector<std::size_t> by_products, by_intersection;
  for (unsigned t = 0; t <= t_max; ++t) {
    by_products.push_back(star_ideal_dimension_by_products(hs, t));
    by_intersection.push_back(star_ideal_dimension_by_intersection(hs, t));
  }
  if (g.json) {
    Json pts = Json::array();
    for (const auto& p : star.points) {
      std::vector<std::size_t> tag;
      for (auto k : p.tag) tag.push_back(k + 1);
      pts.push_back({{"tag", tag}, {"coordinates", scalars_to_json(p.normalized())}});
    }
    print_json(out, {{"n", hs.n()},
                     {"r", hs.r()},
                     {"points", pts},
                     {"generators", forms_to_json(star.ideal_generators)},
                     {"hilbert_function", hf},
                     {"ideal_dimension", by_products}});
    return kExitOk;
  }
  out << star.points.size() << " points\n";
  for (const auto& p : star.points) {
    out << "  " << format_subset(p.tag) << "  [";
    const auto c = p.normalized();
    for (std::size_t j = 0; j < c.size(); ++j) out << (j ? ":" : "") << c[j].to_string();
    out << "]\n";
  }
  out << star.ideal_generators.size() << " generators of degree " << hs.r() - hs.n() + 1 << '\n';
  for (const auto& f : star.ideal_generators) out << "  " << print_form(f) << '\n';
  out << "t  HF  dim I_t\n";
  for (unsigned t = 0; t <= t_max; ++t) out << t << "  " << hf[t] << "  " << by_products[t] << '\n';
  for (unsigned t = 0; t <= t_max; ++t)
    if (by_products[t] != by_intersection[t])
      throw Error("ideal dimension mismatch at degree " + std::to_string(t));
  return kExitOk;
}

int cmd_perp(const Globals& g, const std::string& form, std::optional<std::size_t> nv, std::optional<unsigned> degree,
             bool with_matrix, std::ostream& out) {
  const auto f = read_primal(form, nv);
  const unsigned d = static_cast<unsigned>(std::max(f.degree(), 0));
  std::vector<unsigned> degrees;
  if (degree)
    degrees.push_back(*degree);
  else
    for (unsigned i = 0; i <= d + 1; ++i) degrees.push_back(i);
  Json pieces = Json::array();
  for (auto i : degrees) {
    const auto piece = perp_piece(f, i);
    if (g.json) {
      Json j{{"degree", i}, {"dimension", piece.dimension()}, {"basis", forms_to_json(piece.basis)}};
      if (with_matrix && i <= d) j["catalecticant"] = matrix_to_json(catalecticant(f, i).matrix);
      pieces.push_back(j);
      continue;
    }
    out << "degree " << i << ": dimension " << piece.dimension() << '\n';
    // T_i is the whole piece past the degree; listing it says nothing.
    if (i <= d)
      for (const auto& b : piece.basis) out << "  " << print_form(b) << '\n';
  }
  if (g.json) print_json(out, {{"form", print_form(f)}, {"pieces", pieces}});
  return kExitOk;
}

int cmd_apolar_check(const Globals& g, const std::string& form, const std::string& path, std::optional<std::size_t> nv,
                      std::ostream& out) {
  const auto f = read_primal(form, nv);
  const auto star = StarConfiguration<RationalField>::build(read_hyperplanes(path, f.num_vars()));
  const auto result = is_apolar_ideal_contained(star.ideal_generators, f);
  if (g.json) {
    Json j{{"apolar", result.contained}, {"points", star.points.size()}};
    if (!result.contained) {
      j["failing_generator"] = print_form(star.ideal_generators[*result.failing_index]);
      j["contraction"] = print_form(*result.witness);
    }
    print_json(out, j);
  } else {
    out << "apolar: " << (result.contained ? "true" : "false") << '\n';
    if (!result.contained)
      out << "  " << print_form(star.ideal_generators[*result.failing_index]) << " contracts F to "
          << print_form(*result.witness) << '\n';
  }
  return kExitOk;
}

int cmd_waring(const Globals& g, const std::string& form, const std::string& path, std::optional<std::size_t> nv,
                std::ostream& out) {
  const auto f = read_primal(form, nv);
  const auto star = StarConfiguration<RationalField>::build(read_hyperplanes(path, f.num_vars()));
  const auto dec = solve_waring(star.linear_forms(), f);
  if (!dec) {
    if (g.json)
      print_json(out, {{"feasible", false}});
    else
      out << "no decomposition over these points\n";
    return kExitOk;
  }
  const auto residual = dec->expand() - f;
  if (g.json) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < dec->linear_forms.size(); ++i)
      terms.push_back({{"coefficient", dec->coefficients[i].to_string()},
                       {"linear_form", print_form(dec->linear_forms[i])}});
    print_json(out, {{"feasible", true}, {"terms", terms}, {"residual", print_form(residual)}});
    return kExitOk;
  }
  for (std::size_t i = 0; i < dec->linear_forms.size(); ++i)
    out << dec->coefficients[i].to_string() << " * (" << print_form(dec->linear_forms[i]) << ")^" << f.degree()
        << '\n';
  out << "residual: " << print_form(residual) << '\n';
  return kExitOk;
}

int cmd_sweep(const Globals& g, SweepOptions options, std::ostream& out, std::ostream& err) {
  options.jactest = jactest_options(g);
  const auto summary = run_sweep(options, err);
  if (g.json) {
    Json recs = Json::array();
    for (const auto& r : summary.records) recs.push_back(to_json(r));
    print_json(out, {{"written", summary.written},
                     {"skipped", summary.skipped},
                     {"failed", summary.failed},
                     {"records", recs}});
  } else {
    for (const auto& r : summary.records) {
      if (r.report)
        out << to_string(r.triple) << ": rank " << r.report->rank << " of " << r.report->target << ", "
            << to_string(r.report->verdict) << '\n';
      else
        out << to_string(r.triple) << ": " << to_string(r.classification->verdict) << '\n';
    }
    out << summary.written << " written, " << summary.skipped << " skipped, " << summary.failed << " failed\n";
  }
  return summary.failed ? kExitFailure : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star configurations apolar to generic forms", "starapolar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version());

  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "base RNG seed")->envname("STARAPOLAR_SEED")->capture_default_str();
  app.add_option("--prime", g.prime, "field characteristic for rank tests")
      ->envname("STARAPOLAR_PRIME")
      ->capture_default_str();
  app.add_option("--trials", g.trials, "random points per rank test")
      ->envname("STARAPOLAR_TRIALS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  TripleArgs triple;
  auto* rho_cmd = app.add_subcommand("rho", "expected dimension count rho(d,r,n)");
  add_triple_options(rho_cmd, triple);
  auto* classify_cmd = app.add_subcommand("classify", "closed-form existence verdict");
  add_triple_options(classify_cmd, triple);
  auto* jactest_cmd = app.add_subcommand("jactest", "Jacobian rank test of the Gamma map");
  add_triple_options(jactest_cmd, triple);

  std::string forms_path;
  std::optional<std::size_t> num_vars;
  auto* star_cmd = app.add_subcommand("star", "points, ideal generators and Hilbert function of X(r)");
  star_cmd->add_option("--forms", forms_path, "file of linear forms in y0..yn")->required();
  star_cmd->add_option("--vars", num_vars, "number of variables n+1");

  std::string form;
  std::optional<unsigned> degree;
  bool with_matrix = false;
  auto* perp_cmd = app.add_subcommand("perp", "graded pieces of the apolar ideal");
  perp_cmd->add_option("--form", form, "form in x0..xn")->required();
  perp_cmd->add_option("--vars", num_vars, "number of variables n+1");
  perp_cmd->add_option("--degree", degree, "single degree (default 0..d+1)");
  perp_cmd->add_flag("--catalecticant", with_matrix, "include catalecticant matrices in JSON");

  auto* check_cmd = app.add_subcommand("apolar-check", "is I(X(r)) contained in F^perp");
  check_cmd->add_option("--form", form, "form in x0..xn")->required();
  check_cmd->add_option("--forms", forms_path, "file of linear forms in y0..yn")->required();
  check_cmd->add_option("--vars", num_vars, "number of variables n+1");

  auto* waring_cmd = app.add_subcommand("waring", "decompose F over the points of X(r)");
  waring_cmd->add_option("--form", form, "form in x0..xn")->required();
  waring_cmd->add_option("--forms", forms_path, "file of linear forms in y0..yn")->required();
  waring_cmd->add_option("--vars", num_vars, "number of variables n+1");

  SweepOptions sweep;
  std::string mode = "conjecture";
  auto* sweep_cmd = app.add_subcommand("sweep", "append rank tests or verdicts to a JSON-lines log");
  sweep_cmd->add_option("--n", sweep.n, "projective dimension")->capture_default_str();
  sweep_cmd->add_option("--dmin", sweep.dmin, "smallest degree")->capture_default_str();
  sweep_cmd->add_option("--dmax", sweep.dmax, "largest degree")->required();
  sweep_cmd->add_option("--mode", mode, "conjecture or classify")
      ->check(CLI::IsMember({"conjecture", "classify"}))
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "JSON-lines output file")->required();
  sweep_cmd->add_flag("--force", sweep.force, "recompute cells already in the log");
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const bool info = e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success);
    app.exit(e, out, err);
    return info ? kExitOk : kExitUsage;
  }

  try {
    if (rho_cmd->parsed()) return cmd_rho(g, triple, out);
    if (classify_cmd->parsed()) return cmd_classify(g, triple, out);
    if (jactest_cmd->parsed()) return cmd_jactest(g, triple, out);
    if (star_cmd->parsed()) return cmd_star(g, forms_path, num_vars, out);
    if (perp_cmd->parsed()) return cmd_perp(g, form, num_vars, degree, with_matrix, out);
    if (check_cmd->parsed()) return cmd_apolar_check(g, form, forms_path, num_vars, out);
    if (waring_cmd->parsed()) return cmd_waring(g, form, forms_path, num_vars, out);
    if (sweep_cmd->parsed()) {
      sweep.mode = mode == "classify" ? SweepMode::Classify : SweepMode::Conjecture;
      return cmd_sweep(g, sweep, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GeneralPositionError& e) {
    if (g.json) {
      std::vector<std::size_t> witness;
      for (auto k : e.witness()) witness.push_back(k + 1);
      print_json(out, {{"error", e.what()}, {"witness", witness}});
    }
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    if (g.json) print_json(out, {{"error", e.what()}});
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"starapolar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace starapolar::cli
