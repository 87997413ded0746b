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

#include "starapolar/existence.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace starapolar {

namespace {

std::int64_t checked(unsigned __int128 v) {
  if (v > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
    throw DomainError("value overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

bool is_exceptional(const Triple& t) {
  static constexpr Triple kExceptional[] = {{3, 5, 3}, {4, 6, 3}, {5, 7, 3}, {3, 6, 4}, {3, 7, 5}};
  return std::find(std::begin(kExceptional), std::end(kExceptional), t) != std::end(kExceptional);
}

}  // namespace

std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.d) + "," + std::to_string(t.r) + "," + std::to_string(t.n) + ")";
}

void validate(const Triple& t) {
  if (t.d < 1) throw DomainError("degree d must be >= 1, got " + std::to_string(t.d));
  if (t.n < 1) throw DomainError("n must be >= 1, got " + std::to_string(t.n));
  if (t.r < t.n)
    throw DomainError("need r >= n, got r = " + std::to_string(t.r) + " < n = " + std::to_string(t.n));
}

std::int64_t rho(const Triple& t) {
  validate(t);
  const auto d = static_cast<std::uint64_t>(t.d);
  const auto r = static_cast<std::uint64_t>(t.r);
  const auto n = static_cast<std::uint64_t>(t.n);
  const std::int64_t stars = checked(binomial(r, n));
  const std::int64_t moves = checked(static_cast<unsigned __int128>(n) * r);
  const std::int64_t forms = checked(binomial(d + n, d));
  return stars + moves - forms;
}

std::int64_t rho_n2(int d, int r) {
  if (r < 2) throw DomainError("rho_n2 needs r >= 2");
  if (d < 1) throw DomainError("rho_n2 needs d >= 1");
  const std::int64_t dd = d;
  const std::int64_t rr = r;
  return (rr * (rr - 1) + 4 * rr - (dd + 2) * (dd + 1)) / 2;
}

std::int64_t rho_n2_factored(int d, int r) {
  const std::int64_t dd = d;
  const std::int64_t rr = r;
  // (r-d) and (3+r+d) have opposite parity, so the product is even.
  return (rr - dd) * (3 + rr + dd) / 2 - 1;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists: return "Exists";
    case Verdict::NotExists: return "NotExists";
    case Verdict::ConjecturalExists: return "ConjecturalExists";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

ClassificationVerdict classify(const Triple& t) {
  validate(t);
  const int d = t.d;
  const int r = t.r;
  const int n = t.n;
  if (n == 1) return {Verdict::Undetermined, "binary-forms", "binary forms (n = 1) are not covered"};
  if (d == 2) {
    if (r >= n + 1) return {Verdict::Exists, "quadrics", "quadrics: exists iff r >= n + 1"};
    return {Verdict::NotExists, "quadrics", "quadrics: exists iff r >= n + 1"};
  }
  if (r >= d + n)
    return {Verdict::Exists, "ideal-degree", "r >= d + n: I(X(r)) starts in degree r - n + 1 > d"};
  if (d == 1) return {Verdict::Undetermined, "linear-forms", "d = 1 with r < d + n is not covered"};
  if (n >= 6) return {Verdict::NotExists, "large-n", "n >= 6 and r < d + n: rho < 0"};
  if (n >= 3) {
    if (is_exceptional(t))
      return {Verdict::Exists, "exceptional-triple", "exceptional triple with r < d + n, existence by rank computation"};
    return {Verdict::NotExists, "small-n", "n in {3,4,5} and r < d + n: rho < 0"};
  }
  // n == 2
  if (r <= d) return {Verdict::NotExists, "ternary-few-lines", "n = 2 and r <= d: rho < 0"};
  if (d == 3)
    return {Verdict::Exists, "ternary-cubic",
            "generic ternary cubic: two reducible conics through four points give an apolar X(4)"};
  if (d <= 13)
    return {Verdict::ConjecturalExists, "ternary-boundary", "(d, d+1, 2): conjectured; verified d <= 13"};
  return {Verdict::ConjecturalExists, "ternary-boundary", "(d, d+1, 2): conjectured"};
}

std::size_t parameter_count(const Triple& t) {
  validate(t);
  const auto r = static_cast<std::uint64_t>(t.r);
  const auto n = static_cast<std::uint64_t>(t.n);
  return static_cast<std::size_t>((n + 1) * r + binomial(r, n));
}

std::size_t target_dimension(const Triple& t) {
  validate(t);
  return static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(t.n + t.d), static_cast<std::uint64_t>(t.d)));
}

Matrix<PrimeField> gamma_jacobian(const PrimeField& field, const Triple& t, std::span<const Fp> params) {
  const std::size_t m = parameter_count(t);
  if (params.size() != m) throw DomainError("parameter point has wrong length");
  const JetField<PrimeField> jets(field, m);
  std::vector<Jet<Fp>> seeded;
  seeded.reserve(m);
  for (std::size_t k = 0; k < m; ++k) seeded.push_back(jets.variable(params[k], k));
  const auto gamma = gamma_coefficients(jets, t, std::span<const Jet<Fp>>(seeded));
  Matrix<PrimeField> jac(field, m, gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t k = 0; k < m; ++k) jac(k, i) = gamma[i].gradient()[k];
  return jac;
}

std::string to_string(RankVerdict v) { return v == RankVerdict::RankFull ? "RankFull" : "RankDeficient"; }

std::vector<Fp> random_parameter_point(const PrimeField& field, const Triple& t, SeededRng& rng,
                                       unsigned max_resamples, unsigned* resamples) {
  const std::size_t m = parameter_count(t);
  const auto n = static_cast<std::size_t>(t.n);
  const auto r = static_cast<std::size_t>(t.r);
  for (unsigned attempt = 0; attempt <= max_resamples; ++attempt) {
    std::vector<Fp> p;
    p.reserve(m);
    for (std::size_t k = 0; k < m; ++k) p.push_back(field.random(rng));
    CoefficientVectors<PrimeField> forms(r);
    bool zero_form = false;
    for (std::size_t k = 0; k < r; ++k) {
      bool zero = true;
      for (std::size_t j = 0; j <= n; ++j) {
        forms[k].push_back(p[j * r + k]);
        zero = zero && p[j * r + k].is_zero();
      }
      zero_form = zero_form || zero;
    }
    if (!zero_form && certify_general_position(field, n, forms).certified) return p;
    if (resamples) ++*resamples;
  }
  throw DegenerateParameters("resampling budget of " + std::to_string(max_resamples) + " exhausted for " +
                             to_string(t));
}

JacobianTestReport jacobian_rank_test(const Triple& t, const JacobianTestOptions& options) {
  validate(t);
  if (options.trials == 0) throw DomainError("at least one trial is required");
  const auto start = std::chrono::steady_clock::now();
  const PrimeField field(options.prime);
  JacobianTestReport report{t,           parameter_count(t), target_dimension(t), options.prime, options.seed,
                            options.trials, 0,                {},                  0,             RankVerdict::RankDeficient,
                            0.0,         ""};
  for (unsigned trial = 0; trial < options.trials; ++trial) {
    SeededRng rng(options.seed + trial);
    const auto point = random_parameter_point(field, t, rng, options.max_resamples, &report.resamples);
    const std::size_t found = rank(gamma_jacobian(field, t, point));
    report.trial_ranks.push_back(found);
    report.rank = std::max(report.rank, found);
  }
  if (report.rank == report.target) {
    report.verdict = RankVerdict::RankFull;
    report.note = "Jacobian has full rank C(n+d,d): the generic form has an apolar X(r)";
  } else {
    report.note = "rank below C(n+d,d) in every trial over GF(" + std::to_string(options.prime) +
                  "): evidence, not proof, of nonexistence";
    // The table is not overridden; the disagreement is only reported.
    if (t.n >= 2 && classify(t).verdict == Verdict::Exists)
      report.note += "; disagrees with the closed-form classification (Exists, " + classify(t).rule + ")";
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace starapolar
