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

#ifndef STARAPOLAR_EXISTENCE_HPP
#define STARAPOLAR_EXISTENCE_HPP

// Does the generic degree-d form in n+1 variables have an apolar star
// configuration X(r)? Three tools: the parameter count rho, the closed-form
// classification, and the rank of the Jacobian of
//   Gamma : (a, alpha) -> coefficients of sum_i alpha_i L_i^d
// at a random point over F_p.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "starapolar/field.hpp"
#include "starapolar/linalg.hpp"
#include "starapolar/poly.hpp"
#include "starapolar/starconfig.hpp"

namespace starapolar {

struct Triple {
  int d;
  int r;
  int n;

  friend bool operator==(const Triple&, const Triple&) = default;
};

std::string to_string(const Triple& t);

// d >= 1, n >= 1, r >= n; throws DomainError otherwise.
void validate(const Triple& t);

// C(r, n) + n r - C(d + n, d). Negative means no apolar X(r) for the generic
// form; nonnegative is only necessary.
std::int64_t rho(const Triple& t);

// (r(r-1) + 4r - (d+2)(d+1)) / 2, the n = 2 specialization.
std::int64_t rho_n2(int d, int r);

// (r-d)(3+r+d)/2 - 1, the same quantity factored.
std::int64_t rho_n2_factored(int d, int r);

enum class Verdict { Exists, NotExists, ConjecturalExists, Undetermined };

std::string to_string(Verdict v);

struct ClassificationVerdict {
  Verdict verdict;
  std::string rule;  // short tag naming the result that decides the triple
  std::string note;
};

ClassificationVerdict classify(const Triple& t);

// m = (n+1) r + C(r, n)
std::size_t parameter_count(const Triple& t);

// C(n+d, d), the number of coefficients of a degree-d form.
std::size_t target_dimension(const Triple& t);

namespace detail {

template <class K>
const K& base_value(const K& x) {
  return x;
}
template <class B>
const B& base_value(const Jet<B>& x) {
  return x.value();
}

template <Field F>
const F& base_field(const F& f) {
  return f;
}
template <Field B>
const B& base_field(const JetField<B>& f) {
  return f.base();
}

}  // namespace detail

// Evaluates Gamma. params holds a_{j,k} at index j*r + k (j = 0..n,
// k = 0..r-1) followed by alpha_i for the C(r, n) points in lexicographic
// order of their n-subsets. Points are the signed maximal minors, so each
// coordinate is a polynomial in the a's. Works over jets, which is how the
// Jacobian is obtained. Throws DegenerateParameters when the hyperplanes
// are not in general position.
template <Field F>
std::vector<scalar_t<F>> gamma_coefficients(const F& field, const Triple& t, std::span<const scalar_t<F>> params) {
  validate(t);
  const auto n = static_cast<std::size_t>(t.n);
  const auto r = static_cast<std::size_t>(t.r);
  const auto d = static_cast<unsigned>(t.d);
  if (params.size() != parameter_count(t))
    throw DomainError("expected " + std::to_string(parameter_count(t)) + " parameters, got " +
                      std::to_string(params.size()));

  CoefficientVectors<F> forms(r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j <= n; ++j) forms[k].push_back(params[j * r + k]);

  const auto& base = detail::base_field(field);
  using B = scalar_t<std::remove_cvref_t<decltype(base)>>;
  CoefficientVectors<std::remove_cvref_t<decltype(base)>> values(r);
  for (std::size_t k = 0; k < r; ++k)
    for (const auto& c : forms[k]) values[k].push_back(B(detail::base_value(c)));
  bool zero_form = false;
  for (const auto& v : values) {
    bool zero = true;
    for (const auto& c : v) zero = zero && c.is_zero();
    zero_form = zero_form || zero;
  }
  if (zero_form || !certify_general_position(base, n, values).certified)
    throw DegenerateParameters("hyperplanes are not in general position");

  const std::size_t alpha_offset = (n + 1) * r;
  std::vector<scalar_t<F>> total(target_dimension(t), field.zero());
  std::size_t i = 0;
  for (const auto& tau : combinations(r, n)) {
    CoefficientVectors<F> rows;
    for (auto k : tau) rows.push_back(forms[k]);
    const auto point = signed_maximal_minors(field, rows);
    const auto power_form = linear_power(field, Ring::Primal, std::span<const scalar_t<F>>(point), d);
    const auto coords = power_form.coordinates();
    const auto& alpha = params[alpha_offset + i];
    for (std::size_t c = 0; c < coords.size(); ++c) total[c] += alpha * coords[c];
    ++i;
  }
  return total;
}

// m x C(n+d, d) Jacobian of Gamma at params, entry (k, i) = d g_i / d p_k.
Matrix<PrimeField> gamma_jacobian(const PrimeField& field, const Triple& t, std::span<const Fp> params);

enum class RankVerdict { RankFull, RankDeficient };

std::string to_string(RankVerdict v);

struct JacobianTestOptions {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  unsigned trials = 3;
  unsigned max_resamples = 32;  // degenerate draws tolerated per trial
};

struct JacobianTestReport {
  Triple triple;
  std::size_t m;
  std::size_t target;
  std::uint64_t prime;
  std::uint64_t seed;
  unsigned trials;
  std::size_t rank;                      // max over trials
  std::vector<std::size_t> trial_ranks;  // trial k uses seed + k
  unsigned resamples;                    // degenerate draws discarded
  RankVerdict verdict;
  double elapsed_ms;
  std::string note;
};

// Random parameter point for one trial, redrawing degenerate hyperplanes.
std::vector<Fp> random_parameter_point(const PrimeField& field, const Triple& t, SeededRng& rng,
                                       unsigned max_resamples, unsigned* resamples = nullptr);

JacobianTestReport jacobian_rank_test(const Triple& t, const JacobianTestOptions& options = {});

}  // namespace starapolar

#endif  // STARAPOLAR_EXISTENCE_HPP
