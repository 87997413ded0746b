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

#ifndef STARAPOLAR_STARCONFIG_HPP
#define STARAPOLAR_STARCONFIG_HPP

// Star configurations X(r) in P^n: the C(r, n) points where n of r general
// hyperplanes meet, and their ideal.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starapolar/ideal.hpp"
#include "starapolar/linalg.hpp"
#include "starapolar/poly.hpp"

namespace starapolar {

// All k-subsets of {0..r-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t r, std::size_t k);

struct GeneralPositionCheck {
  bool certified = true;
  std::vector<std::size_t> violating_subset;  // 0-based, empty when certified
};

template <Field F>
using CoefficientVectors = std::vector<std::vector<scalar_t<F>>>;

// Every (n+1)-subset of the coefficient vectors must be linearly
// independent; checks each maximal minor and reports the first that vanishes.
template <Field F>
GeneralPositionCheck certify_general_position(const F& field, std::size_t n, const CoefficientVectors<F>& forms) {
  if (forms.size() < n)
    throw DomainError("need r >= n hyperplanes, got r = " + std::to_string(forms.size()) + ", n = " + std::to_string(n));
  for (std::size_t k = 0; k < forms.size(); ++k) {
    if (forms[k].size() != n + 1)
      throw DomainError("hyperplane " + std::to_string(k + 1) + " has " + std::to_string(forms[k].size()) +
                        " coefficients, expected " + std::to_string(n + 1));
    bool zero = true;
    for (const auto& c : forms[k]) zero = zero && c.is_zero();
    if (zero) throw DomainError("hyperplane " + std::to_string(k + 1) + " is the zero form");
  }
  for (const auto& subset : combinations(forms.size(), n + 1)) {
    Matrix<F> m(field, n + 1, n + 1);
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = 0; j <= n; ++j) m(i, j) = forms[subset[i]][j];
    if (determinant(std::move(m)).is_zero()) return {false, subset};
  }
  return {};
}

inline std::string format_subset(const std::vector<std::size_t>& subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i] + 1);
  return s + "}";
}

// r linear forms of T_1 certified to be in general position.
template <Field F>
class HyperplaneSet {
 public:
  using scalar = scalar_t<F>;

  // Throws GeneralPositionError carrying the dependent subset.
  static HyperplaneSet create(F field, std::size_t n, CoefficientVectors<F> coefficients) {
    const auto check = certify_general_position(field, n, coefficients);
    if (!check.certified)
      throw GeneralPositionError("hyperplanes " + format_subset(check.violating_subset) + " are not in general position",
                                 check.violating_subset);
    return HyperplaneSet(std::move(field), n, std::move(coefficients));
  }

  // From dual linear forms sharing a variable count of n+1.
  static HyperplaneSet from_forms(const std::vector<HomogeneousForm<F>>& forms) {
    if (forms.empty()) throw DomainError("no hyperplanes given");
    CoefficientVectors<F> coeffs;
    for (std::size_t k = 0; k < forms.size(); ++k) {
      const auto& l = forms[k];
      if (l.ring() != Ring::Dual) throw RingMismatch("hyperplane " + std::to_string(k + 1) + " is not in the dual ring");
      if (l.num_vars() != forms.front().num_vars()) throw RingMismatch("hyperplanes over different variable counts");
      if (!l.is_zero() && l.degree() != 1) throw DomainError("hyperplane " + std::to_string(k + 1) + " is not linear");
      coeffs.push_back(l.is_zero() ? std::vector<scalar>(l.num_vars(), l.field().zero()) : l.coordinates());
    }
    return create(forms.front().field(), forms.front().num_vars() - 1, std::move(coeffs));
  }

  const F& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return coefficients_.size(); }
  const CoefficientVectors<F>& coefficients() const noexcept { return coefficients_; }

  HomogeneousForm<F> form(std::size_t k) const {
    return HomogeneousForm<F>::linear(field_, Ring::Dual, std::span<const scalar>(coefficients_.at(k)));
  }

 private:
  HyperplaneSet(F field, std::size_t n, CoefficientVectors<F> coefficients)
      : field_(std::move(field)), n_(n), coefficients_(std::move(coefficients)) {}

  F field_;
  std::size_t n_;
  CoefficientVectors<F> coefficients_;
};

// Scales so that the first nonzero coordinate is one.
template <Field F>
std::vector<scalar_t<F>> normalize_projective(std::vector<scalar_t<F>> v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const auto inv = v[k].inverse();
    for (std::size_t j = k; j < v.size(); ++j) v[j] = v[j] * inv;
    return v;
  }
  throw DomainError("the zero vector is not a projective point");
}

template <Field F>
struct StarPoint {
  std::vector<std::size_t> tag;             // the n hyperplanes through the point, 0-based
  std::vector<scalar_t<F>> coordinates;     // signed maximal minors, unnormalized

  std::vector<scalar_t<F>> normalized() const { return normalize_projective<F>(coordinates); }
};

// One point per n-subset tau (lexicographic), given by the signed maximal
// minors of the n x (n+1) coefficient matrix of tau.
template <Field F>
std::vector<StarPoint<F>> intersection_points(const HyperplaneSet<F>& hs) {
  std::vector<StarPoint<F>> points;
  for (auto& tag : combinations(hs.r(), hs.n())) {
    CoefficientVectors<F> rows;
    for (auto k : tag) rows.push_back(hs.coefficients()[k]);
    auto coords = signed_maximal_minors(hs.field(), rows);
    bool zero = true;
    for (const auto& c : coords) zero = zero && c.is_zero();
    if (zero) throw Error("hyperplanes " + format_subset(tag) + " do not meet in a single point");
    points.push_back({std::move(tag), std::move(coords)});
  }
  return points;
}

// The point p as the linear form sum_j p_j x_j of S_1.
template <Field F>
HomogeneousForm<F> point_as_linear_form(const F& field, const std::vector<scalar_t<F>>& p) {
  return HomogeneousForm<F>::linear(field, Ring::Primal, std::span<const scalar_t<F>>(p));
}

// For each (n-1)-subset sigma, the product of the r-n+1 forms outside sigma.
template <Field F>
std::vector<HomogeneousForm<F>> star_ideal_product_generators(const HyperplaneSet<F>& hs) {
  std::vector<HomogeneousForm<F>> gens;
  const std::size_t nv = hs.n() + 1;
  for (const auto& sigma : combinations(hs.r(), hs.n() - 1)) {
    auto product = HomogeneousForm<F>::constant(hs.field(), Ring::Dual, nv, hs.field().one());
    std::size_t next = 0;
    for (std::size_t k = 0; k < hs.r(); ++k) {
      if (next < sigma.size() && sigma[next] == k) {
        ++next;
        continue;
      }
      product = product * hs.form(k);
    }
    gens.push_back(std::move(product));
  }
  return gens;
}

// dim of (intersection over tau of (l_j : j in tau))_t.
template <Field F>
std::size_t star_ideal_dimension_by_intersection(const HyperplaneSet<F>& hs, unsigned t) {
  const std::size_t nv = hs.n() + 1;
  std::optional<Matrix<F>> meet;
  for (const auto& tau : combinations(hs.r(), hs.n())) {
    std::vector<HomogeneousForm<F>> gens;
    for (auto k : tau) gens.push_back(hs.form(k));
    auto piece = ideal_graded_piece(hs.field(), nv, gens, t);
    meet = meet ? intersect_row_spaces(*meet, piece) : std::move(piece);
    if (meet->rows() == 0) return 0;
  }
  return meet ? meet->rows() : binomial(hs.n() + t, t);
}

// dim of (product generators)_t.
template <Field F>
std::size_t star_ideal_dimension_by_products(const HyperplaneSet<F>& hs, unsigned t) {
  return ideal_graded_dimension(hs.field(), hs.n() + 1, star_ideal_product_generators(hs), t);
}

// HF(t) for t = 0..t_max: rank of the evaluation matrix in degree t.
template <Field F>
std::vector<std::size_t> hilbert_function(const F& field, const std::vector<std::vector<scalar_t<F>>>& points,
                                          unsigned t_max) {
  std::vector<std::size_t> hf;
  for (unsigned t = 0; t <= t_max; ++t) hf.push_back(points.empty() ? 0 : rank(evaluation_matrix(field, points, t)));
  return hf;
}

template <Field F>
std::vector<std::vector<scalar_t<F>>> point_coordinates(const std::vector<StarPoint<F>>& points) {
  std::vector<std::vector<scalar_t<F>>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.coordinates);
  return out;
}

template <Field F>
struct StarConfiguration {
  HyperplaneSet<F> hyperplanes;
  std::vector<StarPoint<F>> points;
  std::vector<HomogeneousForm<F>> ideal_generators;

  static StarConfiguration build(HyperplaneSet<F> hs) {
    auto points = intersection_points(hs);
    auto gens = star_ideal_product_generators(hs);
    return {std::move(hs), std::move(points), std::move(gens)};
  }

  std::vector<HomogeneousForm<F>> linear_forms() const {
    std::vector<HomogeneousForm<F>> out;
    for (const auto& p : points) out.push_back(point_as_linear_form(hyperplanes.field(), p.coordinates));
    return out;
  }
};

// Uniform random coefficients over F_p, redrawn until certified.
HyperplaneSet<PrimeField> random_hyperplanes(const PrimeField& field, std::size_t n, std::size_t r, SeededRng& rng,
                                             unsigned max_retries = 32);

}  // namespace starapolar

#endif  // STARAPOLAR_STARCONFIG_HPP
