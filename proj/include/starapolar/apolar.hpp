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

#ifndef STARAPOLAR_APOLAR_HPP
#define STARAPOLAR_APOLAR_HPP

// Apolar ideals degree by degree. (F^perp)_i is the kernel of the
// catalecticant T_i -> S_{d-i}, op -> op(F).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "starapolar/ideal.hpp"
#include "starapolar/linalg.hpp"
#include "starapolar/poly.hpp"

namespace starapolar {

template <Field F>
struct CatalecticantMatrix {
  unsigned source_degree;            // i
  unsigned target_degree;            // d - i
  std::vector<Monomial> column_basis;  // T_i, canonical order
  std::vector<Monomial> row_basis;     // S_{d-i}, canonical order
  Matrix<F> matrix;
};

template <Field F>
struct PerpGradedPiece {
  unsigned degree;
  std::vector<HomogeneousForm<F>> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

namespace detail {

template <Field F>
void require_primal(const HomogeneousForm<F>& f) {
  if (f.ring() != Ring::Primal) throw RingMismatch("expected a form in the primal ring");
  if (f.degree() < 0) throw DomainError("form has negative degree");
}

}  // namespace detail

// Column for monomial y^a holds the coordinates of y^a(F).
template <Field F>
CatalecticantMatrix<F> catalecticant(const HomogeneousForm<F>& f, unsigned i) {
  detail::require_primal(f);
  const unsigned d = static_cast<unsigned>(f.degree());
  if (i > d) throw DomainError("catalecticant degree " + std::to_string(i) + " exceeds form degree " + std::to_string(d));
  const std::size_t n = f.num_vars() - 1;
  CatalecticantMatrix<F> cat{i, d - i, monomial_basis(n, i), monomial_basis(n, d - i),
                             Matrix<F>(f.field(), 0, 0)};
  const MonomialIndex rows(n, d - i);
  Matrix<F> m(f.field(), rows.size(), cat.column_basis.size());
  for (std::size_t c = 0; c < cat.column_basis.size(); ++c) {
    const auto op = HomogeneousForm<F>::term(f.field(), Ring::Dual, cat.column_basis[c], f.field().one());
    const auto image = contract(op, f);
    for (const auto& [mono, coeff] : image.terms()) m(rows.position(mono), c) = coeff;
  }
  cat.matrix = std::move(m);
  return cat;
}

// Basis of (F^perp)_i in reduced echelon form over the canonical basis of
// T_i. Above the degree of F this is all of T_i.
template <Field F>
PerpGradedPiece<F> perp_piece(const HomogeneousForm<F>& f, unsigned i) {
  detail::require_primal(f);
  const F& field = f.field();
  const std::size_t nv = f.num_vars();
  PerpGradedPiece<F> piece{i, {}};
  if (static_cast<int>(i) > f.degree() || f.is_zero()) {
    for (const auto& m : monomial_basis(nv - 1, i))
      piece.basis.push_back(HomogeneousForm<F>::term(field, Ring::Dual, m, field.one()));
    return piece;
  }
  const auto kernel = kernel_basis(catalecticant(f, i).matrix);
  const std::size_t width = binomial(nv - 1 + i, i);
  const Matrix<F> echelon = row_space(Matrix<F>::from_rows(field, width, kernel));
  for (std::size_t r = 0; r < echelon.rows(); ++r) {
    const auto row = echelon.row(r);
    piece.basis.push_back(HomogeneousForm<F>::from_coordinates(field, Ring::Dual, nv, i, row));
  }
  return piece;
}

// Coordinates of the basis of (F^perp)_i as matrix rows.
template <Field F>
Matrix<F> perp_piece_matrix(const HomogeneousForm<F>& f, unsigned i) {
  return coordinate_rows(f.field(), f.num_vars(), i, perp_piece(f, i).basis);
}

template <Field F>
bool annihilates(const HomogeneousForm<F>& op, const HomogeneousForm<F>& f) {
  return contract(op, f).is_zero();
}

template <Field F>
struct ContainmentResult {
  bool contained = true;
  std::optional<std::size_t> failing_index;     // first generator that does not kill F
  std::optional<HomogeneousForm<F>> witness;    // its contraction with F
};

// The ideal generated by `generators` lies in F^perp iff every generator
// annihilates F, since contraction is a T-module action.
template <Field F>
ContainmentResult<F> is_apolar_ideal_contained(const std::vector<HomogeneousForm<F>>& generators,
                                               const HomogeneousForm<F>& f) {
  for (std::size_t k = 0; k < generators.size(); ++k) {
    auto image = contract(generators[k], f);
    if (!image.is_zero()) return {false, k, std::move(image)};
  }
  return {};
}

template <Field F>
struct DegreeComparison {
  unsigned degree;
  std::size_t ideal_dimension;
  std::size_t perp_dimension;
};

template <Field F>
struct GeneratorCheck {
  ContainmentResult<F> containment;
  std::vector<DegreeComparison<F>> degrees;

  bool generates() const {
    if (!containment.contained) return false;
    for (const auto& d : degrees)
      if (d.ideal_dimension != d.perp_dimension) return false;
    return true;
  }
};

// Checks a claimed generating set of F^perp: containment, then equal graded
// dimensions of the generated ideal and F^perp in every degree up to d+1.
// Past d+1 both sides are all of T once degree d+1 is.
template <Field F>
GeneratorCheck<F> verify_perp_generators(const std::vector<HomogeneousForm<F>>& generators,
                                         const HomogeneousForm<F>& f) {
  detail::require_primal(f);
  GeneratorCheck<F> check{is_apolar_ideal_contained(generators, f), {}};
  const unsigned top = static_cast<unsigned>(f.degree()) + 1;
  for (unsigned t = 0; t <= top; ++t) {
    check.degrees.push_back(
        {t, ideal_graded_dimension(f.field(), f.num_vars(), generators, t), perp_piece(f, t).dimension()});
  }
  return check;
}

template <Field F>
struct WaringDecomposition {
  F field;
  std::size_t num_vars;
  unsigned degree;
  std::vector<HomogeneousForm<F>> linear_forms;
  std::vector<scalar_t<F>> coefficients;

  // sum_i alpha_i L_i^d
  HomogeneousForm<F> expand() const {
    HomogeneousForm<F> total(field, Ring::Primal, num_vars, static_cast<int>(degree));
    for (std::size_t i = 0; i < linear_forms.size(); ++i) {
      const auto coords = linear_forms[i].coordinates();
      total = total + linear_power(field, Ring::Primal, std::span<const scalar_t<F>>(coords), degree).scaled(coefficients[i]);
    }
    return total;
  }
};

// Linear forms are pairwise independent when no two are proportional.
template <Field F>
void require_pairwise_independent(const std::vector<HomogeneousForm<F>>& forms) {
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].ring() != Ring::Primal || forms[i].degree() != 1 || forms[i].is_zero())
      throw DomainError("point " + std::to_string(i + 1) + " is not a nonzero linear form in the primal ring");
    for (std::size_t j = 0; j < i; ++j) {
      const auto rows = coordinate_rows(forms[i].field(), forms[i].num_vars(), 1, std::vector{forms[j], forms[i]});
      if (rank(rows) < 2)
        throw DomainError("points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
    }
  }
}

// Finds alpha with sum alpha_i L_i^d = F, free unknowns set to zero. nullopt
// when F is not in the span of the powers.
template <Field F>
std::optional<WaringDecomposition<F>> solve_waring(const std::vector<HomogeneousForm<F>>& linear_forms,
                                                   const HomogeneousForm<F>& f) {
  detail::require_primal(f);
  if (linear_forms.empty()) {
    if (f.is_zero()) return WaringDecomposition<F>{f.field(), f.num_vars(), static_cast<unsigned>(f.degree()), {}, {}};
    return std::nullopt;
  }
  require_pairwise_independent(linear_forms);
  for (const auto& l : linear_forms)
    if (l.num_vars() != f.num_vars()) throw RingMismatch("point and form have different variable counts");
  const F& field = f.field();
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<HomogeneousForm<F>> powers;
  for (const auto& l : linear_forms) {
    const auto coords = l.coordinates();
    powers.push_back(linear_power(field, Ring::Primal, std::span<const scalar_t<F>>(coords), d));
  }
  const Matrix<F> a = coordinate_rows(field, f.num_vars(), d, powers).transpose();
  const auto rhs = f.coordinates();
  auto alpha = solve(a, std::span<const scalar_t<F>>(rhs));
  if (!alpha) return std::nullopt;
  return WaringDecomposition<F>{field, f.num_vars(), d, linear_forms, std::move(*alpha)};
}

}  // namespace starapolar

#endif  // STARAPOLAR_APOLAR_HPP
