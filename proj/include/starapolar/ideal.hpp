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

#ifndef STARAPOLAR_IDEAL_HPP
#define STARAPOLAR_IDEAL_HPP

// Degree-by-degree ideal computations: (I)_t is the span of monomial times
// generator products, stored as row coordinates in the canonical basis.

#include <cstddef>
#include <vector>

#include "starapolar/linalg.hpp"
#include "starapolar/poly.hpp"

namespace starapolar {

// Rows are coordinates of `forms` (all of degree t) in the basis of degree t.
template <Field F>
Matrix<F> coordinate_rows(const F& field, std::size_t num_vars, unsigned t,
                          const std::vector<HomogeneousForm<F>>& forms) {
  const MonomialIndex index(num_vars - 1, t);
  Matrix<F> m(field, forms.size(), index.size());
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].num_vars() != num_vars) throw RingMismatch("form has wrong number of variables");
    if (forms[r].is_zero()) continue;
    if (forms[r].degree() != static_cast<int>(t)) throw RingMismatch("form has wrong degree");
    for (const auto& [mono, c] : forms[r].terms()) m(r, index.position(mono)) = c;
  }
  return m;
}

// Reduced echelon basis of (generators)_t.
template <Field F>
Matrix<F> ideal_graded_piece(const F& field, std::size_t num_vars, const std::vector<HomogeneousForm<F>>& generators,
                             unsigned t) {
  std::vector<HomogeneousForm<F>> products;
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) throw RingMismatch("generator has wrong number of variables");
    if (g.is_zero() || g.degree() > static_cast<int>(t)) continue;
    for (const auto& mu : monomial_basis(num_vars - 1, t - static_cast<unsigned>(g.degree())))
      products.push_back(g.times_monomial(mu));
  }
  return row_space(coordinate_rows(field, num_vars, t, products));
}

template <Field F>
std::size_t ideal_graded_dimension(const F& field, std::size_t num_vars,
                                   const std::vector<HomogeneousForm<F>>& generators, unsigned t) {
  return ideal_graded_piece(field, num_vars, generators, t).rows();
}

// True when `coords` lies in the row span of `basis`.
template <Field F>
bool span_contains(const Matrix<F>& basis, std::span<const scalar_t<F>> coords) {
  if (coords.size() != basis.cols()) throw DomainError("coordinate length mismatch");
  Matrix<F> extended(basis.field(), basis.rows() + 1, basis.cols());
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t c = 0; c < basis.cols(); ++c) extended(r, c) = basis(r, c);
  for (std::size_t c = 0; c < basis.cols(); ++c) extended(basis.rows(), c) = coords[c];
  return rank(extended) == rank(basis);
}

// Rows: points; columns: degree-t monomials; entry = monomial at the point.
// Its rank is the Hilbert function of the point set in degree t.
template <Field F>
Matrix<F> evaluation_matrix(const F& field, const std::vector<std::vector<scalar_t<F>>>& points, unsigned t) {
  if (points.empty()) return Matrix<F>(field, 0, 0);
  const std::size_t nv = points.front().size();
  const auto basis = monomial_basis(nv - 1, t);
  Matrix<F> m(field, points.size(), basis.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (points[p].size() != nv) throw DomainError("points of different dimension");
    for (std::size_t c = 0; c < basis.size(); ++c) {
      scalar_t<F> v = field.one();
      for (std::size_t k = 0; k < nv; ++k)
        if (basis[c][k]) v = v * power(field, points[p][k], basis[c][k]);
      m(p, c) = v;
    }
  }
  return m;
}

// Basis of I(points)_t as forms in the dual ring: the kernel of the
// evaluation matrix.
template <Field F>
std::vector<HomogeneousForm<F>> point_ideal_piece(const F& field, const std::vector<std::vector<scalar_t<F>>>& points,
                                                  std::size_t num_vars, unsigned t) {
  std::vector<HomogeneousForm<F>> out;
  if (points.empty()) {
    for (const auto& m : monomial_basis(num_vars - 1, t)) out.push_back(HomogeneousForm<F>::term(field, Ring::Dual, m, field.one()));
    return out;
  }
  for (const auto& v : kernel_basis(evaluation_matrix(field, points, t)))
    out.push_back(HomogeneousForm<F>::from_coordinates(field, Ring::Dual, num_vars, t, v));
  return out;
}

}  // namespace starapolar

#endif  // STARAPOLAR_IDEAL_HPP
