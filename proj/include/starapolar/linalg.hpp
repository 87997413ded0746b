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

#ifndef STARAPOLAR_LINALG_HPP
#define STARAPOLAR_LINALG_HPP

// Dense exact linear algebra over any Field: reduced row echelon form, rank,
// kernels, consistent-system solves and subspace intersection.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starapolar/field.hpp"

namespace starapolar {

template <Field F>
class Matrix {
 public:
  using scalar = scalar_t<F>;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  // Rows must all have length cols.
  static Matrix from_rows(F field, std::size_t cols, const std::vector<std::vector<scalar>>& rows) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<scalar> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }
  std::vector<scalar> column(std::size_t c) const {
    std::vector<scalar> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<scalar> data_;
};

template <Field F>
struct EchelonForm {
  Matrix<F> reduced;                       // rank() nonzero rows first
  std::vector<std::size_t> pivot_columns;  // increasing

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

// Gauss-Jordan elimination; pivots normalized to one. Eliminates below the
// pivots first, then above, so zero rows of tall inputs are never revisited.
template <Field F>
EchelonForm<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const auto inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t col = pivots[k];
    for (std::size_t r = 0; r < k; ++r) {
      if (m(r, col).is_zero()) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(k, c);
    }
  }
  return {std::move(m), std::move(pivots)};
}

// Forward elimination only; enough for rank and cheaper than rref on tall
// Jacobians.
template <Field F>
std::size_t rank(Matrix<F> m) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const auto inv = m(row, col).inverse();
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const auto factor = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    ++row;
  }
  return row;
}

// One basis vector per free column, with a one in that column and zeros in
// the other free columns. Listed in increasing free-column order.
template <Field F>
std::vector<std::vector<scalar_t<F>>> kernel_basis(const Matrix<F>& m) {
  const auto ech = rref(m);
  const F& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<scalar_t<F>>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<scalar_t<F>> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < ech.rank(); ++i) v[ech.pivot_columns[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves A x = b. Free variables are set to zero, so the answer is the
// unique solution supported on pivot columns. nullopt when inconsistent.
template <Field F>
std::optional<std::vector<scalar_t<F>>> solve(const Matrix<F>& a, std::span<const scalar_t<F>> b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
  const F& field = a.field();
  Matrix<F> aug(field, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto ech = rref(std::move(aug));
  if (!ech.pivot_columns.empty() && ech.pivot_columns.back() == a.cols()) return std::nullopt;
  std::vector<scalar_t<F>> x(a.cols(), field.zero());
  for (std::size_t i = 0; i < ech.rank(); ++i) x[ech.pivot_columns[i]] = ech.reduced(i, a.cols());
  return x;
}

// A basis of the row space in reduced echelon form.
template <Field F>
Matrix<F> row_space(const Matrix<F>& m) {
  const auto ech = rref(m);
  Matrix<F> basis(m.field(), ech.rank(), m.cols());
  for (std::size_t r = 0; r < ech.rank(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) basis(r, c) = ech.reduced(r, c);
  return basis;
}

// Rows of u and w span subspaces of the same ambient space; the result's
// rows are a reduced echelon basis of their intersection.
template <Field F>
Matrix<F> intersect_row_spaces(const Matrix<F>& u, const Matrix<F>& w) {
  if (u.cols() != w.cols()) throw DomainError("ambient dimension mismatch");
  const F& field = u.field();
  const Matrix<F> ub = row_space(u);
  const auto we = rref(w);
  if (ub.rows() == 0 || we.rank() == 0) return Matrix<F>(field, 0, u.cols());
  // Residue of each basis vector of U modulo W. A combination of U's basis
  // lies in W exactly when the same combination of residues vanishes.
  Matrix<F> residues(field, ub.rows(), u.cols());
  for (std::size_t i = 0; i < ub.rows(); ++i) {
    auto v = ub.row(i);
    for (std::size_t k = 0; k < we.rank(); ++k) {
      const auto factor = v[we.pivot_columns[k]];
      if (factor.is_zero()) continue;
      for (std::size_t c = 0; c < u.cols(); ++c) v[c] = v[c] - factor * we.reduced(k, c);
    }
    for (std::size_t c = 0; c < u.cols(); ++c) residues(i, c) = v[c];
  }
  const auto combos = kernel_basis(residues.transpose());
  Matrix<F> meet(field, combos.size(), u.cols());
  for (std::size_t k = 0; k < combos.size(); ++k)
    for (std::size_t i = 0; i < ub.rows(); ++i) {
      if (combos[k][i].is_zero()) continue;
      for (std::size_t c = 0; c < u.cols(); ++c) meet(k, c) = meet(k, c) + combos[k][i] * ub(i, c);
    }
  return row_space(meet);
}

// Determinant by elimination.
template <Field F>
scalar_t<F> determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const F& field = m.field();
  scalar_t<F> det = field.one();
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t pivot = col;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) return field.zero();
    if (pivot != col) {
      m.swap_rows(col, pivot);
      det = -det;
    }
    det = det * m(col, col);
    const auto inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const auto factor = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(col, c);
    }
  }
  return det;
}

// For k rows of length k+1, returns v with v_j = (-1)^j * det(rows without
// column j). v spans the kernel whenever the rows are independent, and v_j
// never involves column j. Division-free: every minor is built by Laplace
// expansion along the last row over column subsets, so the formula is a
// polynomial in the entries and is safe to evaluate on jets.
template <Field F>
std::vector<scalar_t<F>> signed_maximal_minors(const F& field, const std::vector<std::vector<scalar_t<F>>>& rows) {
  const std::size_t k = rows.size();
  const std::size_t width = k + 1;
  for (const auto& r : rows)
    if (r.size() != width) throw DomainError("signed_maximal_minors expects k x (k+1) input");
  if (width > 20) throw DomainError("signed_maximal_minors: too many columns");
  // minor[mask] = det of the first popcount(mask) rows restricted to mask.
  const std::size_t full = std::size_t{1} << width;
  std::vector<scalar_t<F>> minor(full, field.zero());
  minor[0] = field.one();
  for (std::size_t mask = 1; mask < full; ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size > k) continue;
    const std::size_t row = size - 1;
    scalar_t<F> acc = field.zero();
    std::size_t position = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const std::size_t sub = mask & ~(std::size_t{1} << c);
      const bool negative = ((row + position) & 1U) != 0;
      const auto term = rows[row][c] * minor[sub];
      acc = negative ? acc - term : acc + term;
      ++position;
    }
    minor[mask] = acc;
  }
  std::vector<scalar_t<F>> result;
  result.reserve(width);
  for (std::size_t j = 0; j < width; ++j) {
    const std::size_t mask = (full - 1) & ~(std::size_t{1} << j);
    result.push_back((j & 1U) ? -minor[mask] : minor[mask]);
  }
  return result;
}

}  // namespace starapolar

#endif  // STARAPOLAR_LINALG_HPP
