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

#include "starapolar/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support/random_util.hpp"

namespace starapolar {
namespace {

Matrix<RationalField> q_matrix(std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Rational>> data;
  for (const auto& r : rows) data.emplace_back(r.begin(), r.end());
  return Matrix<RationalField>::from_rows(RationalField{}, cols, data);
}

TEST(Linalg, RankAndKernel) {
  const auto m = q_matrix(3, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  const auto kernel = kernel_basis(m);
  ASSERT_EQ(kernel.size(), 1u);
  // x = (-1, -1, 1)
  EXPECT_EQ(kernel[0], (std::vector<Rational>{-1, -1, 1}));
}

TEST(Linalg, RrefPivots) {
  const auto ech = rref(q_matrix(4, {{0, 2, 4, 2}, {0, 1, 2, 3}}));
  EXPECT_EQ(ech.pivot_columns, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(ech.reduced(0, 1), Rational(1));
  EXPECT_EQ(ech.reduced(0, 2), Rational(2));
  EXPECT_EQ(ech.reduced(0, 3), Rational(0));
}

TEST(Linalg, SolveSetsFreeVariablesToZero) {
  const auto a = q_matrix(3, {{1, 1, 0}, {0, 0, 1}});
  const std::vector<Rational> b{3, 5};
  const auto x = solve(a, std::span<const Rational>(b));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (std::vector<Rational>{3, 0, 5}));
}

TEST(Linalg, SolveDetectsInconsistency) {
  const auto a = q_matrix(1, {{1}, {1}});
  const std::vector<Rational> b{1, 2};
  EXPECT_FALSE(solve(a, std::span<const Rational>(b)));
}

TEST(Linalg, DeterminantMatchesCofactors) {
  EXPECT_EQ(determinant(q_matrix(3, {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}})), Rational(0));
  EXPECT_EQ(determinant(q_matrix(2, {{0, 1}, {1, 0}})), Rational(-1));
  EXPECT_EQ(determinant(q_matrix(3, {{1, 2, 3}, {0, 1, 4}, {5, 6, 0}})), Rational(1));
}

TEST(Linalg, IntersectionOfPlanes) {
  // span{e0, e1} ∩ span{e1, e2} = span{e1}
  const auto u = q_matrix(3, {{1, 0, 0}, {0, 1, 0}});
  const auto w = q_matrix(3, {{0, 1, 0}, {0, 0, 1}});
  const auto meet = intersect_row_spaces(u, w);
  ASSERT_EQ(meet.rows(), 1u);
  EXPECT_EQ(meet.row(0), (std::vector<Rational>{0, 1, 0}));
  EXPECT_EQ(intersect_row_spaces(u, q_matrix(3, {{0, 0, 1}})).rows(), 0u);
}

// Leibniz formula as an independent oracle for the subset expansion.
template <Field F>
scalar_t<F> leibniz(const F& field, const std::vector<std::vector<scalar_t<F>>>& m, const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  scalar_t<F> total = field.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    scalar_t<F> term = field.one();
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m[i][cols[perm[i]]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(Linalg, SignedMaximalMinorsSpanKernel) {
  const PrimeField f;
  SeededRng rng(5);
  for (std::size_t k = 1; k <= 5; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<Fp>> rows(k);
      for (auto& row : rows)
        for (std::size_t c = 0; c <= k; ++c) row.push_back(f.random(rng));
      const auto v = signed_maximal_minors(f, rows);
      for (std::size_t j = 0; j <= k; ++j) {
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c <= k; ++c)
          if (c != j) cols.push_back(c);
        const Fp expected = j % 2 ? -leibniz(f, rows, cols) : leibniz(f, rows, cols);
        ASSERT_EQ(v[j], expected);
      }
      for (const auto& row : rows) {
        Fp dot = f.zero();
        for (std::size_t c = 0; c <= k; ++c) dot += row[c] * v[c];
        ASSERT_TRUE(dot.is_zero());
      }
    }
  }
}

TEST(Linalg, RankNullityOnRandomMatrices) {
  const PrimeField f(101);
  SeededRng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    Matrix<PrimeField> m(f, rows, cols);
    // low-rank products hit degenerate cases often over a small field
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.below(3) ? f.zero() : f.random(rng);
    const auto kernel = kernel_basis(m);
    EXPECT_EQ(rank(m) + kernel.size(), cols);
    EXPECT_EQ(rank(m), rref(m).rank());
    EXPECT_EQ(rank(m), rank(m.transpose()));
    for (const auto& v : kernel)
      for (std::size_t r = 0; r < rows; ++r) {
        Fp dot = f.zero();
        for (std::size_t c = 0; c < cols; ++c) dot += m(r, c) * v[c];
        ASSERT_TRUE(dot.is_zero());
      }
  }
}

}  // namespace
}  // namespace starapolar
