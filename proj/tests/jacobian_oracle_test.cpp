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

#include <gtest/gtest.h>

#include "starapolar/existence.hpp"
#include "support/gamma_oracle.hpp"

namespace starapolar {
namespace {

void expect_matches_oracle(const Triple& t, std::uint64_t prime, std::uint64_t seed) {
  const PrimeField f(prime);
  SeededRng rng(seed);
  const auto point = random_parameter_point(f, t, rng, 32);
  std::vector<std::uint64_t> raw;
  for (const auto& x : point) raw.push_back(x.value());
  const auto jet = gamma_jacobian(f, t, point);
  const auto ref = oracle::jacobian(prime, t.d, t.r, t.n, raw);
  ASSERT_EQ(jet.rows(), ref.size());
  for (std::size_t k = 0; k < ref.size(); ++k) {
    ASSERT_EQ(jet.cols(), ref[k].size());
    for (std::size_t i = 0; i < ref[k].size(); ++i)
      ASSERT_EQ(jet(k, i).value(), ref[k][i]) << to_string(t) << " param " << k << " monomial " << i;
  }
}

TEST(JacobianOracle, AllSmallTriples) {
  for (int n = 1; n <= 2; ++n)
    for (int d = 1; d <= 3; ++d)
      for (int r = n; r <= 4; ++r)
        for (std::uint64_t s = 0; s < 5; ++s) expect_matches_oracle({d, r, n}, kDefaultPrime, 1000 + s);
}

TEST(JacobianOracle, SmallPrime) {
  for (std::uint64_t s = 0; s < 5; ++s) expect_matches_oracle({3, 4, 2}, 10007, s);
}

TEST(JacobianOracle, OracleGammaMatchesLibrary) {
  const PrimeField f;
  SeededRng rng(3);
  const Triple t{3, 4, 2};
  const auto point = random_parameter_point(f, t, rng, 32);
  std::vector<std::uint64_t> raw;
  for (const auto& x : point) raw.push_back(x.value());
  const auto value = gamma_coefficients(f, t, std::span<const Fp>(point));
  // k past the end leaves every entry constant in eps
  const auto ref = oracle::gamma_eps(kDefaultPrime, 3, 4, 2, raw, raw.size());
  ASSERT_EQ(value.size(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(value[i].value(), ref[i].c.empty() ? 0 : ref[i].c[0]);
}

}  // namespace
}  // namespace starapolar
