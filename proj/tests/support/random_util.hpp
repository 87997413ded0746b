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

#ifndef STARAPOLAR_TESTS_RANDOM_UTIL_HPP
#define STARAPOLAR_TESTS_RANDOM_UTIL_HPP

// Seeded generators for property tests.

#include <cstdint>
#include <vector>

#include "starapolar/field.hpp"
#include "starapolar/poly.hpp"

namespace starapolar::test {

inline Rational random_rational(SeededRng& rng) {
  const auto num = static_cast<std::int64_t>(rng.below(41)) - 20;
  const auto den = static_cast<std::int64_t>(rng.below(9)) + 1;
  return Rational(num) / Rational(den);
}

// Roughly `density` of the degree-d monomials get a random coefficient.
template <Field F, class Draw>
HomogeneousForm<F> random_form(const F& field, Ring ring, std::size_t num_vars, unsigned d, SeededRng& rng,
                               Draw draw, unsigned density_percent = 60) {
  HomogeneousForm<F> f(field, ring, num_vars, static_cast<int>(d));
  for (const auto& m : monomial_basis(num_vars - 1, d))
    if (rng.below(100) < density_percent) f.add_term(m, draw(rng));
  return f;
}

inline HomogeneousForm<PrimeField> random_fp_form(const PrimeField& field, Ring ring, std::size_t num_vars,
                                                  unsigned d, SeededRng& rng, unsigned density_percent = 60) {
  return random_form(field, ring, num_vars, d, rng, [&](SeededRng& g) { return field.random(g); }, density_percent);
}

inline HomogeneousForm<RationalField> random_q_form(Ring ring, std::size_t num_vars, unsigned d, SeededRng& rng,
                                                    unsigned density_percent = 60) {
  return random_form(RationalField{}, ring, num_vars, d, rng, [](SeededRng& g) { return random_rational(g); },
                     density_percent);
}

}  // namespace starapolar::test

#endif  // STARAPOLAR_TESTS_RANDOM_UTIL_HPP
