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

#include "starapolar/starconfig.hpp"

namespace starapolar {

std::vector<std::vector<std::size_t>> combinations(std::size_t r, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > r) return out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == r - k + (i - 1)) --i;
    if (i == 0) return out;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
}

HyperplaneSet<PrimeField> random_hyperplanes(const PrimeField& field, std::size_t n, std::size_t r, SeededRng& rng,
                                             unsigned max_retries) {
  if (r < n) throw DomainError("need r >= n hyperplanes");
  for (unsigned attempt = 0; attempt < max_retries; ++attempt) {
    CoefficientVectors<PrimeField> coeffs(r, std::vector<Fp>(n + 1));
    for (auto& form : coeffs)
      for (auto& c : form) c = field.random(rng);
    bool any_zero = false;
    for (const auto& form : coeffs) {
      bool zero = true;
      for (const auto& c : form) zero = zero && c.is_zero();
      any_zero = any_zero || zero;
    }
    if (any_zero) continue;
    if (certify_general_position(field, n, coeffs).certified)
      return HyperplaneSet<PrimeField>::create(field, n, std::move(coeffs));
  }
  throw DegenerateParameters("no hyperplanes in general position after " + std::to_string(max_retries) + " draws");
}

}  // namespace starapolar
