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

#include "starapolar/poly.hpp"

#include <algorithm>
#include <limits>

namespace starapolar {

std::string Monomial::to_string(char letter) const {
  std::string out;
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (exponents_[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += letter;
    out += std::to_string(k);
    if (exponents_[k] > 1) out += "^" + std::to_string(exponents_[k]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void fill_basis(std::vector<unsigned>& exps, std::size_t position, unsigned remaining, std::vector<Monomial>& out) {
  if (position + 1 == exps.size()) {
    exps[position] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[position] = e;
    fill_basis(exps, position + 1, remaining - e, out);
  }
  exps[position] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(binomial(n + d, d)));
  std::vector<unsigned> exps(n + 1, 0);
  fill_basis(exps, 0, d, out);
  return out;
}

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    // result * (a - b + i) / i stays integral at every step
    result = result * (a - b + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw DomainError("binomial(" + std::to_string(a) + ", " + std::to_string(b) + ") overflows");
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace starapolar
