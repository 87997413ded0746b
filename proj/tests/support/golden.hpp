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

#ifndef STARAPOLAR_TESTS_GOLDEN_HPP
#define STARAPOLAR_TESTS_GOLDEN_HPP

// The two normal forms of ternary cubics used as fixtures, with their
// known perp generators and apolar line quadruples.

#include <string>
#include <vector>

#include "starapolar/parse.hpp"

namespace starapolar::golden {

inline constexpr const char* kCusp = "x0^3 - x1^2*x2";
inline constexpr const char* kConicTangent = "x0*(x2^2+x0*x1)";

inline const std::vector<std::string> kCuspPerp = {"y2^2", "y0*y2", "y0*y1", "y1^3", "y0^3+3*y1^2*y2"};
inline const std::vector<std::string> kConicTangentPerp = {"y1*y2", "y1^2", "y0*y1-y2^2", "y0^2*y2", "y0^3"};

inline const std::vector<std::string> kCuspLines = {"y0", "y1", "y1-y2", "y0+y1+y2"};
inline const std::vector<std::string> kConicTangentLines = {
    "y0+(47/132)*y1-3*y2", "4*y0-(20/3)*y1-10*y2", "2*y0+(862/33)*y1+7*y2", "11*y0-(421/12)*y1+6*y2"};

inline HomogeneousForm<RationalField> primal(const std::string& s) {
  return parse_form(s, ParseOptions{Ring::Primal, 3});
}

inline std::vector<HomogeneousForm<RationalField>> dual(const std::vector<std::string>& texts) {
  std::vector<HomogeneousForm<RationalField>> out;
  for (const auto& s : texts) out.push_back(parse_form(s, ParseOptions{Ring::Dual, 3}));
  return out;
}

}  // namespace starapolar::golden

#endif  // STARAPOLAR_TESTS_GOLDEN_HPP
