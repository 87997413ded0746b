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

#include "starapolar/parse.hpp"

#include <gtest/gtest.h>

#include "support/random_util.hpp"

namespace starapolar {
namespace {

using QForm = HomogeneousForm<RationalField>;

TEST(Parse, CuspidalCubic) {
  const auto c = parse_form("x0^3 - x1^2*x2");
  EXPECT_EQ(c.ring(), Ring::Primal);
  EXPECT_EQ(c.num_vars(), 3u);
  EXPECT_EQ(c.degree(), 3);
  EXPECT_EQ(c.terms().size(), 2u);
  EXPECT_EQ(c.coefficient(Monomial({3, 0, 0})), Rational(1));
  EXPECT_EQ(c.coefficient(Monomial({0, 2, 1})), Rational(-1));
}

TEST(Parse, ExpandsParenthesizedProducts) {
  const auto g = parse_form("x0*(x2^2+x0*x1)");
  EXPECT_EQ(g, parse_form("x0*x2^2 + x0^2*x1"));
  EXPECT_EQ(print_form(g), "x0^2*x1 + x0*x2^2");
  EXPECT_EQ(parse_form("(x0+x1)^3"), parse_form("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3"));
}

TEST(Parse, RationalCoefficientsAndJuxtaposition) {
  const auto l = parse_form("y0+(47/132) y1-3 y2");
  EXPECT_EQ(l.ring(), Ring::Dual);
  EXPECT_EQ(l.coefficient(Monomial({0, 1, 0})), Rational::parse("47/132"));
  EXPECT_EQ(l, parse_form("y0 + 47/132*y1 - 3*y2"));
  EXPECT_EQ(parse_form("2y0y1"), parse_form("2*y0*y1"));
  EXPECT_EQ(parse_form("x0/2 + x1/3"), parse_form("1/2*x0 + 1/3*x1"));
}

TEST(Parse, Inhomogeneous) {
  try {
    parse_form("x0 + x1^2");
    FAIL() << "expected InhomogeneousError";
  } catch (const InhomogeneousError& e) {
    EXPECT_EQ(e.offending_term(), "x0");
    EXPECT_NE(std::string(e.what()).find("x0"), std::string::npos);
  }
  // Cancellation first, homogeneity after.
  EXPECT_NO_THROW(parse_form("x0 + x1^2 - x1*x1"));
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  try {
    parse_form("x0 + * x1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_form(""), ParseError);
  EXPECT_THROW(parse_form("x0 +"), ParseError);
  EXPECT_THROW(parse_form("(x0 + x1"), ParseError);
  EXPECT_THROW(parse_form("x"), ParseError);
  EXPECT_THROW(parse_form("z0"), ParseError);
  EXPECT_THROW(parse_form("x0 / x1"), ParseError);
  EXPECT_THROW(parse_form("x0 / 0"), ParseError);
  EXPECT_THROW(parse_form("x0^-1"), ParseError);
}

TEST(Parse, MixedRingsRejected) {
  EXPECT_THROW(parse_form("x0*y1"), ParseError);
  EXPECT_THROW(parse_form("y0", ParseOptions{Ring::Primal, std::nullopt}), ParseError);
}

TEST(Parse, VariableIndexOutOfRange) {
  EXPECT_THROW(parse_form("x0 + x3", ParseOptions{std::nullopt, 3}), ParseError);
  EXPECT_EQ(parse_form("x0", ParseOptions{std::nullopt, 4}).num_vars(), 4u);
}

TEST(Parse, PrintRoundTripOnRandomForms) {
  SeededRng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nv = 1 + rng.below(4);
    const unsigned d = static_cast<unsigned>(rng.below(5));
    const Ring ring = rng.below(2) ? Ring::Primal : Ring::Dual;
    const auto f = test::random_q_form(ring, nv, d, rng);
    if (f.is_zero()) continue;
    const auto back = parse_form(print_form(f), ParseOptions{ring, nv});
    EXPECT_EQ(back, f) << print_form(f);
    EXPECT_EQ(back.degree(), f.degree());
  }
}

}  // namespace
}  // namespace starapolar
