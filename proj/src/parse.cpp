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

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace starapolar {

namespace {

// Exponent vectors with trailing zeros trimmed, so polynomials built before
// the variable count is known still compare correctly.
using Key = std::vector<unsigned>;
using Sparse = std::map<Key, Rational>;

void trim(Key& k) {
  while (!k.empty() && k.back() == 0) k.pop_back();
}

Key key_product(const Key& a, const Key& b) {
  Key out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

void accumulate(Sparse& p, const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Sparse add(const Sparse& a, const Sparse& b, bool subtract) {
  Sparse out = a;
  for (const auto& [k, c] : b) accumulate(out, k, subtract ? -c : c);
  return out;
}

Sparse multiply(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) accumulate(out, key_product(ka, kb), ca * cb);
  return out;
}

Sparse constant(const Rational& c) {
  Sparse p;
  accumulate(p, Key{}, c);
  return p;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  Sparse parse() {
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    Sparse p = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

  std::optional<Ring> ring() const { return ring_; }
  std::size_t max_index_plus_one() const { return max_vars_; }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_primary() const {
    const char c = peek();
    return c == '(' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c));
  }

  std::string integer_literal() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  Sparse expr() {
    Sparse acc = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      acc = add(acc, term(), c == '-');
    }
  }

  Sparse term() {
    Sparse acc = unary();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, unary());
      } else if (c == '/') {
        ++pos_;
        skip_space();
        const std::size_t where = pos_;
        const Sparse divisor = unary();
        if (divisor.empty()) throw ParseError("division by zero", where);
        if (divisor.size() != 1 || !divisor.begin()->first.empty())
          throw ParseError("division by a non-constant", where);
        acc = multiply(acc, constant(divisor.begin()->second.inverse()));
      } else if (starts_primary()) {
        acc = multiply(acc, unary());
      } else {
        return acc;
      }
    }
  }

  Sparse unary() {
    skip_space();
    const char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      Sparse inner = unary();
      return c == '-' ? multiply(constant(Rational(-1)), inner) : inner;
    }
    return power();
  }

  Sparse power() {
    Sparse base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t where = pos_;
    const std::string digits = integer_literal();
    if (digits.size() > 4) throw ParseError("exponent too large", where);
    const unsigned e = static_cast<unsigned>(std::stoul(digits));
    Sparse out = constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) out = multiply(out, base);
    return out;
  }

  Sparse primary() {
    skip_space();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Sparse inner = expr();
      skip_space();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return constant(Rational(mpz_class(integer_literal()), mpz_class(1)));
    }
    if (c == 'x' || c == 'y') {
      const std::size_t where = pos_;
      const Ring ring = c == 'x' ? Ring::Primal : Ring::Dual;
      ++pos_;
      if (options_.ring && *options_.ring != ring)
        throw ParseError(std::string("expected ") + ring_name(*options_.ring) + " variables, found '" + c + "'",
                         where);
      if (ring_ && *ring_ != ring) throw ParseError("mixed x and y variables", where);
      ring_ = ring;
      const std::size_t index_pos = pos_;
      const std::string digits = integer_literal();
      if (digits.size() > 6) throw ParseError("variable index too large", index_pos);
      const std::size_t index = std::stoul(digits);
      if (options_.num_vars && index >= *options_.num_vars)
        throw ParseError("variable " + std::string(1, c) + digits + " out of range for " +
                             std::to_string(*options_.num_vars) + " variables",
                         where);
      max_vars_ = std::max(max_vars_, index + 1);
      Key k(index + 1, 0);
      k[index] = 1;
      Sparse p;
      accumulate(p, k, Rational(1));
      return p;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
  std::optional<Ring> ring_;
  std::size_t max_vars_ = 0;
};

Monomial to_monomial(Key k, std::size_t num_vars) {
  k.resize(num_vars, 0);
  return Monomial(std::move(k));
}

}  // namespace

HomogeneousForm<RationalField> parse_form(std::string_view text, const ParseOptions& options) {
  Parser parser(text, options);
  Sparse p = parser.parse();
  const Ring ring = options.ring.value_or(parser.ring().value_or(Ring::Primal));
  const std::size_t num_vars = options.num_vars.value_or(std::max<std::size_t>(parser.max_index_plus_one(), 1));
  const char letter = variable_letter(ring);

  // The map is ordered by trimmed key, not by degree; pick the leading term
  // in canonical order to fix the expected degree.
  std::vector<std::pair<Monomial, Rational>> terms;
  terms.reserve(p.size());
  for (auto& [k, c] : p) {
    Key trimmed = k;
    trim(trimmed);
    terms.emplace_back(to_monomial(std::move(trimmed), num_vars), c);
  }
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return CanonicalOrder{}(a.first, b.first); });
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });

  const int degree = terms.empty() ? 0 : static_cast<int>(terms.front().first.degree());
  HomogeneousForm<RationalField> form(RationalField{}, ring, num_vars, degree);
  for (const auto& [m, c] : terms) {
    if (static_cast<int>(m.degree()) != degree) {
      const std::string name = m.to_string(letter);
      throw InhomogeneousError("inhomogeneous input: term " + name + " has degree " + std::to_string(m.degree()) +
                                   ", expected " + std::to_string(degree),
                               name);
    }
    form.add_term(m, c);
  }
  return form;
}

}  // namespace starapolar
