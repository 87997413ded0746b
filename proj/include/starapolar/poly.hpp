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

#ifndef STARAPOLAR_POLY_HPP
#define STARAPOLAR_POLY_HPP

// Sparse homogeneous forms in S = k[x0..xn] (primal) and T = k[y0..yn]
// (dual). T acts on S by differentiation, y_j = d/dx_j.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starapolar/field.hpp"

namespace starapolar {

enum class Ring { Primal, Dual };

inline char variable_letter(Ring ring) { return ring == Ring::Primal ? 'x' : 'y'; }
inline const char* ring_name(Ring ring) { return ring == Ring::Primal ? "primal" : "dual"; }

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

  static Monomial one(std::size_t num_vars) { return Monomial(std::vector<unsigned>(num_vars, 0)); }
  static Monomial variable(std::size_t num_vars, std::size_t k) {
    std::vector<unsigned> e(num_vars, 0);
    e.at(k) = 1;
    return Monomial(std::move(e));
  }

  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }
  std::size_t num_vars() const noexcept { return exponents_.size(); }
  unsigned operator[](std::size_t k) const { return exponents_[k]; }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exponents_) d += e;
    return d;
  }

  Monomial operator*(const Monomial& other) const {
    if (other.num_vars() != num_vars()) throw RingMismatch("monomials over different variable counts");
    std::vector<unsigned> e(exponents_);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += other.exponents_[k];
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& other) const {
    for (std::size_t k = 0; k < exponents_.size(); ++k)
      if (exponents_[k] > other.exponents_[k]) return false;
    return true;
  }

  // `x0^2*x1`, or `1` for the unit monomial.
  std::string to_string(char letter) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exponents_;
};

// Lexicographic with x0 > x1 > ... > xn: the monomial with the larger
// exponent at the first differing position comes first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents() > b.exponents(); }
};

// All degree-d monomials in n+1 variables in canonical order; the first is
// x0^d and the length is C(n+d, d).
std::vector<Monomial> monomial_basis(std::size_t n, unsigned d);

// C(a, b) exactly; throws DomainError if it does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

// Position lookup for the canonical basis of one graded piece.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t n, unsigned d) : basis_(monomial_basis(n, d)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) position_.emplace(basis_[i], i);
  }

  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  std::size_t position(const Monomial& m) const { return position_.at(m); }

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, CanonicalOrder> position_;
};

template <Field F>
class HomogeneousForm {
 public:
  using scalar = scalar_t<F>;
  using TermMap = std::map<Monomial, scalar, CanonicalOrder>;

  // The zero form of the given degree. A negative degree is allowed only for
  // zero forms produced by contracting past the degree.
  HomogeneousForm(F field, Ring ring, std::size_t num_vars, int degree)
      : field_(std::move(field)), ring_(ring), num_vars_(num_vars), degree_(degree) {
    if (num_vars == 0) throw DomainError("forms need at least one variable");
  }

  static HomogeneousForm term(F field, Ring ring, const Monomial& m, const scalar& c) {
    HomogeneousForm f(std::move(field), ring, m.num_vars(), static_cast<int>(m.degree()));
    f.add_term(m, c);
    return f;
  }

  static HomogeneousForm variable(F field, Ring ring, std::size_t num_vars, std::size_t k) {
    const scalar one = field.one();
    return term(std::move(field), ring, Monomial::variable(num_vars, k), one);
  }

  static HomogeneousForm constant(F field, Ring ring, std::size_t num_vars, const scalar& c) {
    return term(std::move(field), ring, Monomial::one(num_vars), c);
  }

  // sum_k coefficients[k] * var_k
  static HomogeneousForm linear(F field, Ring ring, std::span<const scalar> coefficients) {
    HomogeneousForm f(std::move(field), ring, coefficients.size(), 1);
    for (std::size_t k = 0; k < coefficients.size(); ++k)
      f.add_term(Monomial::variable(coefficients.size(), k), coefficients[k]);
    return f;
  }

  // Inverse of coordinates().
  static HomogeneousForm from_coordinates(F field, Ring ring, std::size_t num_vars, unsigned degree,
                                          std::span<const scalar> coords) {
    const auto basis = monomial_basis(num_vars - 1, degree);
    if (coords.size() != basis.size()) throw DomainError("coordinate vector has wrong length");
    HomogeneousForm f(std::move(field), ring, num_vars, static_cast<int>(degree));
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords[i]);
    return f;
  }

  const F& field() const noexcept { return field_; }
  Ring ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  // Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const scalar& c) {
    if (m.num_vars() != num_vars_) throw RingMismatch("monomial has wrong number of variables");
    if (static_cast<int>(m.degree()) != degree_)
      throw RingMismatch("monomial of degree " + std::to_string(m.degree()) + " in a form of degree " +
                         std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Coefficients along monomial_basis(num_vars - 1, degree).
  std::vector<scalar> coordinates() const {
    if (degree_ < 0) return {};
    const auto basis = monomial_basis(num_vars_ - 1, static_cast<unsigned>(degree_));
    std::vector<scalar> v;
    v.reserve(basis.size());
    for (const auto& m : basis) v.push_back(coefficient(m));
    return v;
  }

  scalar evaluate(std::span<const scalar> point) const {
    if (point.size() != num_vars_) throw DomainError("evaluation point has wrong dimension");
    scalar total = field_.zero();
    for (const auto& [m, c] : terms_) {
      scalar value = c;
      for (std::size_t k = 0; k < num_vars_; ++k)
        if (m[k]) value = value * power(field_, point[k], m[k]);
      total = total + value;
    }
    return total;
  }

  HomogeneousForm scaled(const scalar& s) const {
    HomogeneousForm out(field_, ring_, num_vars_, degree_);
    if (s.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
  }

  HomogeneousForm times_monomial(const Monomial& mu) const {
    HomogeneousForm out(field_, ring_, num_vars_, degree_ + static_cast<int>(mu.degree()));
    for (const auto& [m, c] : terms_) out.terms_.emplace(m * mu, c);
    return out;
  }

  template <Field G, class Fn>
  HomogeneousForm<G> map_coefficients(G target, Fn&& fn) const {
    HomogeneousForm<G> out(std::move(target), ring_, num_vars_, degree_);
    for (const auto& [m, c] : terms_) out.add_term(m, fn(c));
    return out;
  }

  friend HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
    check_compatible(a, b);
    if (a.degree_ != b.degree_ && !a.is_zero() && !b.is_zero())
      throw RingMismatch("adding forms of degree " + std::to_string(a.degree_) + " and " +
                         std::to_string(b.degree_));
    if (a.is_zero()) return b;
    HomogeneousForm out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  HomogeneousForm operator-() const { return scaled(-field_.one()); }
  friend HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) { return a + (-b); }

  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    check_compatible(a, b);
    HomogeneousForm out(a.field_, a.ring_, a.num_vars_, a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  // Zero forms compare equal regardless of their nominal degree.
  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.ring_ != b.ring_ || a.num_vars_ != b.num_vars_) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  static void check_compatible(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.ring_ != b.ring_) throw RingMismatch("mixing primal and dual forms");
    if (a.num_vars_ != b.num_vars_)
      throw RingMismatch("forms in " + std::to_string(a.num_vars_) + " and " + std::to_string(b.num_vars_) +
                         " variables");
  }

  F field_;
  Ring ring_;
  std::size_t num_vars_;
  int degree_;
  TermMap terms_;
};

// The action of T on S: y^a applied to x^b is prod_j b_j!/(b_j-a_j)! x^(b-a)
// when a <= b, and zero otherwise. Result degree is deg f - deg op.
template <Field F>
HomogeneousForm<F> contract(const HomogeneousForm<F>& op, const HomogeneousForm<F>& f) {
  if (op.ring() != Ring::Dual || f.ring() != Ring::Primal)
    throw RingMismatch("contract expects a dual operator and a primal form");
  if (op.num_vars() != f.num_vars()) throw RingMismatch("operator and form have different variable counts");
  const F& field = f.field();
  HomogeneousForm<F> out(field, Ring::Primal, f.num_vars(), f.degree() - op.degree());
  if (out.degree() < 0) return out;
  for (const auto& [a, ca] : op.terms()) {
    for (const auto& [b, cb] : f.terms()) {
      if (!a.divides(b)) continue;
      std::vector<unsigned> rest(b.exponents());
      std::uint64_t falling = 1;
      scalar_t<F> factor = ca * cb;
      for (std::size_t j = 0; j < rest.size(); ++j) {
        for (unsigned t = 0; t < a[j]; ++t) {
          falling *= rest[j];
          --rest[j];
          if (falling > (std::uint64_t{1} << 40)) {
            factor = factor * field.from_int(static_cast<std::int64_t>(falling));
            falling = 1;
          }
        }
      }
      factor = factor * field.from_int(static_cast<std::int64_t>(falling));
      out.add_term(Monomial(std::move(rest)), factor);
    }
  }
  return out;
}

// (sum_j c_j var_j)^d expanded with multinomial coefficients.
template <Field F>
HomogeneousForm<F> linear_power(const F& field, Ring ring, std::span<const scalar_t<F>> coefficients, unsigned d) {
  const std::size_t nv = coefficients.size();
  HomogeneousForm<F> out(field, ring, nv, static_cast<int>(d));
  // powers[j][e] = c_j^e
  std::vector<std::vector<scalar_t<F>>> powers(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    powers[j].reserve(d + 1);
    powers[j].push_back(field.one());
    for (unsigned e = 1; e <= d; ++e) powers[j].push_back(powers[j].back() * coefficients[j]);
  }
  for (const auto& m : monomial_basis(nv - 1, d)) {
    // d!/prod e_j! as a product of binomials C(e_0+..+e_j, e_j)
    std::uint64_t partial = 0;
    scalar_t<F> value = field.one();
    for (std::size_t j = 0; j < nv; ++j) {
      if (m[j] == 0) continue;
      partial += m[j];
      value = value * field.from_int(static_cast<std::int64_t>(binomial(partial, m[j]))) * powers[j][m[j]];
    }
    out.add_term(m, value);
  }
  return out;
}

// x0^3 - x1^2*x2 style: explicit * and ^, canonical term order, "0" for the
// zero form.
template <Field F>
std::string print_form(const HomogeneousForm<F>& f) {
  if (f.is_zero()) return "0";
  const char letter = variable_letter(f.ring());
  const auto one = f.field().one();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool negative = false;
    auto magnitude = c;
    if constexpr (requires { c.sign(); }) {
      if (c.sign() < 0) {
        negative = true;
        magnitude = -c;
      }
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = m.degree() == 0;
    if (unit) {
      out += magnitude.to_string();
    } else if (magnitude == one) {
      out += m.to_string(letter);
    } else {
      out += magnitude.to_string() + "*" + m.to_string(letter);
    }
  }
  return out;
}

}  // namespace starapolar

#endif  // STARAPOLAR_POLY_HPP
