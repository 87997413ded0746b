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

#ifndef STARAPOLAR_FIELD_HPP
#define STARAPOLAR_FIELD_HPP

// Exact scalars: arbitrary-precision rationals, prime fields, and first-order
// jets over either. Scalars are plain values; the matching *Field class is a
// small copyable context that knows how to make zero, one and integers.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starapolar/errors.hpp"

namespace starapolar {

template <class F>
concept Field = requires(const F field, const typename F::value_type a,
                         const typename F::value_type b, std::int64_t i) {
  typename F::value_type;
  { field.zero() } -> std::same_as<typename F::value_type>;
  { field.one() } -> std::same_as<typename F::value_type>;
  { field.from_int(i) } -> std::same_as<typename F::value_type>;
  { field.name() } -> std::convertible_to<std::string>;
  { a + b } -> std::same_as<typename F::value_type>;
  { a - b } -> std::same_as<typename F::value_type>;
  { a * b } -> std::same_as<typename F::value_type>;
  { -a } -> std::same_as<typename F::value_type>;
  { a.inverse() } -> std::same_as<typename F::value_type>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::same_as<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <class F>
using scalar_t = typename F::value_type;

// ---------------------------------------------------------------------------
// Rationals

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  // Accepts "p" or "p/q" with optional sign; throws ParseError otherwise.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational inverse() const;
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
  Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
  Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

struct RationalField {
  using value_type = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(v); }
  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

// ---------------------------------------------------------------------------
// Prime fields

// Element of F_p. The modulus travels with the value so that mixing two
// fields is detected at the operation instead of producing garbage. A
// default-constructed element has modulus 0 and must be assigned before use.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  bool is_zero() const noexcept { return value_ == 0; }
  Fp inverse() const;
  Fp pow(std::uint64_t exponent) const;
  std::string to_string() const { return std::to_string(value_); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check_same(a, b);
    std::uint64_t s = a.value_ + b.value_;
    if (s < a.value_ || s >= a.modulus_) s -= a.modulus_;
    return raw(s, a.modulus_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check_same(a, b);
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + (a.modulus_ - b.value_), a.modulus_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check_same(a, b);
    // 64-bit division is much cheaper than 128-bit when the product fits.
    if (a.modulus_ <= (std::uint64_t{1} << 32)) return raw(a.value_ * b.value_ % a.modulus_, a.modulus_);
    const auto prod = static_cast<unsigned __int128>(a.value_) * b.value_;
    return raw(static_cast<std::uint64_t>(prod % a.modulus_), a.modulus_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    check_same(a, b);
    return a.value_ == b.value_;
  }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp f;
    f.value_ = v;
    f.modulus_ = p;
    return f;
  }
  static void check_same(const Fp& a, const Fp& b) {
    if (a.modulus_ != b.modulus_ || a.modulus_ == 0) [[unlikely]]
      throw_mismatch(a.modulus_, b.modulus_);
  }
  [[noreturn, gnu::cold, gnu::noinline]] static void throw_mismatch(std::uint64_t p, std::uint64_t q);

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

// Deterministic stream of 64-bit words. mt19937_64 output is fixed by the
// standard, and bounded draws use rejection sampling rather than
// std::uniform_int_distribution, so streams agree across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

bool is_prime(std::uint64_t n);

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const noexcept { return p_; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(std::int64_t v) const;
  Fp from_rational(const Rational& q) const;
  Fp random(SeededRng& rng) const { return Fp(rng.below(p_), p_); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

// ---------------------------------------------------------------------------
// Jets: value plus gradient with respect to a fixed number of parameters.

template <class B>
class Jet {
 public:
  Jet() = default;
  Jet(B value, std::vector<B> gradient) : value_(std::move(value)), gradient_(std::move(gradient)) {}

  const B& value() const noexcept { return value_; }
  const std::vector<B>& gradient() const noexcept { return gradient_; }
  std::size_t dimension() const noexcept { return gradient_.size(); }

  bool is_zero() const {
    if (!value_.is_zero()) return false;
    for (const auto& g : gradient_)
      if (!g.is_zero()) return false;
    return true;
  }

  // d(1/v) = -dv / v^2
  Jet inverse() const {
    const B inv = value_.inverse();
    const B factor = -(inv * inv);
    std::vector<B> g;
    g.reserve(gradient_.size());
    for (const auto& x : gradient_) g.push_back(factor * x);
    return Jet(inv, std::move(g));
  }

  std::string to_string() const {
    std::string s = "(" + value_.to_string() + ";";
    for (std::size_t k = 0; k < gradient_.size(); ++k) s += (k ? "," : "") + gradient_[k].to_string();
    return s + ")";
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    check_same(a, b);
    std::vector<B> g(a.gradient_);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += b.gradient_[k];
    return Jet(a.value_ + b.value_, std::move(g));
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    check_same(a, b);
    std::vector<B> g(a.gradient_);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] -= b.gradient_[k];
    return Jet(a.value_ - b.value_, std::move(g));
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    check_same(a, b);
    std::vector<B> g;
    g.reserve(a.gradient_.size());
    for (std::size_t k = 0; k < a.gradient_.size(); ++k)
      g.push_back(a.value_ * b.gradient_[k] + b.value_ * a.gradient_[k]);
    return Jet(a.value_ * b.value_, std::move(g));
  }
  Jet operator-() const {
    std::vector<B> g;
    g.reserve(gradient_.size());
    for (const auto& x : gradient_) g.push_back(-x);
    return Jet(-value_, std::move(g));
  }

  Jet& operator+=(const Jet& b) {
    check_same(*this, b);
    value_ += b.value_;
    for (std::size_t k = 0; k < gradient_.size(); ++k) gradient_[k] += b.gradient_[k];
    return *this;
  }
  Jet& operator-=(const Jet& b) { return *this = *this - b; }
  Jet& operator*=(const Jet& b) { return *this = *this * b; }

  friend bool operator==(const Jet& a, const Jet& b) {
    check_same(a, b);
    return a.value_ == b.value_ && a.gradient_ == b.gradient_;
  }

 private:
  static void check_same(const Jet& a, const Jet& b) {
    if (a.gradient_.size() != b.gradient_.size())
      throw FieldMismatch("jets of dimension " + std::to_string(a.gradient_.size()) + " and " +
                          std::to_string(b.gradient_.size()));
  }

  B value_;
  std::vector<B> gradient_;
};

template <Field BaseField>
class JetField {
 public:
  using base_type = scalar_t<BaseField>;
  using value_type = Jet<base_type>;

  JetField(BaseField base, std::size_t dimension) : base_(std::move(base)), dimension_(dimension) {}

  const BaseField& base() const noexcept { return base_; }
  std::size_t dimension() const noexcept { return dimension_; }

  value_type constant(base_type v) const {
    return value_type(std::move(v), std::vector<base_type>(dimension_, base_.zero()));
  }
  // The k-th coordinate function, evaluated at v.
  value_type variable(base_type v, std::size_t k) const {
    std::vector<base_type> g(dimension_, base_.zero());
    g.at(k) = base_.one();
    return value_type(std::move(v), std::move(g));
  }

  value_type zero() const { return constant(base_.zero()); }
  value_type one() const { return constant(base_.one()); }
  value_type from_int(std::int64_t v) const { return constant(base_.from_int(v)); }
  std::string name() const { return "Jet[" + std::to_string(dimension_) + "](" + base_.name() + ")"; }

  friend bool operator==(const JetField&, const JetField&) = default;

 private:
  BaseField base_;
  std::size_t dimension_;
};

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);
static_assert(Field<JetField<PrimeField>>);

// Integer power by squaring, valid for any scalar with a multiplicative one.
template <Field F>
scalar_t<F> power(const F& field, scalar_t<F> base, unsigned exponent) {
  scalar_t<F> result = field.one();
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

}  // namespace starapolar

#endif  // STARAPOLAR_FIELD_HPP
