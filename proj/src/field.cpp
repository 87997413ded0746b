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

#include "starapolar/field.hpp"

#include <cctype>
#include <limits>

namespace starapolar {

namespace {

mpz_class mpz_from_int64(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 expected");
  return mpz_class(static_cast<long>(v));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1U) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

Rational::Rational(std::int64_t value) : q_(mpz_from_int64(value)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero();
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw ParseError("expected digits in rational '" + std::string(text) + "'", j);
    return j;
  };
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  const std::size_t num_end = digits(i);
  mpz_class num(std::string(text.substr(i, num_end - i)));
  mpz_class den = 1;
  i = num_end;
  if (i < text.size() && text[i] == '/') {
    const std::size_t den_end = digits(i + 1);
    den = mpz_class(std::string(text.substr(i + 1, den_end - i - 1)));
    i = den_end;
  }
  if (i != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'", i);
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class inv = 1 / q_;
  return Rational(std::move(inv));
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

void Fp::throw_mismatch(std::uint64_t p, std::uint64_t q) {
  throw FieldMismatch("operands in F_" + std::to_string(p) + " and F_" + std::to_string(q));
}

Fp Fp::pow(std::uint64_t exponent) const {
  if (modulus_ == 0) throw FieldMismatch("unbound prime-field element");
  return raw(pow_mod(value_, exponent, modulus_), modulus_);
}

Fp Fp::inverse() const {
  if (modulus_ == 0) throw FieldMismatch("unbound prime-field element");
  if (value_ == 0) throw DivisionByZero();
  return pow(modulus_ - 2);
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("SeededRng::below(0)");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

// Deterministic Miller-Rabin; these witnesses cover all 64-bit integers.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

Fp PrimeField::from_int(std::int64_t v) const {
  if (v >= 0) return Fp(static_cast<std::uint64_t>(v), p_);
  // -(v + 1) avoids overflow at INT64_MIN
  const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return -Fp(mag % p_, p_);
}

Fp PrimeField::from_rational(const Rational& q) const {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 expected");
  const mpz_class num = q.numerator();
  const mpz_class den = q.denominator();
  const Fp n(mpz_fdiv_ui(num.get_mpz_t(), p_), p_);
  const Fp d(mpz_fdiv_ui(den.get_mpz_t(), p_), p_);
  if (d.is_zero()) throw DivisionByZero();
  return n * d.inverse();
}

}  // namespace starapolar
