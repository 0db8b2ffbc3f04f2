/*
 * Copyright 2026 The vstlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Exact scalars: rationals, Gaussian rationals Q(i) and Laurent polynomials
// Z[t, t^-1]. Every value is canonical, so structural equality is
// mathematical equality.

#include <compare>
#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vstlab {

/// Arbitrary precision rational, always in lowest terms with positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts `p` or `p/q` with optional sign and surrounding blanks.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Element re + im*i of the field Q(i), the exact stand-in for C.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  /// Grammar: `p/q`, `p/q+r/s*i`, `r/s*i`, `i`, `-i`, `1-i`; blanks ignored.
  static Gaussian parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  Gaussian conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  /// Multiplicative inverse. Throws ConstraintError for zero.
  Gaussian inverse() const;
  std::string to_string() const;

  Gaussian operator-() const { return {-re_, -im_}; }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;

 private:
  Rational re_;
  Rational im_;
};

Gaussian pow(const Gaussian& base, int exponent);

/// Element of Z[t, t^-1], stored as exponent-sorted nonzero terms.
/// The zero polynomial has no terms.
class LaurentPoly {
 public:
  using Term = std::pair<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const mpz_class& coeff, int exponent);
  /// The indeterminate t.
  static LaurentPoly t() { return monomial(1, 1); }
  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are
  /// summed and zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  /// Grammar: `2t^-1 + 1 - 3t^2`, `t`, `-1`, `1-t`. An optional `*` may
  /// separate coefficient and `t`.
  static LaurentPoly parse(std::string_view text);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Coefficient of t^exponent (zero when absent).
  mpz_class coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// The inverse when this is a unit (+-t^k) of Z[t, t^-1].
  std::optional<LaurentPoly> unit_inverse() const;
  bool is_unit() const { return unit_inverse().has_value(); }

  /// Substitutes t -> t0. Throws ConstraintError when t0 = 0.
  Gaussian eval(const Gaussian& t0) const;

  /// Canonical text in ascending exponent order, `0` for zero.
  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

/// Exact quotient a / b in Z[t, t^-1], or nullopt when b does not divide a.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Ring interface used by the generic matrix code.
template <class R>
concept RingElement = requires(const R a, const R b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  R(0);
  R(1);
};

template <class R>
struct RingTraits;

template <>
struct RingTraits<LaurentPoly> {
  static constexpr std::string_view tag = "laurent";
  static constexpr bool is_field = false;
  static std::optional<LaurentPoly> inverse(const LaurentPoly& a) { return a.unit_inverse(); }
  static std::optional<LaurentPoly> divide(const LaurentPoly& a, const LaurentPoly& b) {
    return divide_exact(a, b);
  }
  static LaurentPoly parse(std::string_view s) { return LaurentPoly::parse(s); }
};

template <>
struct RingTraits<Gaussian> {
  static constexpr std::string_view tag = "gaussian";
  static constexpr bool is_field = true;
  static std::optional<Gaussian> inverse(const Gaussian& a) {
    if (a.is_zero()) return std::nullopt;
    return a.inverse();
  }
  static std::optional<Gaussian> divide(const Gaussian& a, const Gaussian& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
  }
  static Gaussian parse(std::string_view s) { return Gaussian::parse(s); }
};

}  // namespace vstlab
