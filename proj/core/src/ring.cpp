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

#include "vstlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "vstlab/error.hpp"

namespace vstlab {

namespace {

std::string strip_blanks(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads a run of decimal digits starting at pos; empty when none.
std::string_view read_digits(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  return s.substr(start, pos - start);
}

mpz_class to_mpz(std::string_view digits) { return mpz_class(std::string(digits), 10); }

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ConstraintError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s = strip_blanks(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  auto num = read_digits(s, pos);
  if (num.empty()) throw ParseError("expected integer in rational '" + std::string(text) + "'");
  mpz_class den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    auto d = read_digits(s, pos);
    if (d.empty()) throw ParseError("expected denominator in '" + std::string(text) + "'");
    den = to_mpz(d);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (pos != s.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'");
  mpz_class n = to_mpz(num);
  if (negative) n = -n;
  return Rational(n, den);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ConstraintError("division by zero");
  value_ /= o.value_;
  return *this;
}

// ---------------------------------------------------------------- Gaussian

Gaussian Gaussian::parse(std::string_view text) {
  std::string s = strip_blanks(text);
  if (s.empty()) throw ParseError("empty scalar");
  Rational re, im;
  std::size_t pos = 0;
  int terms = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (terms > 0) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    Rational magnitude(1);
    bool has_number = false;
    if (pos < s.size() && is_digit(s[pos])) {
      std::size_t start = pos;
      read_digits(s, pos);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (read_digits(s, pos).empty()) throw ParseError("bad fraction in '" + std::string(text) + "'");
      }
      magnitude = Rational::parse(std::string_view(s).substr(start, pos - start));
      has_number = true;
    }
    bool imaginary = false;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_number) throw ParseError("dangling '*' in '" + std::string(text) + "'");
      ++pos;
      if (pos >= s.size() || s[pos] != 'i') throw ParseError("expected 'i' after '*' in '" + std::string(text) + "'");
    }
    if (pos < s.size() && s[pos] == 'i') {
      imaginary = true;
      ++pos;
    }
    if (!has_number && !imaginary) throw ParseError("malformed scalar '" + std::string(text) + "'");
    if (negative) magnitude = -magnitude;
    (imaginary ? im : re) += magnitude;
    ++terms;
  }
  return {re, im};
}

Gaussian Gaussian::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw ConstraintError("inverse of zero");
  return {re_ / n, -im_ / n};
}

std::string Gaussian::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string out = re_.is_zero() ? "" : re_.to_string();
  if (im_.sign() < 0) {
    out += "-";
  } else if (!re_.is_zero()) {
    out += "+";
  }
  const Rational mag = im_.sign() < 0 ? -im_ : im_;
  if (mag != Rational(1)) out += mag.to_string() + "*";
  return out + "i";
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian pow(const Gaussian& base, int exponent) {
  Gaussian b = exponent < 0 ? base.inverse() : base;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-static_cast<long>(exponent))
                            : static_cast<unsigned>(exponent);
  Gaussian result(1);
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace_back(0, mpz_class(constant));
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
    } else {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s = strip_blanks(text);
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!terms.empty()) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(pos) + " in '" +
                       std::string(text) + "'");
    }
    auto digits = read_digits(s, pos);
    mpz_class coeff = digits.empty() ? mpz_class(1) : to_mpz(digits);
    int exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (digits.empty()) throw ParseError("dangling '*' in '" + std::string(text) + "'");
      ++pos;
      if (pos >= s.size() || s[pos] != 't') throw ParseError("expected 't' after '*' in '" + std::string(text) + "'");
    }
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        bool neg_exp = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg_exp = s[pos++] == '-';
        auto e = read_digits(s, pos);
        if (e.empty() || e.size() > 9) throw ParseError("bad exponent in '" + std::string(text) + "'");
        exponent = std::stoi(std::string(e));
        if (neg_exp) exponent = -exponent;
      }
    } else if (digits.empty()) {
      throw ParseError("malformed term in '" + std::string(text) + "'");
    }
    if (negative) coeff = -coeff;
    terms.emplace_back(exponent, std::move(coeff));
  }
  return from_terms(std::move(terms));
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw ConstraintError("zero polynomial has no exponents");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw ConstraintError("zero polynomial has no exponents");
  return terms_.back().first;
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = terms_[0];
  if (c != 1 && c != -1) return std::nullopt;
  return monomial(c, -e);
}

Gaussian LaurentPoly::eval(const Gaussian& t0) const {
  if (t0.is_zero()) throw ConstraintError("cannot specialize a Laurent polynomial at t = 0");
  if (terms_.empty()) return Gaussian(0);
  // Horner from the top exponent down to the bottom one.
  Gaussian acc(0);
  int current = terms_.back().first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= pow(t0, current - it->first);
    current = it->first;
    acc += Gaussian(Rational(mpq_class(it->second)));
  }
  return acc * pow(t0, current);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c < 0;
    mpz_class magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str();
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.second = -term.second;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      mpz_class c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  const long lo = static_cast<long>(a.terms_.front().first) + b.terms_.front().first;
  const long hi = static_cast<long>(a.terms_.back().first) + b.terms_.back().first;
  const long span = hi - lo + 1;
  if (span <= 4096) {
    std::vector<mpz_class> dense(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        mpz_addmul(dense[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(),
                   cb.get_mpz_t());
      }
    }
    for (long k = 0; k < span; ++k) {
      if (dense[static_cast<std::size_t>(k)] != 0) {
        out.terms_.emplace_back(static_cast<int>(lo + k), std::move(dense[static_cast<std::size_t>(k)]));
      }
    }
    return out;
  }
  std::map<int, mpz_class> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  }
  for (auto& [e, c] : acc) {
    if (c != 0) out.terms_.emplace_back(e, std::move(c));
  }
  return out;
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result(1);
  LaurentPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly();
  // Long division from the top; both operands have a nonzero lowest term,
  // so divisibility in Z[t] after shifting is the same question.
  const int shift = a.min_exponent() - b.min_exponent();
  const int b_lo = b.min_exponent();
  const int b_hi = b.max_exponent();
  const mpz_class& b_lead = b.terms().back().second;

  LaurentPoly rem = a;
  std::vector<LaurentPoly::Term> quotient;
  while (!rem.is_zero()) {
    const int r_hi = rem.max_exponent();
    if (r_hi - b_hi < rem.min_exponent() - b_lo) return std::nullopt;
    const mpz_class& r_lead = rem.terms().back().second;
    if (!mpz_divisible_p(r_lead.get_mpz_t(), b_lead.get_mpz_t())) return std::nullopt;
    mpz_class q = r_lead / b_lead;
    const int qe = r_hi - b_hi;
    if (qe < shift) return std::nullopt;
    quotient.emplace_back(qe, q);
    rem -= LaurentPoly::monomial(q, qe) * b;
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

}  // namespace vstlab
