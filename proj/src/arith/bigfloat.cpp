// Copyright 2026 The ecrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ecrank/arith/bigfloat.hpp"

#include <climits>
#include <vector>

namespace ecrank {

namespace {

long max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& v, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(long prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (is_zero()) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

Rational BigFloat::to_rational() const {
  mpz_t m;
  mpz_init(m);
  long e = mpfr_get_z_2exp(m, v_);
  Rational r{Integer(m)};
  mpz_clear(m);
  if (e > 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else if (e < 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

long BigFloat::exponent() const {
  if (is_zero()) return LONG_MIN;
  return mpfr_get_exp(v_);
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(max_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

BigFloat pow2(long e, long prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  BigFloat r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  BigFloat d = norm(o);
  BigFloat r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const BigFloat& s) {
  re *= s;
  im *= s;
  return *this;
}

BigFloat abs(const Complex& z) {
  BigFloat r(z.precision());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

BigFloat norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

BigFloat arg(const Complex& z) { return atan2(z.im, z.re); }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex sqrt(const Complex& z) {
  long prec = z.precision();
  if (z.re.is_zero() && z.im.is_zero()) return Complex(prec);
  BigFloat r = abs(z);
  BigFloat half(0.5, prec);
  BigFloat s = sqrt((r + abs(z.re)) * half);
  if (z.re.sign() >= 0) {
    return {s, z.im / (s + s)};
  }
  BigFloat t = z.im.sign() >= 0 ? s : -s;
  return {abs(z.im) / (s + s), t};
}

Complex polar(const BigFloat& r, const BigFloat& theta) { return {r * cos(theta), r * sin(theta)}; }

}  // namespace ecrank
