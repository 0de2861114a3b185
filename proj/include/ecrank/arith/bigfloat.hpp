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

#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "ecrank/arith/rational.hpp"

namespace ecrank {

inline constexpr long kDefaultPrecision = 128;

/// MPFR value that carries its own precision. Results of binary operations
/// take the larger operand precision; rounding is to nearest.
class BigFloat {
 public:
  explicit BigFloat(long prec = kDefaultPrecision);
  BigFloat(double v, long prec);
  BigFloat(const Integer& v, long prec);
  BigFloat(const Rational& v, long prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Copy rounded to a new precision.
  BigFloat with_precision(long prec) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal string with `digits` significant digits.
  std::string to_string(int digits = 20) const;
  /// Exact rational value of the binary float.
  Rational to_rational() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; LONG_MIN for zero.
  long exponent() const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pi(long prec);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);
/// 2^e at the given precision.
BigFloat pow2(long e, long prec);

struct Complex {
  BigFloat re;
  BigFloat im;

  explicit Complex(long prec = kDefaultPrecision) : re(prec), im(prec) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  Complex(const Rational& r, long prec) : re(r, prec), im(prec) {}

  long precision() const { return std::max(re.precision(), im.precision()); }
  Complex with_precision(long prec) const { return {re.with_precision(prec), im.with_precision(prec)}; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const BigFloat& s);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const BigFloat& s) { return a *= s; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
};

BigFloat abs(const Complex& z);
BigFloat norm(const Complex& z);  // |z|^2
BigFloat arg(const Complex& z);
Complex conj(const Complex& z);
Complex sqrt(const Complex& z);
/// r * e^{i theta}.
Complex polar(const BigFloat& r, const BigFloat& theta);

}  // namespace ecrank
