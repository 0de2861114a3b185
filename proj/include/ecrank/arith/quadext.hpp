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

#include <string>

#include "ecrank/arith/rational.hpp"

namespace ecrank {

/// Element u + v*sqrt(d) of Q(sqrt d), d squarefree and not 0 or 1.
///
/// A default-constructed or rational-constructed value is "unbound" (d = 0):
/// it behaves as a rational constant and adopts d from the other operand in
/// mixed arithmetic. Combining two different bound d values throws.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& u) : u_(u) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long u) : u_(u) {}             // NOLINT(google-explicit-constructor)
  /// Throws InvalidArgument unless d is squarefree and d != 0, 1.
  QuadExt(const Integer& d, const Rational& u, const Rational& v);

  /// sqrt(d) itself.
  static QuadExt sqrt_of(const Integer& d) { return QuadExt(d, 0, 1); }

  const Integer& d() const noexcept { return d_; }
  const Rational& u() const noexcept { return u_; }
  const Rational& v() const noexcept { return v_; }
  bool is_bound() const noexcept { return d_ != 0; }
  bool is_rational() const noexcept { return sgn(v_) == 0; }
  bool is_zero() const noexcept { return sgn(u_) == 0 && sgn(v_) == 0; }

  QuadExt conj() const;
  Rational norm() const;
  Rational trace() const { return 2 * u_; }
  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend QuadExt operator-(const QuadExt& a);
  friend bool operator==(const QuadExt& a, const QuadExt& b);
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void adopt(const QuadExt& o);

  Integer d_ = 0;
  Rational u_ = 0;
  Rational v_ = 0;
};

/// Squarefree, nonzero and not 1.
bool is_valid_quadratic_d(const Integer& d);

}  // namespace ecrank
