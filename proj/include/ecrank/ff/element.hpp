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
#include <vector>

#include "ecrank/arith/bigfloat.hpp"
#include "ecrank/arith/poly.hpp"
#include "ecrank/elliptic/curve.hpp"

namespace ecrank {

/// u(x) + v(x) y in Q(E), reduced modulo y^2 = x^3 + a x + b. Polynomial
/// elements only: the pole is at O, of order max(2 deg u, 2 deg v + 3).
class FFElement {
 public:
  FFElement(const WeierstrassCurve& e, QPoly u = {}, QPoly v = {});

  static FFElement constant(const WeierstrassCurve& e, const Rational& c) { return {e, QPoly(c), {}}; }
  static FFElement x(const WeierstrassCurve& e) { return {e, QPoly::x(), {}}; }
  static FFElement y(const WeierstrassCurve& e) { return {e, {}, QPoly(Rational(1))}; }

  const WeierstrassCurve& curve() const noexcept { return e_; }
  const QPoly& u() const noexcept { return u_; }
  const QPoly& v() const noexcept { return v_; }

  bool is_zero() const noexcept { return u_.is_zero() && v_.is_zero(); }
  bool is_constant() const noexcept { return v_.is_zero() && u_.degree() <= 0; }
  /// Pole order at O; 0 for nonzero constants, -1 for zero.
  int pole_order() const;

  /// x^3 + a x + b.
  QPoly w() const;
  /// u^2 - v^2 w, the norm to Q(x).
  QPoly norm() const;
  /// u - v y.
  FFElement conj() const { return {e_, u_, -v_}; }

  Rational eval(const RationalPoint& p) const;
  QuadExt eval(const QuadPoint& p) const;
  Complex eval(const Complex& x, const Complex& y) const;

  FFElement& operator+=(const FFElement& o);
  FFElement& operator-=(const FFElement& o);
  FFElement& operator*=(const FFElement& o);
  FFElement& operator*=(const Rational& s);

  friend FFElement operator+(FFElement a, const FFElement& b) { return a += b; }
  friend FFElement operator-(FFElement a, const FFElement& b) { return a -= b; }
  friend FFElement operator*(FFElement a, const FFElement& b) { return a *= b; }
  friend FFElement operator*(FFElement a, const Rational& s) { return a *= s; }
  friend FFElement operator*(const Rational& s, FFElement a) { return a *= s; }
  friend FFElement operator-(const FFElement& a) { return {a.e_, -a.u_, -a.v_}; }
  friend bool operator==(const FFElement& a, const FFElement& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
  friend bool operator!=(const FFElement& a, const FFElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same_curve(const FFElement& o) const;

  WeierstrassCurve e_;
  QPoly u_, v_;
};

/// The invariant derivation normalized by D(x) = 2y:
/// D(u + v y) = (2 v' w + v w') + 2 u' y.
FFElement ff_derivative(const FFElement& f);

/// Pole order of the k-th basis element of L(nO): 0, 2, 3, ..., n.
int rr_pole_order(std::size_t index);
/// [1, x, y, x^2, x y, x^3, ...]: n monomials with pole orders 0, 2, 3, ..., n.
std::vector<FFElement> rr_basis(const WeierstrassCurve& e, int n);
/// Coordinates of f in rr_basis(n); throws if f is not in L(nO).
std::vector<Rational> rr_coordinates(const FFElement& f, int n);
/// Element with the given coordinates in rr_basis(coords.size()).
FFElement from_rr_coordinates(const WeierstrassCurve& e, const std::vector<Rational>& coords);

/// Zero order of f at an affine rational point: least k with (D^k f)(P) != 0.
int order_at(const FFElement& f, const RationalPoint& p);

}  // namespace ecrank
