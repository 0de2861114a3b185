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
#include <tuple>
#include <utility>
#include <vector>

#include "ecrank/arith/quadext.hpp"
#include "ecrank/arith/rational.hpp"
#include "ecrank/errors.hpp"

namespace ecrank {

inline bool is_zero(const QuadExt& q) { return q.is_zero(); }

/// Dense univariate polynomial over a field K, coefficients low degree first.
/// The zero polynomial has degree -1 and no stored coefficients.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }  // NOLINT(google-explicit-constructor)
  Poly(const K& constant) {                                         // NOLINT(google-explicit-constructor)
    if (!ecrank::is_zero(constant)) c_.push_back(constant);
  }

  /// c * x^k.
  static Poly monomial(const K& c, std::size_t k) {
    std::vector<K> v(k + 1, K(0));
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(K(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<K>& coeffs() const noexcept { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& lc() const { return c_.back(); }

  K eval(const K& t) const {
    K r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }

  /// Evaluates at a value of another ring T (T must be constructible from K).
  template <class T, class Conv>
  T eval_as(const T& t, Conv conv) const {
    T r = conv(K(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + conv(*it);
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> d(c_.size() - 1, K(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lc();
    return *this * inv;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const K& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a * K(-1); }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ecrank::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder; throws on division by zero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<K> r = a.c_;
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, K(0));
    K inv = K(1) / b.lc();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      K t = r[static_cast<std::size_t>(i) + b.c_.size() - 1] * inv;
      q[static_cast<std::size_t>(i)] = t;
      if (ecrank::is_zero(t)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[static_cast<std::size_t>(i) + j] -= t * b.c_[j];
    }
    r.resize(b.c_.size() - 1, K(0));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Exact quotient; throws if b does not divide a.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
    return q;
  }

  /// Monic gcd (zero if both are zero).
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
  friend std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0(K(1)), s1, t0, t1(K(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Poly s = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s);
      Poly t = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    K inv = K(1) / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
  }

  Poly pow(unsigned e) const {
    Poly r(K(1)), b = *this;
    while (e > 0) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e > 0) b = b * b;
    }
    return r;
  }

  /// p(q(x)).
  Poly compose(const Poly& q) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + Poly(*it);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && ecrank::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

using QPoly = Poly<Rational>;
using KPoly = Poly<QuadExt>;

/// Integer coefficient vector, low degree first.
using ZPoly = std::vector<Integer>;

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of p (p nonzero).
ZPoly primitive_part(const QPoly& p);
QPoly to_qpoly(const ZPoly& z);

/// Squarefree decomposition: p = lc * prod f_k^k with the f_k monic, squarefree,
/// pairwise coprime. Entry k-1 holds f_k (constant 1 when absent).
std::vector<QPoly> yun_decomposition(const QPoly& p);

/// Squarefree part (monic) of a nonzero polynomial.
QPoly squarefree_part(const QPoly& p);

/// Pairwise coprime monic squarefree polynomials such that each input is,
/// up to a constant, a product of powers of them.
std::vector<QPoly> gcd_free_basis(const std::vector<QPoly>& polys);

/// Multiplicity of the monic irreducible-or-squarefree factor q in p
/// (largest k with q^k | p).
unsigned multiplicity_of(const QPoly& q, QPoly p);

/// Sturm sequence of a nonzero polynomial.
std::vector<QPoly> sturm_sequence(const QPoly& p);
/// Number of distinct real roots in (lo, hi].
int sturm_count(const std::vector<QPoly>& seq, const Rational& lo, const Rational& hi);
/// Number of distinct real roots greater than lo.
int sturm_count_above(const std::vector<QPoly>& seq, const Rational& lo);
/// Number of distinct real roots.
int real_root_count(const QPoly& p);
/// A rational strictly larger than every complex root modulus (Cauchy bound).
Rational root_modulus_bound(const QPoly& p);

/// Resultant over Q via the Euclidean remainder sequence.
Rational resultant(const QPoly& a, const QPoly& b);

std::string to_string(const QPoly& p, const std::string& var = "x");

/// Rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace ecrank
