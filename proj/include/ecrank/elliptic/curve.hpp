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

#include <optional>
#include <string>

#include "ecrank/arith/quadext.hpp"
#include "ecrank/arith/rational.hpp"
#include "ecrank/errors.hpp"

namespace ecrank {

/// y^2 = x^3 + a x + b over Q with nonzero discriminant.
class WeierstrassCurve {
 public:
  /// Throws InvalidArgument when the discriminant vanishes.
  WeierstrassCurve(const Rational& a, const Rational& b);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  /// -16 (4 a^3 + 27 b^2).
  const Rational& discriminant() const noexcept { return disc_; }

  /// x^3 + a x + b.
  template <class K>
  K rhs(const K& x) const {
    return x * x * x + K(a_) * x + K(b_);
  }

  std::string to_string() const;

  friend bool operator==(const WeierstrassCurve& e, const WeierstrassCurve& f) { return e.a_ == f.a_ && e.b_ == f.b_; }

 private:
  Rational a_, b_, disc_;
};

/// Affine point (x, y) or the point at infinity O, coordinates in K
/// (Rational or QuadExt).
template <class K>
struct CurvePoint {
  K x{};
  K y{};
  bool infinity = true;

  static CurvePoint O() { return {}; }
  static CurvePoint affine(K x, K y) { return {std::move(x), std::move(y), false}; }

  bool is_infinity() const noexcept { return infinity; }

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator!=(const CurvePoint& p, const CurvePoint& q) { return !(p == q); }
};

using RationalPoint = CurvePoint<Rational>;
using QuadPoint = CurvePoint<QuadExt>;

inline QuadPoint to_quad(const RationalPoint& p) {
  if (p.infinity) return QuadPoint::O();
  return QuadPoint::affine(QuadExt(p.x), QuadExt(p.y));
}

/// The point as a rational point when both coordinates are rational.
std::optional<RationalPoint> to_rational(const QuadPoint& p);

template <class K>
bool on_curve(const WeierstrassCurve& e, const CurvePoint<K>& p) {
  return p.infinity || p.y * p.y == e.rhs(p.x);
}

template <class K>
CurvePoint<K> negate(const CurvePoint<K>& p) {
  if (p.infinity) return p;
  return CurvePoint<K>::affine(p.x, -p.y);
}

/// Chord-tangent addition without membership checks.
template <class K>
CurvePoint<K> add_unchecked(const WeierstrassCurve& e, const CurvePoint<K>& p, const CurvePoint<K>& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  K lambda;
  if (p.x == q.x) {
    if (p.y == -q.y) return CurvePoint<K>::O();
    lambda = (K(3) * p.x * p.x + K(e.a())) / (K(2) * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  K x3 = lambda * lambda - p.x - q.x;
  K y3 = lambda * (p.x - x3) - p.y;
  return CurvePoint<K>::affine(std::move(x3), std::move(y3));
}

/// P + Q; throws InvalidArgument when either point is off the curve.
template <class K>
CurvePoint<K> add_points(const WeierstrassCurve& e, const CurvePoint<K>& p, const CurvePoint<K>& q) {
  if (!on_curve(e, p) || !on_curve(e, q)) throw InvalidArgument("add_points: point not on curve");
  return add_unchecked(e, p, q);
}

/// n P for any integer n, by double-and-add.
template <class K>
CurvePoint<K> scalar_mul(const WeierstrassCurve& e, const CurvePoint<K>& p, long n) {
  if (!on_curve(e, p)) throw InvalidArgument("scalar_mul: point not on curve");
  CurvePoint<K> base = n < 0 ? negate(p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  CurvePoint<K> acc = CurvePoint<K>::O();
  while (k > 0) {
    if (k & 1ul) acc = add_unchecked(e, acc, base);
    k >>= 1ul;
    if (k > 0) base = add_unchecked(e, base, base);
  }
  return acc;
}

inline constexpr unsigned kTorsionBoundQ = 12;
inline constexpr unsigned kTorsionBoundQuadratic = 18;

/// Smallest n <= bound with nP = O, or nullopt ("non-torsion" relative to
/// the bound).
template <class K>
std::optional<unsigned> torsion_order(const WeierstrassCurve& e, const CurvePoint<K>& p, unsigned bound) {
  if (bound < 1) throw InvalidArgument("torsion_order: bound must be positive");
  if (!on_curve(e, p)) throw InvalidArgument("torsion_order: point not on curve");
  CurvePoint<K> acc = p;
  for (unsigned n = 1; n <= bound; ++n) {
    if (acc.infinity) return n;
    acc = add_unchecked(e, acc, p);
  }
  return std::nullopt;
}

std::string to_string(const RationalPoint& p);
std::string to_string(const QuadPoint& p);

}  // namespace ecrank
