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

#include "ecrank/ff/miller.hpp"

namespace ecrank {

DivisorSumError::DivisorSumError(QuadPoint defect)
    : InvalidArgument("points do not sum to O; their sum is " + to_string(defect)), defect_(std::move(defect)) {}

namespace {

// u(x) + v(x) y with coefficients in Q(sqrt d).
struct KElement {
  KPoly u, v;
};

KElement multiply(const KElement& f, const KElement& g, const KPoly& w) {
  return {f.u * g.u + f.v * g.v * w, f.u * g.v + f.v * g.u};
}

KPoly vertical(const QuadPoint& p) {
  if (p.infinity) return KPoly(QuadExt(1));
  return KPoly({-p.x, QuadExt(1)});
}

// Line through s and p (tangent when equal); its divisor is
// (s) + (p) + (-(s+p)) - 3(O).
KElement line(const WeierstrassCurve& e, const QuadPoint& s, const QuadPoint& p) {
  if (s.infinity && p.infinity) return {KPoly(QuadExt(1)), {}};
  if (s.infinity) return {vertical(p), {}};
  if (p.infinity) return {vertical(s), {}};
  if (s.x == p.x && s.y == -p.y) return {vertical(s), {}};
  QuadExt lambda = s == p ? (QuadExt(3) * s.x * s.x + QuadExt(e.a())) / (QuadExt(2) * s.y) : (p.y - s.y) / (p.x - s.x);
  // y - y_s - lambda (x - x_s)
  return {KPoly({lambda * s.x - s.y, -lambda}), KPoly(QuadExt(1))};
}

QuadExt leading_coefficient(const KElement& f) {
  int pu = f.u.is_zero() ? -1 : 2 * f.u.degree();
  int pv = f.v.is_zero() ? -1 : 2 * f.v.degree() + 3;
  return pu > pv ? f.u.lc() : f.v.lc();
}

QPoly rational_part(const KPoly& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coeffs()) {
    if (!a.is_rational()) throw InvalidArgument("function_with_divisor: multiset is not Galois-stable");
    c.push_back(a.u());
  }
  return QPoly(c);
}

}  // namespace

FFElement function_with_divisor(const WeierstrassCurve& e, const std::vector<QuadPoint>& points) {
  if (points.size() < 2) throw InvalidArgument("function_with_divisor: need at least two points");
  QuadPoint sum = QuadPoint::O();
  for (const auto& p : points) {
    if (!on_curve(e, p)) throw InvalidArgument("function_with_divisor: point not on curve: " + to_string(p));
    sum = add_unchecked(e, sum, p);
  }
  if (!sum.infinity) throw DivisorSumError(sum);

  const KPoly w({QuadExt(e.b()), QuadExt(e.a()), QuadExt(0), QuadExt(1)});
  KElement num{KPoly(QuadExt(1)), {}};
  KPoly den(QuadExt(1));
  QuadPoint s = QuadPoint::O();
  for (const auto& p : points) {
    num = multiply(num, line(e, s, p), w);
    s = add_unchecked(e, s, p);
    den *= vertical(s);
  }
  KElement f{exact_div(num.u, den), num.v.is_zero() ? KPoly() : exact_div(num.v, den)};
  QuadExt lc = leading_coefficient(f);
  QuadExt inv = QuadExt(1) / lc;
  f.u *= inv;
  f.v *= inv;
  return {e, rational_part(f.u), rational_part(f.v)};
}

FFElement function_with_divisor(const WeierstrassCurve& e, const std::vector<RationalPoint>& points) {
  std::vector<QuadPoint> q;
  for (const auto& p : points) q.push_back(to_quad(p));
  return function_with_divisor(e, q);
}

SymPoint SymPoint::normalized(std::vector<Rational> c) {
  if (c.size() < 2) throw InvalidArgument("SymPoint needs at least two coordinates");
  auto it = std::find_if(c.begin(), c.end(), [](const Rational& r) { return sgn(r) != 0; });
  if (it == c.end()) throw InvalidArgument("SymPoint: all coordinates are zero");
  Rational inv = 1 / *it;
  for (auto& r : c) r *= inv;
  return SymPoint{std::move(c)};
}

SymPoint symmetrize(const WeierstrassCurve& e, const std::vector<QuadPoint>& points) {
  FFElement f = function_with_divisor(e, points);
  return SymPoint::normalized(rr_coordinates(f, static_cast<int>(points.size())));
}

SymPoint symmetrize(const WeierstrassCurve& e, const std::vector<RationalPoint>& points) {
  std::vector<QuadPoint> q;
  for (const auto& p : points) q.push_back(to_quad(p));
  return symmetrize(e, q);
}

FFElement function_of(const WeierstrassCurve& e, const SymPoint& s) { return from_rr_coordinates(e, s.coords); }

}  // namespace ecrank
