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

#include "ecrank/ff/divisor.hpp"

#include <algorithm>

#include "ecrank/arith/roots.hpp"
#include "ecrank/arith/square_class.hpp"

namespace ecrank {

long Divisor::degree() const {
  long d = 0;
  for (const auto& e : entries) d += e.multiplicity;
  return d;
}

std::vector<long> Divisor::zero_multiplicities() const {
  std::vector<long> m;
  for (const auto& e : entries)
    if (!e.place.infinity && e.multiplicity > 0) m.push_back(e.multiplicity);
  std::sort(m.rbegin(), m.rend());
  return m;
}

namespace {

// y with y^2 = t for rational t, exact in Q or Q(sqrt d).
QuadExt exact_sqrt(const Rational& t) {
  if (sgn(t) == 0) return QuadExt(0);
  if (auto r = rational_sqrt(t)) return QuadExt(*r);
  SquareClass c = SquareClass::of(t);
  Rational d(c.kernel());
  return QuadExt(c.kernel(), 0, *rational_sqrt(t / d));
}

Complex to_complex(const QuadExt& q, long prec) {
  if (q.is_rational()) return Complex(q.u(), prec);
  BigFloat u(q.u(), prec), v(q.v(), prec);
  BigFloat r = sqrt(abs(BigFloat(q.d(), prec)));
  if (sgn(q.d()) > 0) return Complex(u + v * r, BigFloat(prec));
  return Complex(u, v * r);
}

Place exact_place(const QuadExt& x, const QuadExt& y, long prec) {
  Place p;
  p.x = to_complex(x, prec);
  p.y = to_complex(y, prec);
  p.x_radius = BigFloat(prec);
  p.exact = QuadPoint::affine(x, y);
  return p;
}

Place numeric_place(const IsolatedRoot& r, const Complex& y) {
  Place p;
  p.x = r.z;
  p.y = y;
  p.x_radius = r.radius;
  return p;
}

}  // namespace

Divisor divisor_of(const FFElement& f, long prec) {
  if (f.is_zero()) throw InvalidArgument("divisor_of: zero function");
  Divisor div;
  if (f.is_constant()) return div;
  const QPoly w = f.w();
  QPoly c = f.v().is_zero() ? f.u().monic() : (f.u().is_zero() ? f.v().monic() : gcd(f.u(), f.v()));
  QPoly up = f.u().is_zero() ? QPoly() : exact_div(f.u(), c);
  QPoly vp = f.v().is_zero() ? QPoly() : exact_div(f.v(), c);
  QPoly ng = up * up - vp * vp * w;  // norm of u' + v' y, a nonzero polynomial
  auto basis = gcd_free_basis({c, ng, w});

  auto push = [&](Place p, long m) { div.entries.push_back({std::move(p), m}); };

  for (const auto& q : basis) {
    unsigned k = c.degree() > 0 ? multiplicity_of(q, c) : 0;
    unsigned e = ng.degree() > 0 ? multiplicity_of(q, ng) : 0;
    if (k == 0 && e == 0) continue;
    const bool two_torsion = (w % q).is_zero();
    const long on = static_cast<long>(k + e), off = static_cast<long>(k);

    // Exact x in Q or Q(sqrt d).
    auto emit_exact = [&](const QuadExt& X) {
      if (two_torsion) return push(exact_place(X, QuadExt(0), prec), static_cast<long>(2 * k + e));
      if (e > 0) {
        auto conv = [](const Rational& r) { return QuadExt(r); };
        QuadExt y0 = -(up.eval_as(X, conv) / vp.eval_as(X, conv));
        push(exact_place(X, y0, prec), on);
        if (k > 0) push(exact_place(X, -y0, prec), off);
        return;
      }
      if (X.is_rational()) {
        QuadExt y0 = exact_sqrt(w.eval(X.u()));
        push(exact_place(X, y0, prec), off);
        push(exact_place(X, -y0, prec), off);
        return;
      }
      Complex xc = to_complex(X, prec);
      Complex y0 = sqrt(eval_complex(w, xc));
      Place a = exact_place(X, QuadExt(0), prec), b = a;
      a.y = y0;
      b.y = -y0;
      a.exact.reset();
      b.exact.reset();
      push(a, off);
      push(b, off);
    };

    QPoly rest = q;
    for (const auto& x0 : rational_roots(q)) {
      emit_exact(QuadExt(x0));
      rest = exact_div(rest, QPoly({-x0, Rational(1)}));
    }
    if (rest.degree() <= 0) continue;
    if (rest.degree() == 2) {
      // x = (-b +- sqrt(b^2 - 4ac)) / 2a
      const Rational& a2 = rest.coeff(2);
      Rational disc = rest.coeff(1) * rest.coeff(1) - 4 * a2 * rest.coeff(0);
      QuadExt s = exact_sqrt(disc);
      QuadExt half = QuadExt(Rational(1) / (2 * a2));
      emit_exact((QuadExt(-rest.coeff(1)) + s) * half);
      emit_exact((QuadExt(-rest.coeff(1)) - s) * half);
      continue;
    }
    for (const auto& r : isolate_roots(rest, prec)) {
      if (two_torsion) {
        push(numeric_place(r, Complex(prec)), static_cast<long>(2 * k + e));
        continue;
      }
      if (e > 0) {
        Complex y0 = -(eval_complex(up, r.z) / eval_complex(vp, r.z));
        push(numeric_place(r, y0), on);
        if (k > 0) push(numeric_place(r, -y0), off);
      } else {
        Complex y0 = sqrt(eval_complex(w, r.z));
        push(numeric_place(r, y0), off);
        push(numeric_place(r, -y0), off);
      }
    }
  }
  Place o;
  o.infinity = true;
  o.x = Complex(prec);
  o.y = Complex(prec);
  o.x_radius = BigFloat(prec);
  o.exact = QuadPoint::O();
  div.entries.push_back({o, -static_cast<long>(f.pole_order())});
  if (div.degree() != 0) throw VerificationError("divisor", "degree of principal divisor is not zero");
  return div;
}

std::vector<DivisorEntry> fiber_roots(const FFElement& f, const Rational& lambda, long prec) {
  if (f.is_constant()) throw InvalidArgument("fiber_roots: constant function");
  Divisor d = divisor_of(f - FFElement::constant(f.curve(), lambda), prec);
  std::vector<DivisorEntry> out;
  for (auto& e : d.entries)
    if (!e.place.infinity) out.push_back(std::move(e));
  return out;
}

}  // namespace ecrank
