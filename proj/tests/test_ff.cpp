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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "ecrank/ff/divisor.hpp"
#include "ecrank/ff/element.hpp"
#include "ecrank/ff/miller.hpp"

using namespace ecrank;

namespace {

WeierstrassCurve curve(long a, long b) { return WeierstrassCurve(Rational(a), Rational(b)); }
RationalPoint pt(const Rational& x, const Rational& y) { return RationalPoint::affine(x, y); }
QPoly qp(std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return QPoly(r);
}

QPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg), coef(-9, 9);
  int d = deg(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
  return QPoly(c);
}

// Rational points on y^2 = x^3 + 17 from the generators (-2,3) and (-1,4).
std::vector<RationalPoint> small_points(const WeierstrassCurve& e) {
  RationalPoint p = pt(-2, 3), q = pt(-1, 4);
  std::vector<RationalPoint> out;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      if (i == 0 && j == 0) continue;
      out.push_back(add_points(e, scalar_mul(e, p, i), scalar_mul(e, q, j)));
    }
  return out;
}

double dist(const Complex& z, const Rational& r) {
  double dx = z.re.to_double() - r.get_d();
  return std::hypot(dx, z.im.to_double());
}

// Every input point appears among the zeros with its multiplicity.
void check_roots_match(const std::vector<DivisorEntry>& roots, const std::vector<RationalPoint>& points) {
  long total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  CHECK(total == static_cast<long>(points.size()));
  for (const auto& p : points) {
    long want = std::count(points.begin(), points.end(), p);
    bool found = false;
    for (const auto& r : roots) {
      if (dist(r.place.x, p.x) < 1e-8 && dist(r.place.y, p.y) < 1e-8) {
        CHECK(r.multiplicity == want);
        found = true;
      }
    }
    CHECK_MESSAGE(found, to_string(p));
  }
}

}  // namespace

TEST_CASE("derivation examples") {
  auto e = curve(-3, 5);
  auto x = FFElement::x(e), y = FFElement::y(e);
  CHECK(ff_derivative(x) == FFElement(e, {}, qp({2})));
  CHECK(ff_derivative(y) == FFElement(e, qp({-3, 0, 3})));
  CHECK(ff_derivative(x * x) == FFElement(e, {}, qp({0, 4})));
  CHECK(ff_derivative(FFElement::constant(e, 7)).is_zero());
}

TEST_CASE("derivation is a derivation on random pairs") {
  auto e = curve(2, -7);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    FFElement f(e, random_poly(rng, 4), random_poly(rng, 3));
    FFElement g(e, random_poly(rng, 4), random_poly(rng, 3));
    CHECK(ff_derivative(f * g) == f * ff_derivative(g) + g * ff_derivative(f));
  }
}

TEST_CASE("derivation raises the pole order by one") {
  auto e = curve(-1, 3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int n = 2; n <= 20; ++n) {
    auto basis = rr_basis(e, n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> c(n);
      for (auto& r : c) r = coef(rng);
      c[n - 1] = coef(rng) == 0 ? 1 : c[n - 1];
      if (sgn(c[n - 1]) == 0) c[n - 1] = 1;
      auto f = from_rr_coordinates(e, c);
      CHECK(f.pole_order() == n);
      CHECK(ff_derivative(f).pole_order() == n + 1);
    }
  }
}

TEST_CASE("Riemann-Roch basis") {
  auto e = curve(0, 1);
  auto b = rr_basis(e, 5);
  REQUIRE(b.size() == 5);
  auto x = FFElement::x(e), y = FFElement::y(e);
  CHECK(b[0] == FFElement::constant(e, 1));
  CHECK(b[1] == x);
  CHECK(b[2] == y);
  CHECK(b[3] == x * x);
  CHECK(b[4] == x * y);
  CHECK(rr_basis(e, 2).size() == 2);
  CHECK_THROWS_AS(rr_basis(e, 1), InvalidArgument);
  for (int n = 2; n <= 30; ++n) {
    auto bn = rr_basis(e, n);
    CHECK(bn.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) CHECK(bn[i].pole_order() == rr_pole_order(i));
    CHECK(bn.back().pole_order() == n);
  }
}

TEST_CASE("function with prescribed divisor") {
  auto e = curve(0, 17);
  auto x = FFElement::x(e), y = FFElement::y(e);
  RationalPoint p = pt(2, 5);

  CHECK(function_with_divisor(e, std::vector{p, negate(p)}) == x - FFElement::constant(e, 2));

  auto e2 = curve(-1, 0);
  CHECK(function_with_divisor(e2, std::vector{pt(0, 0), pt(1, 0), pt(-1, 0)}) == y);

  // tangent at (2,5): slope 3*4/10 = 6/5
  auto l = function_with_divisor(e, std::vector{p, p, negate(scalar_mul(e, p, 2))});
  CHECK(l == y - Rational(6, 5) * x + FFElement::constant(e, Rational(12, 5) - 5));

  // {(-1,4), two conjugate points over Q(sqrt 101)} on the line y = 2x + 6
  QuadExt r(101, Rational(5, 2), Rational(1, 2)), s(101, Rational(5, 2), Rational(-1, 2));
  std::vector<QuadPoint> qs{to_quad(pt(-1, 4)), QuadPoint::affine(r, QuadExt(2) * r + QuadExt(6)),
                            QuadPoint::affine(s, QuadExt(2) * s + QuadExt(6))};
  CHECK(function_with_divisor(e, qs) == y - Rational(2) * x - FFElement::constant(e, 6));

  try {
    function_with_divisor(e, std::vector{p, pt(-2, 3)});
    FAIL("expected rejection");
  } catch (const DivisorSumError& err) {
    CHECK(err.defect() == to_quad(add_points(e, p, pt(-2, 3))));
  }
  CHECK_THROWS_AS(function_with_divisor(e, std::vector{p}), InvalidArgument);
}

TEST_CASE("divisor examples") {
  auto e = curve(0, 17);
  auto dx = divisor_of(FFElement::x(e));
  CHECK(dx.degree() == 0);
  CHECK(dx.zero_multiplicities() == std::vector<long>{1, 1});
  for (const auto& en : dx.entries) {
    if (en.place.infinity) {
      CHECK(en.multiplicity == -2);
    } else {
      REQUIRE(en.place.exact.has_value());
      CHECK(en.place.exact->x == QuadExt(0));
      CHECK(en.place.exact->y * en.place.exact->y == QuadExt(17));
    }
  }
  auto dy = divisor_of(FFElement::y(curve(-1, 0)));
  CHECK(dy.zero_multiplicities() == std::vector<long>{1, 1, 1});
  CHECK(dy.degree() == 0);
  CHECK(divisor_of(FFElement::constant(e, 3)).entries.empty());

  // y - 2x - 6 meets E at (-1,4) and at x = (5 +- sqrt 101)/2
  auto line = divisor_of(FFElement::y(e) - Rational(2) * FFElement::x(e) - FFElement::constant(e, 6));
  int quadratic = 0;
  for (const auto& en : line.entries) {
    if (en.place.infinity) continue;
    REQUIRE(en.place.exact.has_value());
    CHECK(on_curve(e, *en.place.exact));
    if (!en.place.exact->x.is_rational()) {
      CHECK(en.place.exact->x.d() == 101);
      ++quadratic;
    }
  }
  CHECK(quadratic == 2);
  CHECK_THROWS_AS(divisor_of(FFElement(e)), InvalidArgument);
}

TEST_CASE("fibers of x") {
  auto e = curve(0, 17);
  auto x = FFElement::x(e);
  check_roots_match(fiber_roots(x, 2), {pt(2, 5), pt(2, -5)});

  auto e2 = curve(-1, 0);
  auto r = fiber_roots(FFElement::x(e2), 1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].multiplicity == 2);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-200, 200), den(1, 13);
  auto f = from_rr_coordinates(e, {Rational(1), Rational(-2), Rational(3), Rational(1), Rational(0), Rational(1)});
  for (int i = 0; i < 100; ++i) {
    Rational lambda = make_rational(num(rng), den(rng));
    long total = 0;
    for (const auto& en : fiber_roots(f, lambda)) total += en.multiplicity;
    CHECK(total == 6);
  }
}

TEST_CASE("divisor roundtrip of constructed functions") {
  auto e = curve(0, 17);
  auto pool = small_points(e);
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<RationalPoint> pts;
      RationalPoint sum = RationalPoint::O();
      for (int i = 0; i + 1 < n; ++i) {
        pts.push_back(pool[rng() % pool.size()]);
        sum = add_points(e, sum, pts.back());
      }
      if (sum.infinity) continue;  // last point would be O
      pts.push_back(negate(sum));
      auto f = function_with_divisor(e, pts);
      CHECK(f.pole_order() == n);
      check_roots_match(fiber_roots(f, 0), pts);
      auto d = divisor_of(f);
      CHECK(d.degree() == 0);
      for (const auto& en : d.entries) {
        if (en.place.infinity) continue;
        REQUIRE(en.place.exact.has_value());
        auto rp = to_rational(*en.place.exact);
        REQUIRE(rp.has_value());
        CHECK(en.multiplicity == std::count(pts.begin(), pts.end(), *rp));
        CHECK(order_at(f, *rp) == en.multiplicity);
      }
    }
  }
}

TEST_CASE("symmetrization examples") {
  auto e = curve(0, 17);
  RationalPoint p = pt(8, 23);
  auto s = symmetrize(e, std::vector{p, negate(p)});
  // (-x_P : 1) with the first coordinate scaled to 1
  CHECK(s == SymPoint{{Rational(1), Rational(-1, 8)}});
  CHECK(SymPoint::normalized({Rational(0), Rational(4), Rational(2)}) ==
        SymPoint{{Rational(0), Rational(1), Rational(1, 2)}});
  CHECK_THROWS_AS(SymPoint::normalized({Rational(0), Rational(0)}), InvalidArgument);
  auto f = function_of(e, s);
  CHECK(f == Rational(-1, 8) * (FFElement::x(e) - FFElement::constant(e, 8)));
}

TEST_CASE("symmetrization is invariant under permutations") {
  auto e = curve(0, 17);
  auto pool = small_points(e);
  std::mt19937_64 rng(23);
  std::map<std::vector<std::string>, std::vector<Rational>> seen;
  for (int n = 2; n <= 8; ++n) {
    int done = 0;
    while (done < 2) {
      std::vector<RationalPoint> pts;
      RationalPoint sum = RationalPoint::O();
      for (int i = 0; i + 1 < n; ++i) {
        pts.push_back(pool[rng() % pool.size()]);
        sum = add_points(e, sum, pts.back());
      }
      if (sum.infinity) continue;
      pts.push_back(negate(sum));
      ++done;
      auto base = symmetrize(e, pts);
      std::vector<std::string> key;
      for (const auto& q : pts) key.push_back(to_string(q));
      std::sort(key.begin(), key.end());
      if (auto it = seen.find(key); it != seen.end()) CHECK(it->second == base.coords);
      for (const auto& [k, c] : seen) {
        if (k != key) CHECK(c != base.coords);
      }
      seen[key] = base.coords;

      std::vector<int> idx(n);
      for (int i = 0; i < n; ++i) idx[i] = i;
      auto apply = [&] {
        std::vector<RationalPoint> q;
        for (int i : idx) q.push_back(pts[i]);
        return q;
      };
      if (n <= 5) {
        do {
          CHECK(symmetrize(e, apply()) == base);
        } while (std::next_permutation(idx.begin(), idx.end()));
      } else {
        for (int t = 0; t < 100; ++t) {
          std::shuffle(idx.begin(), idx.end(), rng);
          CHECK(symmetrize(e, apply()) == base);
        }
      }
    }
  }
}
