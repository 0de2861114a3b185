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

#include <random>

#include "doctest.h"
#include "ecrank/arith/bigfloat.hpp"
#include "ecrank/arith/linalg.hpp"
#include "ecrank/arith/poly.hpp"
#include "ecrank/arith/quadext.hpp"
#include "ecrank/arith/roots.hpp"
#include "ecrank/arith/square_class.hpp"

using namespace ecrank;

namespace {

QPoly qp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

SquareClass sc(long n) { return SquareClass::of(Integer(n)); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(to_string(make_rational(-9, 6)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidArgument);
}

TEST_CASE("integer factorization") {
  auto f = factor_integer(Integer(360));
  CHECK(f.size() == 3);
  CHECK(f[Integer(2)] == 3);
  CHECK(f[Integer(3)] == 2);
  CHECK(f[Integer(5)] == 1);
  Integer big = Integer("1000000007") * Integer("998244353") * Integer(17);
  auto g = factor_integer(big);
  CHECK(g.size() == 3);
  CHECK(g[Integer("1000000007")] == 1);
  CHECK(positive_divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("squarefree kernel examples") {
  CHECK(squarefree_kernel(Integer(12)).kernel() == 3);
  CHECK(squarefree_kernel(Integer(1)).kernel() == 1);
  CHECK(squarefree_kernel(Integer(50)).kernel() == 2);
  CHECK(squarefree_kernel(Integer(-18)).kernel() == -2);
  CHECK_THROWS_AS(squarefree_kernel(Integer(0)), InvalidArgument);
}

TEST_CASE("n / kernel(n) is a perfect square for |n| <= 10^4") {
  for (long n = -10000; n <= 10000; ++n) {
    if (n == 0) continue;
    SquareClass c = squarefree_kernel(Integer(n));
    Integer q = Integer(n) / c.kernel();
    REQUIRE(Integer(n) % c.kernel() == 0);
    REQUIRE(is_perfect_square(q));
    Integer prod = c.negative() ? Integer(-1) : Integer(1);
    for (const auto& p : c.primes()) prod *= p;
    REQUIRE(prod == c.kernel());
  }
}

TEST_CASE("square class extension examples") {
  std::vector<SquareClass> basis{sc(3), sc(10)};
  CHECK_FALSE(square_class_extend(basis, sc(30)).has_value());
  auto ext = square_class_extend(basis, sc(29));
  REQUIRE(ext.has_value());
  CHECK(ext->size() == 3);
  CHECK_FALSE(square_class_extend({}, sc(1)).has_value());
  CHECK_FALSE(square_class_extend(basis, sc(3 * 4)).has_value());
  CHECK(square_class_extend(basis, sc(-3)).has_value());
}

TEST_CASE("square class acceptance does not depend on basis order") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-300, 300);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SquareClass> basis;
    SquareClassBasis b;
    while (basis.size() < 4) {
      long v = dist(rng);
      if (v == 0) continue;
      if (b.try_extend(sc(v))) basis.push_back(sc(v));
    }
    long cand = dist(rng);
    if (cand == 0) continue;
    bool expected = square_class_extend(basis, sc(cand)).has_value();
    auto perm = basis;
    std::sort(perm.begin(), perm.end(), [](const SquareClass& x, const SquareClass& y) { return x.kernel() < y.kernel(); });
    do {
      REQUIRE(square_class_extend(perm, sc(cand)).has_value() == expected);
    } while (std::next_permutation(perm.begin(), perm.end(), [](const SquareClass& x, const SquareClass& y) {
      return x.kernel() < y.kernel();
    }));
  }
}

TEST_CASE("QuadExt arithmetic") {
  QuadExt a(Integer(5), 1, 2);
  QuadExt b(Integer(5), Rational(1, 3), -1);
  CHECK((a * a.inverse()) == QuadExt(1));
  CHECK((a + b).u() == Rational(4, 3));
  CHECK(a.conj().v() == -2);
  CHECK(a.norm() == 1 - 5 * 4);
  CHECK((QuadExt(3) + a).d() == 5);
  CHECK_THROWS_AS(QuadExt(Integer(4), 1, 1), InvalidArgument);
  CHECK_THROWS_AS(QuadExt(Integer(1), 1, 1), InvalidArgument);
  CHECK_THROWS_AS(QuadExt(Integer(0), 1, 1), InvalidArgument);
  CHECK_THROWS_AS(a + QuadExt(Integer(7), 0, 1), InvalidArgument);
}

TEST_CASE("QuadExt norm is multiplicative on 10^3 random pairs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 50);
  const long ds[] = {-7, -1, 2, 3, 5, 6, 857, -15};
  for (int i = 0; i < 1000; ++i) {
    Integer d(ds[i % 8]);
    QuadExt x(d, make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    QuadExt y(d, make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    REQUIRE((x * y).norm() == x.norm() * y.norm());
    REQUIRE((x * x.conj()).is_rational());
  }
}

TEST_CASE("polynomial gcd, division and Yun decomposition") {
  QPoly a = qp({-1, 0, 1});  // x^2 - 1
  QPoly b = qp({1, 1});      // x + 1
  CHECK(gcd(a, b) == b);
  auto [q, r] = divmod(a, b);
  CHECK(q == qp({-1, 1}));
  CHECK(r.is_zero());
  // (x-1)^3 (x+2)^2 x
  QPoly p = qp({-1, 1}).pow(3) * qp({2, 1}).pow(2) * qp({0, 1});
  auto parts = yun_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == qp({0, 1}));
  CHECK(parts[1] == qp({2, 1}));
  CHECK(parts[2] == qp({-1, 1}));
  auto [g, s, t] = xgcd(qp({-2, 0, 1}), qp({1, 1}));
  CHECK(g == QPoly(Rational(1)));
  CHECK(s * qp({-2, 0, 1}) + t * qp({1, 1}) == g);
}

TEST_CASE("gcd-free basis") {
  QPoly f1 = qp({-1, 0, 1});             // (x-1)(x+1)
  QPoly f2 = qp({-1, 1}) * qp({-2, 1});  // (x-1)(x-2)
  auto basis = gcd_free_basis({f1, f2});
  CHECK(basis.size() == 3);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(gcd(basis[i], basis[j]).degree() == 0);
}

TEST_CASE("Sturm counts and resultants") {
  QPoly p = qp({2, 0, 0, 1});  // x^3 + 2, one real root
  CHECK(real_root_count(p) == 1);
  CHECK(real_root_count(qp({-1, 0, 1})) == 2);
  CHECK(sturm_count_above(sturm_sequence(qp({-1, 0, 1})), Rational(0)) == 1);
  // res(x^2 - 2, x - 3) = 7 up to sign convention
  CHECK(resultant(qp({-2, 0, 1}), qp({-3, 1})) == 7);
  CHECK(resultant(qp({-2, 0, 1}), qp({-2, 0, 1})) == 0);
  CHECK(rational_roots(qp({-6, 1, 1})) == std::vector<Rational>{-3, 2});
}

TEST_CASE("certified root isolation") {
  QPoly p = qp({-2, 0, 0, 1});  // x^3 - 2
  auto roots = isolate_roots(p, 128);
  REQUIRE(roots.size() == 3);
  int nreal = 0;
  for (const auto& r : roots) {
    if (r.real) ++nreal;
    CHECK(abs(eval_complex(p, r.z)) < BigFloat(1e-30, 128));
    CHECK(r.radius < BigFloat(1e-30, 128));
  }
  CHECK(nreal == 1);
  // Close roots: (x - 1)(x - 1 - 10^-20)
  QPoly close = QPoly({Rational(1), Rational(-1)}) * QPoly({-(1 + Rational(1, Integer("100000000000000000000"))), Rational(1)});
  CHECK(isolate_roots(close, 128).size() == 2);
  auto mult = isolate_roots_with_multiplicity(qp({-1, 1}).pow(3) * qp({1, 0, 1}), 128);
  unsigned total = 0;
  for (const auto& r : mult) total += r.multiplicity;
  CHECK(total == 5);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(qp({-2, 0, 1})));
  CHECK_FALSE(is_irreducible(qp({-4, 0, 1})));
  CHECK(is_irreducible(qp({1, 0, 0, 0, 1})));           // x^4 + 1
  CHECK_FALSE(is_irreducible(qp({4, 0, 0, 0, 1})));     // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
  CHECK_FALSE(is_irreducible(qp({1, 0, 1}) * qp({-3, 0, 1})));
  CHECK(is_irreducible(qp({-1, -1, 0, 0, 0, 1})));      // x^5 - x - 1
  CHECK_FALSE(is_irreducible(qp({-2, 0, 1}) * qp({-3, 0, 0, 1})));
}

TEST_CASE("Mahler height examples") {
  const long prec = 128;
  BigFloat log2 = log(BigFloat(2, prec));
  BigFloat log3 = log(BigFloat(3, prec));
  BigFloat tol = pow2(-64, prec);
  CHECK(abs(mahler_height({-2, 1}, 1, prec) - log2) < tol);
  CHECK(abs(mahler_height({-2, 0, 1}, 2, prec) - log2 / BigFloat(2, prec)) < tol);
  CHECK(abs(mahler_height({-3, 2}, 1, prec) - log3) < tol);
  // Golden ratio: h = log(phi) / 2.
  BigFloat phi = (BigFloat(1, prec) + sqrt(BigFloat(5, prec))) / BigFloat(2, prec);
  CHECK(abs(mahler_height({-1, -1, 1}, 2, prec) - log(phi) / BigFloat(2, prec)) < tol);
}

TEST_CASE("Mahler height rejects invalid input") {
  CHECK_THROWS_AS(mahler_height({}, 1), InvalidArgument);
  CHECK_THROWS_AS(mahler_height({0, 0}, 1), InvalidArgument);
  CHECK_THROWS_AS(mahler_height({-4, 0, 1}, 2), InvalidArgument);   // reducible
  CHECK_THROWS_AS(mahler_height({0, -2, 0, 1}, 3), InvalidArgument); // z * (z^2 - 2)
  CHECK_THROWS_AS(mahler_height({-4, 2}, 1), InvalidArgument);       // not primitive
  CHECK_THROWS_AS(mahler_height({-2, 0, 1}, 3), InvalidArgument);    // field degree
}

TEST_CASE("exact linear algebra") {
  QMatrix m(3, 3);
  long vals[3][3] = {{2, 1, 1}, {1, 3, 2}, {1, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(m.det() == -1);
  CHECK(m.rank() == 3);
  auto x = m.solve({4, 5, 6});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == std::vector<Rational>{4, 5, 6});

  QMatrix s(2, 3);
  s(0, 0) = 1; s(0, 1) = 2; s(0, 2) = 3;
  s(1, 0) = 2; s(1, 1) = 4; s(1, 2) = 6;
  CHECK(s.rank() == 1);
  auto ns = s.nullspace();
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(s.apply(v) == std::vector<Rational>{0, 0});
  CHECK(s.left_nullspace().size() == 1);
  CHECK_FALSE(s.solve({1, 1}).has_value());
}

TEST_CASE("characteristic polynomial matches det(tI - M) at sample points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (trial % 3 == 0 && i > j + 1) ? 0 : dist(rng);
    QPoly cp = characteristic_polynomial(m);
    CHECK(cp.degree() == static_cast<int>(n));
    for (long t = -3; t <= 3; ++t) {
      QMatrix shifted = Rational(t) * QMatrix::identity(n) - m;
      CHECK(cp.eval(Rational(t)) == shifted.det());
    }
  }
}
