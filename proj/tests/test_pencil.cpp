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
#include "ecrank/pencil/construction.hpp"
#include "oracles/pencil_oracle.hpp"

using namespace ecrank;

namespace {

WeierstrassCurve curve(long a, long b) { return WeierstrassCurve(Rational(a), Rational(b)); }
RationalPoint pt(const Rational& x, const Rational& y) { return RationalPoint::affine(x, y); }

QuadraticForm diag(std::vector<long> d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return QuadraticForm(m);
}

QuadraticForm from_rows(const std::vector<std::vector<long>>& rows) {
  QMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return QuadraticForm(m);
}

Eigen::MatrixXd to_eigen(const QuadraticForm& q) {
  Eigen::MatrixXd m(q.dim(), q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j) m(i, j) = q.matrix()(i, j).get_d();
  return m;
}

QMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> c(lo, hi);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = c(rng);
  return m;
}

// X^T diag(d) X with X random integer of full rank.
QuadraticForm congruent(const QMatrix& x, const std::vector<long>& d) {
  QMatrix dm(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) dm(i, i) = d[i];
  return QuadraticForm(x.transpose() * dm * x);
}

QMatrix invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-2, 2);
  while (true) {
    QMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = c(rng);
    if (sgn(x.det()) != 0) return x;
  }
}

// Brute-force reference for isotropic_search: every vector in the box.
std::optional<std::vector<Integer>> brute_force(const QuadraticForm& f1, const QuadraticForm& f2, int bound,
                                                const std::vector<std::vector<Rational>>& excluded) {
  const std::size_t d = f1.dim();
  std::vector<Integer> v(d, -bound);
  std::optional<std::vector<Integer>> best;
  auto key = [](const std::vector<Integer>& x) {
    std::vector<long> k;
    long norm = 0;
    for (const auto& c : x) norm = std::max(norm, std::abs(c.get_si()));
    k.push_back(norm);
    for (const auto& c : x) {
      k.push_back(std::abs(c.get_si()));
      k.push_back(c < 0 ? 1 : 0);
    }
    return k;
  };
  while (true) {
    Integer g = 0;
    for (const auto& c : v) g = gcd(g, c);
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& c) { return c != 0; });
    bool ok = g == 1 && first != v.end() && *first > 0 && sgn(f1(v)) == 0 && sgn(f2(v)) == 0;
    for (const auto& l : excluded) {
      Rational s = 0;
      for (std::size_t i = 0; i < d; ++i) s += l[i] * v[i];
      if (sgn(s) == 0) ok = false;
    }
    if (ok && (!best || key(v) < key(*best))) best = v;
    std::size_t k = 0;
    while (k < d && v[k] == bound) v[k++] = -bound;
    if (k == d) break;
    v[k] += 1;
  }
  return best;
}

}  // namespace

TEST_CASE("exactness functionals") {
  auto e = curve(0, 17);
  for (int n = 4; n <= 16; n += 2) {
    auto phi = exactness_functionals(e, n);
    REQUIRE(phi.size() == 2);
    // not both zero on the constant 1 (which would need a simple pole)
    auto one = rr_coordinates(FFElement::constant(e, 1), n + 1);
    Rational s0 = 0, s1 = 0;
    for (int i = 0; i <= n; ++i) {
      s0 += phi[0][i] * one[i];
      s1 += phi[1][i] * one[i];
    }
    CHECK((sgn(s0) != 0 || sgn(s1) != 0));
    auto two_y = rr_coordinates(ff_derivative(FFElement::x(e)), n + 1);
    for (const auto& f : phi) {
      Rational s = 0;
      for (int i = 0; i <= n; ++i) s += f[i] * two_y[i];
      CHECK(sgn(s) == 0);
    }
  }
  CHECK_THROWS_AS(exactness_functionals(e, 5), InvalidArgument);
}

TEST_CASE("exactness functionals vanish on derivatives") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coef(-20, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 4 + 2 * static_cast<int>(rng() % 7);
    auto e = curve(coef(rng), coef(rng) == 0 ? 1 : 7);
    std::vector<Rational> c(n);
    for (auto& r : c) r = make_rational(coef(rng), 1 + rng() % 5);
    auto f = from_rr_coordinates(e, c);
    if (f.is_zero()) continue;
    auto phi = exactness_functionals(e, n);
    auto d = rr_coordinates(ff_derivative(f), n + 1);
    for (const auto& l : phi) {
      Rational s = 0;
      for (int i = 0; i <= n; ++i) s += l[i] * d[i];
      CHECK(sgn(s) == 0);
    }
  }
}

TEST_CASE("pencil system layout") {
  auto e = curve(0, 17);
  auto p = pt(2, 5);
  auto s8 = build_pencil(e, p, 8);
  CHECK(s8.pencil_case == PencilCase::I);
  CHECK(s8.forms[0].dim() == 3);
  CHECK(s8.variables == std::vector<std::string>{"a0", "a1", "t"});
  auto s10 = build_pencil(e, p, 10);
  CHECK(s10.pencil_case == PencilCase::II);
  CHECK(s10.forms[1].dim() == 4);
  CHECK(s10.variables == std::vector<std::string>{"a0", "a1", "b0", "t"});
  CHECK(build_pencil(e, p, 16).variables == std::vector<std::string>{"a0", "a1", "a2", "a3", "b0", "b1", "t"});
  for (int n = 8; n <= 18; n += 2) {
    auto s = build_pencil(e, p, n);
    CHECK(s.forms[0].dim() == static_cast<std::size_t>((n - 4) / 2 + 1));
    CHECK(s.forms[0].matrix().is_symmetric());
    CHECK(s.forms[1].matrix().is_symmetric());
  }
  // tangent line divisor 2(P) + (-2P) - 3(O)
  CHECK(order_at(s8.l, p) == 2);
  CHECK(order_at(s8.l, negate(scalar_mul(e, p, 2))) == 1);

  CHECK_THROWS_AS(build_pencil(e, p, 6), InvalidArgument);
  CHECK_THROWS_AS(build_pencil(curve(-1, 0), pt(1, 0), 8), InvalidArgument);  // 2P = O
  // (3,8) has order 7 on y^2 = x^3 - 43x + 166; (0, 2) has order 3 on y^2 = x^3 + 4
  CHECK_THROWS_AS(build_pencil(curve(0, 4), pt(0, 2), 8), InvalidArgument);
}

TEST_CASE("forms evaluate the exactness conditions on l h^2") {
  auto e = curve(0, 17);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int n : {8, 10, 12}) {
    auto sys = build_pencil(e, pt(2, 5), n);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rational> v(sys.monomials.size());
      for (auto& r : v) r = make_rational(coef(rng), 1 + rng() % 4);
      auto c = rr_coordinates(sys.l * sys.h_of(v) * sys.h_of(v), n + 1);
      for (int f = 0; f < 2; ++f) {
        Rational s = 0;
        for (int i = 0; i <= n; ++i) s += sys.functionals[f][i] * c[i];
        CHECK(sys.forms[f](v) == s);
        Rational t = make_rational(coef(rng), 7);
        std::vector<Rational> tv;
        for (const auto& r : v) tv.push_back(t * r);
        CHECK(sys.forms[f](tv) == t * t * sys.forms[f](v));
      }
    }
  }
}

TEST_CASE("pencil minimum rank examples") {
  auto q = from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  auto r3 = diag({1, 2, 3});
  // r A + s A vanishes at r = -s
  CHECK(pencil_min_rank(r3, r3) == 0);
  // A + tB = diag(1, 1+t, 1+t, t): rank 2 at t = -1
  auto pr = pencil_rank(diag({1, 1, 1, 0}), diag({0, 1, 1, 1}));
  CHECK(pr.min_rank == 2);
  CHECK(pr.generic_rank == 4);
  CHECK(pr.rank_at_infinity == 3);
  CHECK(pr.drops.size() == 2);
  CHECK(pencil_min_rank(q, diag({0, 0, 1})) == 1);
  // singular pencil: common kernel vector, generic rank 2
  auto s = pencil_rank(diag({1, 1, 0}), diag({1, -1, 0}));
  CHECK(s.generic_rank == 2);
  CHECK(s.min_rank == 1);
  CHECK(pencil_min_rank(diag({0, 0}), diag({0, 0})) == 0);
  // det(A + tB) = 2t^2 - 4: rank 1 at t = +-sqrt 2
  auto irr = pencil_rank(from_rows({{0, 2}, {2, 0}}), diag({1, 2}));
  CHECK(irr.min_rank == 1);
  REQUIRE(irr.drops.size() == 1);
  CHECK(irr.drops[0].first == QPoly({Rational(-2), Rational(0), Rational(1)}));
}

TEST_CASE("pencil minimum rank against the numeric oracle") {
  std::mt19937_64 rng(31);
  int flagged = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 7;
    QuadraticForm a, b;
    if (trial % 3 == 0) {
      a = QuadraticForm(random_symmetric(rng, n, -5, 5));
      b = QuadraticForm(random_symmetric(rng, n, -5, 5));
    } else {
      // shared congruence with a repeated ratio: a rank drop of several at t = -1
      QMatrix x = invertible(rng, n);
      std::vector<long> d1(n), d2(n);
      std::uniform_int_distribution<int> c(1, 4);
      std::size_t keep = trial % 3 == 1 ? 2 : 1 + rng() % n;
      for (std::size_t i = 0; i < n; ++i) {
        d2[i] = c(rng);
        d1[i] = i < n - keep ? d2[i] : c(rng) * (rng() % 2 ? 1 : -1);
      }
      a = congruent(x, d1);
      b = congruent(x, d2);
    }
    auto exact = pencil_rank(a, b);
    int numeric = oracle::pencil_min_rank(to_eigen(a), to_eigen(b));
    CHECK(static_cast<int>(exact.min_rank) == numeric);
    CHECK(exact.min_rank <= a.rank());
    CHECK(exact.min_rank <= b.rank());
    if (exact.min_rank <= 2 && n >= 5) ++flagged;
  }
  CHECK(flagged > 0);
}

TEST_CASE("isotropic search examples") {
  QMatrix m(3, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 2) = -1;
  QuadraticForm pyth(m);
  // without exclusions the least zero is (0, 1, 1)
  auto r0 = isotropic_search(pyth, pyth, 5);
  REQUIRE(r0.found);
  CHECK(r0.vector == std::vector<Integer>{0, 1, 1});
  std::vector<std::vector<Rational>> axes{{Rational(1), Rational(0), Rational(0)},
                                          {Rational(0), Rational(1), Rational(0)}};
  auto r = isotropic_search(pyth, pyth, 5, axes);
  REQUIRE(r.found);
  CHECK(r.vector == std::vector<Integer>{3, 4, 5});
  CHECK(!isotropic_search(pyth, pyth, 4, axes).found);

  auto definite = diag({1, 1, 1});
  auto none = isotropic_search(definite, definite, 20);
  CHECK(!none.found);
  CHECK(none.prefixes_examined == 41 * 41);
  CHECK(none.certificate.find("<= 20") != std::string::npos);
  CHECK_THROWS_AS(isotropic_search(definite, diag({1, 1}), 3), InvalidArgument);
}

TEST_CASE("isotropic search agrees with brute force") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> small(-2, 2);
  int hits = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t d = 2 + trial % 3;
    // forms vanishing at a chosen vector v0
    std::vector<Rational> v0(d);
    for (auto& c : v0) c = small(rng);
    v0[d - 1] = 1;
    QuadraticForm f[2];
    for (auto& q : f) {
      QMatrix m = random_symmetric(rng, d, -3, 3);
      Rational s = QuadraticForm(m)(v0);
      m(d - 1, d - 1) -= s;
      q = QuadraticForm(m);
    }
    std::vector<std::vector<Rational>> excluded;
    if (trial % 2) excluded.push_back(std::vector<Rational>(d, Rational(1)));
    auto got = isotropic_search(f[0], f[1], 4, excluded);
    auto want = brute_force(f[0], f[1], 4, excluded);
    CHECK(got.found == want.has_value());
    if (got.found && want) {
      CHECK(got.vector == *want);
      CHECK(sgn(f[0](got.vector)) == 0);
      CHECK(sgn(f[1](got.vector)) == 0);
      ++hits;
    }
  }
  CHECK(hits > 10);
}

TEST_CASE("pencil search on y^2 = x^3 + 17 at P = (2, 5)") {
  // Frozen outcome: no common zero of max-norm <= 50 off the two hyperplanes.
  auto sys = build_pencil(curve(0, 17), pt(2, 5), 8);
  auto r = isotropic_search(sys.forms[0], sys.forms[1], 50, sys.excluded_hyperplanes());
  CHECK(!r.found);
  CHECK(r.prefixes_examined == 101 * 101);
  auto pr = pencil_rank(sys.forms[0], sys.forms[1]);
  CHECK(pr.generic_rank == 3);
  CHECK(pr.min_rank == 2);
}

TEST_CASE("verify_construction rejections") {
  auto e = curve(0, 17);
  auto sys = build_pencil(e, pt(2, 5), 8);
  CHECK_THROWS_AS(verify_construction(sys, {1, 2, 0}), InvalidArgument);
  CHECK_THROWS_AS(verify_construction(sys, {1, 2}), InvalidArgument);
  // h = a0 + a1 x + y with h(-2P) = 0
  auto q = negate(scalar_mul(e, pt(2, 5), 2));
  Rational a0 = -q.y;
  auto hv = std::vector<Rational>{a0, Rational(0), Rational(1)};
  REQUIRE(sgn(sys.h_of(hv).eval(q)) == 0);
  std::vector<Integer> iv{a0.get_num() * 1, 0, a0.get_den()};
  CHECK_THROWS_AS(verify_construction(sys, iv), InvalidArgument);
  try {
    verify_construction(sys, {1, 1, 1});
    FAIL("expected identity failure");
  } catch (const VerificationError& err) {
    CHECK(err.layer() == "identity");
  }
}

TEST_CASE("genus of the double cover") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> coef(-30, 30);
  int done = 0;
  while (done < 10) {
    long a = coef(rng), b = coef(rng);
    if (4 * a * a * a + 27 * b * b == 0) continue;
    auto e = curve(a, b);
    auto g = genus_of_preimage(FFElement::x(e));
    CHECK(g.genus == 1);
    CHECK(g.odd_points == 4);
    CHECK(g.branch_polynomial == e.rhs(QPoly::x()));
    CHECK(g.branch_polynomial.degree() == 3);  // sum of (m - 1) over the fibers
    ++done;
  }
  auto e = curve(-2, 5);
  for (const auto& f : {FFElement::y(e), FFElement::x(e) * FFElement::y(e) + FFElement::x(e)}) {
    auto g = genus_of_preimage(f);
    CHECK(g.odd_points % 2 == 0);
    CHECK(g.branch_polynomial.degree() == f.pole_order() + 1);
  }
  CHECK(double_cover_genus(2) == 0);
  CHECK_THROWS_AS(double_cover_genus(3), InvalidArgument);
  CHECK_THROWS_AS(genus_of_preimage(FFElement::constant(e, 1)), InvalidArgument);
}

TEST_CASE("pencil solution on y^2 = x^3 - x + 1 at P = (1, 1), n = 12") {
  auto e = curve(-1, 1);
  auto p = pt(1, 1);
  auto sys = build_pencil(e, p, 12);
  auto r = isotropic_search(sys.forms[0], sys.forms[1], 10, sys.excluded_hyperplanes());
  REQUIRE(r.found);
  CHECK(r.vector == std::vector<Integer>{10, -9, -1, -5, 9});
  std::vector<Rational> v(r.vector.begin(), r.vector.end());
  CHECK(sgn(sys.forms[0](v)) == 0);
  CHECK(sgn(sys.forms[1](v)) == 0);

  auto rep = verify_construction(sys, r.vector);
  CHECK(ff_derivative(rep.f) == sys.l * rep.h * rep.h);
  CHECK(rep.f.pole_order() == 12);
  CHECK(sgn(rep.f.u().coeff(0)) == 0);
  auto q = negate(scalar_mul(e, p, 2));
  CHECK(rep.f.eval(q) == rep.lambda_p);
  CHECK(rep.divisor_shape == std::vector<long>{2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(rep.genus.genus == 0);
  CHECK(rep.genus.branch_polynomial.degree() == 13);
}
