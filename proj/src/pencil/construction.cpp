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

#include "ecrank/pencil/construction.hpp"

#include <algorithm>

#include "ecrank/ff/divisor.hpp"

namespace ecrank {

namespace {

std::vector<Rational> integral_scaling(std::vector<Rational> v) {
  Integer l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (auto& c : v) {
    c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& c : v) c /= g;
  return v;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

FFElement monomial(const WeierstrassCurve& e, int xdeg, bool with_y) {
  QPoly xp = QPoly::monomial(Rational(1), xdeg);
  return with_y ? FFElement(e, {}, xp) : FFElement(e, xp, {});
}

// Columns: coordinates of D(basis_j) in rr_basis(n + 1), j from `first`.
QMatrix derivative_matrix(const WeierstrassCurve& e, int n, int first) {
  auto basis = rr_basis(e, n);
  QMatrix m(n + 1, n - first);
  for (int j = first; j < n; ++j) {
    auto c = rr_coordinates(ff_derivative(basis[j]), n + 1);
    for (int i = 0; i <= n; ++i) m(i, j - first) = c[i];
  }
  return m;
}

std::string term_name(int index) {
  // rr_basis order: 1, x, y, x^2, xy, x^3, x^2 y, ...
  if (index == 0) return "1";
  int pole = index + 1;
  std::string s;
  int xd = pole % 2 == 0 ? pole / 2 : (pole - 3) / 2;
  if (xd > 0) s += xd == 1 ? "x" : "x^" + std::to_string(xd);
  if (pole % 2 != 0) s += "y";
  return s;
}

}  // namespace

std::vector<std::vector<Rational>> exactness_functionals(const WeierstrassCurve& e, int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("exactness_functionals: n must be even and >= 4");
  QMatrix m = derivative_matrix(e, n, 0);
  if (m.rank() != static_cast<std::size_t>(n - 1))
    throw VerificationError("exactness", "D(L(nO)) does not have dimension n - 1");
  auto left = m.left_nullspace();
  if (left.size() != 2) throw VerificationError("exactness", "cokernel is not two-dimensional");
  for (auto& v : left) v = integral_scaling(std::move(v));
  return left;
}

FFElement tangent_line(const WeierstrassCurve& e, const RationalPoint& p) {
  if (p.infinity || !on_curve(e, p)) throw InvalidArgument("tangent_line: need an affine point on the curve");
  if (sgn(p.y) == 0) throw InvalidArgument("tangent_line: tangent at a 2-torsion point is vertical");
  Rational s = (3 * p.x * p.x + e.a()) / (2 * p.y);
  return FFElement(e, QPoly({s * p.x - p.y, -s}), QPoly(Rational(1)));
}

FFElement PencilSystem::h_of(const std::vector<Rational>& v) const {
  if (v.size() != monomials.size()) throw InvalidArgument("coefficient vector has wrong length");
  FFElement h(curve);
  for (std::size_t j = 0; j < v.size(); ++j) h += v[j] * monomials[j];
  return h;
}

std::vector<std::vector<Rational>> PencilSystem::excluded_hyperplanes() const {
  std::vector<Rational> at_infinity(monomials.size(), Rational(0));
  at_infinity.back() = 1;
  RationalPoint q = negate(scalar_mul(curve, p, 2));
  std::vector<Rational> at_q;
  for (const auto& mon : monomials) at_q.push_back(mon.eval(q));
  return {at_infinity, at_q};
}

PencilSystem build_pencil(const WeierstrassCurve& e, const RationalPoint& p, int n) {
  if (n < 8 || n % 2 != 0) throw InvalidArgument("build_pencil: n must be even and >= 8");
  if (p.infinity || !on_curve(e, p)) throw InvalidArgument("build_pencil: P must be an affine point on the curve");
  if (sgn(p.y) == 0) throw InvalidArgument("build_pencil: 2P = O");
  if (scalar_mul(e, p, 3).infinity) throw InvalidArgument("build_pencil: 3P = O");

  PencilSystem sys{e, n, 0, PencilCase::I, p, tangent_line(e, p), {}, {}, {}, {}};
  sys.pencil_case = n % 4 == 0 ? PencilCase::I : PencilCase::II;
  sys.m = sys.pencil_case == PencilCase::I ? n / 4 : (n - 2) / 4;
  const int m = sys.m;
  for (int i = 0; i < m; ++i) {
    sys.monomials.push_back(monomial(e, i, false));
    sys.variables.push_back("a" + std::to_string(i));
  }
  const int b_top = sys.pencil_case == PencilCase::I ? m - 3 : m - 2;
  for (int i = 0; i <= b_top; ++i) {
    sys.monomials.push_back(monomial(e, i, true));
    sys.variables.push_back("b" + std::to_string(i));
  }
  sys.monomials.push_back(sys.pencil_case == PencilCase::I ? monomial(e, m - 2, true) : monomial(e, m, false));
  sys.variables.push_back("t");
  if (sys.monomials.size() != static_cast<std::size_t>((n - 4) / 2 + 1))
    throw VerificationError("pencil", "variable count differs from (n - 4)/2 + 1");

  sys.functionals = exactness_functionals(e, n);
  const std::size_t k = sys.monomials.size();
  QMatrix a[2] = {QMatrix(k, k), QMatrix(k, k)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      auto c = rr_coordinates(sys.l * sys.monomials[i] * sys.monomials[j], n + 1);
      for (int f = 0; f < 2; ++f) a[f](i, j) = a[f](j, i) = dot(sys.functionals[f], c);
    }
  sys.forms[0] = QuadraticForm(a[0]);
  sys.forms[1] = QuadraticForm(a[1]);
  return sys;
}

int double_cover_genus(int branch_points) {
  if (branch_points < 0 || branch_points % 2 != 0) throw InvalidArgument("branch point count must be even");
  return branch_points / 2 - 1;
}

GenusReport genus_of_preimage(const FFElement& f) {
  if (f.is_constant()) throw InvalidArgument("genus_of_preimage: constant function");
  const int n = f.pole_order();
  const FFElement df = ff_derivative(f);
  const QPoly w = f.w();
  const QPoly& g = df.u();
  const QPoly& k = df.v();
  // The ideal (D f) as a Q[x]-lattice in Q[x] + Q[x] y: rows (d, e) and (0, h).
  const QPoly kw = k * w;
  auto [d, s, t] = xgcd(g, kw);
  QPoly norm = g * g - k * kw;
  QPoly h = exact_div(norm, d).monic();
  QPoly e = s * k + t * g;
  const int dd = d.degree(), dh = h.degree();
  if (dh > 0) e = e % h;
  auto reduce = [&](QPoly p, QPoly q) {
    std::vector<Rational> c(dd + std::max(dh, 0), Rational(0));
    auto [quo, rem] = divmod(p, d);
    q -= quo * e;
    if (dh > 0) q = q % h;
    for (int i = 0; i < dd; ++i) c[i] = rem.coeff(i);
    for (int j = 0; j < dh; ++j) c[dd + j] = q.coeff(j);
    return c;
  };
  const std::size_t dim = dd + std::max(dh, 0);
  if (dim != static_cast<std::size_t>(n + 1)) throw VerificationError("genus", "D f does not have n + 1 affine zeros");
  QMatrix mult(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    QPoly p, q;
    if (static_cast<int>(col) < dd)
      p = QPoly::monomial(Rational(1), static_cast<int>(col));
    else
      q = QPoly::monomial(Rational(1), static_cast<int>(col) - dd);
    auto c = reduce(p * f.u() + q * f.v() * w, p * f.v() + q * f.u());
    for (std::size_t row = 0; row < dim; ++row) mult(row, col) = c[row];
  }

  GenusReport rep;
  rep.branch_polynomial = characteristic_polynomial(mult);
  auto yun = yun_decomposition(rep.branch_polynomial);
  for (std::size_t i = 0; i < yun.size(); ++i) {
    if (yun[i].degree() <= 0) continue;
    BranchFactor b{yun[i], static_cast<int>(i + 1)};
    if (b.odd()) rep.odd_points += yun[i].degree();
    rep.branch.push_back(std::move(b));
  }
  rep.pole_contact = n - 1;
  if (rep.pole_contact % 2 != 0) ++rep.odd_points;
  if (rep.odd_points % 2 != 0) throw VerificationError("genus", "odd number of odd-contact points");
  rep.genus = double_cover_genus(rep.odd_points);
  return rep;
}

ConstructionReport verify_construction(const PencilSystem& sys, const std::vector<Integer>& solution) {
  const WeierstrassCurve& e = sys.curve;
  const int n = sys.n;
  if (solution.size() != sys.monomials.size()) throw InvalidArgument("verify_construction: wrong vector length");
  if (solution.back() == 0) throw InvalidArgument("verify_construction: vector lies on the hyperplane at infinity");
  std::vector<Rational> v;
  for (const auto& c : solution) v.push_back(make_rational(c, solution.back()));
  FFElement h = sys.h_of(v);
  const RationalPoint q = negate(scalar_mul(e, sys.p, 2));
  if (sgn(h.eval(q)) == 0) throw InvalidArgument("verify_construction: h(-2P) = 0");

  const FFElement target = sys.l * h * h;
  auto coords = rr_coordinates(target, n + 1);
  auto sol = derivative_matrix(e, n, 1).solve(coords);
  if (!sol) {
    throw VerificationError("identity", "l h^2 is not a derivative: functionals give " +
                                            to_string(dot(sys.functionals[0], coords)) + ", " +
                                            to_string(dot(sys.functionals[1], coords)));
  }
  std::vector<Rational> fc{Rational(0)};
  fc.insert(fc.end(), sol->begin(), sol->end());
  FFElement f = from_rr_coordinates(e, fc);
  auto got = rr_coordinates(ff_derivative(f), n + 1);
  for (int i = 0; i <= n; ++i)
    if (got[i] != coords[i])
      throw VerificationError("identity", "coefficient of " + term_name(i) + " differs: " + to_string(got[i]) +
                                              " vs " + to_string(coords[i]));

  ConstructionReport rep{f, h, f.eval(q), {}, genus_of_preimage(f)};
  Divisor div = divisor_of(f - FFElement::constant(e, rep.lambda_p));
  rep.divisor_shape = div.zero_multiplicities();
  bool double_at_q = false;
  int doubles = 0;
  long total = 0;
  for (const auto& entry : div.entries) {
    if (entry.place.infinity) continue;
    total += entry.multiplicity;
    if (entry.multiplicity == 2) {
      ++doubles;
      if (entry.place.exact && *entry.place.exact == to_quad(q)) double_at_q = true;
    } else if (entry.multiplicity % 2 == 0) {
      throw VerificationError("divisor shape", "zero of even order " + std::to_string(entry.multiplicity));
    }
  }
  if (!double_at_q) throw VerificationError("divisor shape", "no double zero at -2P");
  if (doubles != 1) throw VerificationError("divisor shape", std::to_string(doubles) + " double zeros");
  if (total != n) throw VerificationError("divisor shape", "zero count differs from n");
  return rep;
}

ConstructionReport verify_construction(const WeierstrassCurve& e, const RationalPoint& p, int n,
                                       const std::vector<Integer>& solution) {
  return verify_construction(build_pencil(e, p, n), solution);
}

}  // namespace ecrank
