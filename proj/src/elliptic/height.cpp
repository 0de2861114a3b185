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

#include "ecrank/elliptic/height.hpp"

#include <array>
#include <cmath>
#include <map>

#include "ecrank/arith/linalg.hpp"
#include "ecrank/arith/roots.hpp"
#include "ecrank/arith/square_class.hpp"

namespace ecrank {

namespace {

Integer pow_int(const Integer& p, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw InvalidArgument("no modular inverse");
  return r;
}

// Binary quartic forms sum_k c[k] A^(4-k) B^k for the x-coordinate of 2P on
// y^2 = x^3 + a x + b with a, b integral.
struct DoublingForms {
  std::array<Integer, 5> f, g;
};

DoublingForms doubling_forms(const Integer& a, const Integer& b) {
  return {{1, 0, -2 * a, -8 * b, a * a}, {0, 4, 0, 4 * a, 4 * b}};
}

// Rows multiply F and G by A^(3-i) B^i; columns are coefficients of
// A^(7-j) B^j.
QMatrix sylvester(const DoublingForms& d) {
  QMatrix m(8, 8);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 5; ++k) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(i + k)) = d.f[static_cast<std::size_t>(k)];
      m(static_cast<std::size_t>(i + 4), static_cast<std::size_t>(i + k)) = d.g[static_cast<std::size_t>(k)];
    }
  return m;
}

struct DoublingConstants {
  Integer resultant;
  // log of max l1 norm of F, G and of the Bezout cofactors.
  double log_u = 0;
  double log_c = 0;
};

DoublingConstants doubling_constants(const DoublingForms& d) {
  DoublingConstants out;
  QMatrix s = sylvester(d);
  Rational r = s.det();
  out.resultant = r.get_num();
  QMatrix st = s.transpose();
  double cmax = 0;
  for (std::size_t target : {std::size_t{0}, std::size_t{7}}) {
    std::vector<Rational> rhs(8, Rational(0));
    rhs[target] = r;
    auto sol = st.solve(rhs);
    if (!sol) throw VerificationError("height", "Bezout identity for the doubling forms has no solution");
    double l1 = 0;
    for (const auto& c : *sol) l1 += std::fabs(c.get_d());
    cmax = std::max(cmax, l1);
  }
  double umax = 0;
  for (const auto* form : {&d.f, &d.g}) {
    double l1 = 0;
    for (const auto& c : *form) l1 += std::fabs(c.get_d());
    umax = std::max(umax, l1);
  }
  out.log_u = std::log(umax);
  out.log_c = std::log(cmax);
  return out;
}

// Scaling u with u^4 a and u^6 b integral; x maps to u^2 x.
Integer integral_scale(const Rational& a, const Rational& b) {
  Integer u = 1;
  Integer dens = a.get_den() * b.get_den();
  for (const auto& [p, e] : factor_integer(dens)) {
    (void)e;
    long va = -valuation(a.get_den(), p), vb = -valuation(b.get_den(), p);
    long k = std::max((-va + 3) / 4, (-vb + 5) / 6);
    if (k > 0) u *= pow_int(p, static_cast<unsigned long>(k));
  }
  return u;
}

// ---------------------------------------------------------------------------
// Non-archimedean places.

// Elements a + b*omega of Z_p[omega] reduced mod p^n, where omega = sqrt(D)
// ("sqrt" basis) or (1 + sqrt D)/2 ("half" basis); for split or rational
// places only a is used and omega is already embedded in Z_p.
struct LocalElt {
  Integer a, b;
};

enum class PlaceKind { Embedded, Extension };

struct LocalPlace {
  Integer p;
  PlaceKind kind = PlaceKind::Embedded;
  int weight = 1;            // local degree n_v
  Integer omega;             // embedded omega mod p^n (Embedded places over Q(sqrt D))
  bool half_basis = false;   // omega = (1 + sqrt D)/2
  Integer d;                 // D
  Integer c0;                // (D - 1)/4 for the half basis
  bool over_q = true;
};

struct LocalState {
  LocalElt A, B;
  long prec = 0;             // residues known mod p^prec
  Integer modulus;           // p^prec
  long mu = 0;               // doubled valuation of the pair
};

LocalElt mul(const LocalPlace& pl, const LocalElt& x, const LocalElt& y, const Integer& m) {
  if (pl.kind == PlaceKind::Embedded) return {mod(x.a * y.a, m), 0};
  Integer ac = x.a * y.a, bd = x.b * y.b, cross = x.a * y.b + x.b * y.a;
  if (pl.half_basis) return {mod(ac + pl.c0 * bd, m), mod(cross + bd, m)};
  return {mod(ac + pl.d * bd, m), mod(cross, m)};
}

LocalElt add(const LocalElt& x, const LocalElt& y, const Integer& m) { return {mod(x.a + y.a, m), mod(x.b + y.b, m)}; }

LocalElt scale(const LocalElt& x, const Integer& c, const Integer& m) { return {mod(x.a * c, m), mod(x.b * c, m)}; }

// Doubled valuation 2 v(x), or -1 when x vanishes to the known precision.
long doubled_valuation(const LocalPlace& pl, const LocalElt& x, const Integer& m) {
  if (pl.kind == PlaceKind::Embedded) {
    Integer r = mod(x.a, m);
    if (r == 0) return -1;
    return 2 * valuation(r, pl.p);
  }
  Integer n = pl.half_basis ? Integer(x.a * x.a + x.a * x.b - pl.c0 * x.b * x.b) : Integer(x.a * x.a - pl.d * x.b * x.b);
  n = mod(n, m);
  if (n == 0) return -1;
  return valuation(n, pl.p);
}

// Smallest doubled valuation among the values; unknown values are at least
// `floor`. Throws when the minimum is not determined.
long min_doubled_valuation(long va, long vb, long floor_bound) {
  long known = -1;
  if (va >= 0) known = va;
  if (vb >= 0) known = known < 0 ? vb : std::min(known, vb);
  if (known < 0) throw PrecisionError("p-adic precision exhausted: both forms vanish to working precision");
  if ((va < 0 || vb < 0) && known >= floor_bound) throw PrecisionError("p-adic precision exhausted");
  return known;
}

LocalElt eval_form(const LocalPlace& pl, const std::array<Integer, 5>& c, const LocalElt& A, const LocalElt& B,
                   const Integer& m) {
  std::array<LocalElt, 5> apow, bpow;
  apow[0] = bpow[0] = {1, 0};
  for (std::size_t i = 1; i < 5; ++i) {
    apow[i] = mul(pl, apow[i - 1], A, m);
    bpow[i] = mul(pl, bpow[i - 1], B, m);
  }
  LocalElt r{0, 0};
  for (std::size_t k = 0; k < 5; ++k) {
    if (c[k] == 0) continue;
    r = add(r, scale(mul(pl, apow[4 - k], bpow[k], m), c[k], m), m);
  }
  return r;
}

void divide_pair(LocalState& st, const LocalPlace& pl, long k) {
  if (k <= 0) return;
  Integer pk = pow_int(pl.p, static_cast<unsigned long>(k));
  for (LocalElt* e : {&st.A, &st.B}) {
    if (e->a % pk != 0 || e->b % pk != 0) throw PrecisionError("p-adic normalization lost divisibility");
    e->a /= pk;
    e->b /= pk;
  }
  st.prec -= k;
  if (st.prec <= 4) throw PrecisionError("p-adic precision exhausted");
  st.modulus = pow_int(pl.p, static_cast<unsigned long>(st.prec));
  st.A = {mod(st.A.a, st.modulus), mod(st.A.b, st.modulus)};
  st.B = {mod(st.B.a, st.modulus), mod(st.B.b, st.modulus)};
}

Integer tonelli_shanks(const Integer& n, const Integer& p) {
  Integer a = mod(n, p);
  if (a == 0) return 0;
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c, r, t, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = mod(tt * tt, p);
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
    m = i;
    c = mod(b * b, p);
    t = mod(t * c, p);
    r = mod(r * b, p);
  }
  return r;
}

// Root of g(w) = w^2 + c1 w + c0 modulo p^n from a simple root mod p.
Integer hensel_root(Integer w, const Integer& c1, const Integer& c0, const Integer& modulus, long n) {
  for (long k = 1; k < 2 * n + 4; k *= 2) {
    Integer g = w * w + c1 * w + c0;
    Integer dg = 2 * w + c1;
    w = mod(w - g * inverse_mod(dg, modulus), modulus);
  }
  if (mod(w * w + c1 * w + c0, modulus) != 0) throw PrecisionError("Hensel lifting did not converge");
  return w;
}

// Places above p of Q (d == 0) or Q(sqrt d).
std::vector<LocalPlace> places_above(const Integer& p, const Integer& d, long prec) {
  std::vector<LocalPlace> out;
  if (d == 0) {
    LocalPlace pl;
    pl.p = p;
    out.push_back(pl);
    return out;
  }
  LocalPlace base;
  base.p = p;
  base.d = d;
  base.over_q = false;
  base.half_basis = mod(d, Integer(4)) == 1;
  base.c0 = (d - 1) / 4;
  Integer modulus = pow_int(p, static_cast<unsigned long>(prec));
  bool split;
  if (p == 2) {
    split = mod(d, Integer(8)) == 1;
  } else {
    split = mpz_legendre(mod(d, p).get_mpz_t(), p.get_mpz_t()) == 1;
  }
  if (!split) {
    base.kind = PlaceKind::Extension;
    base.weight = 2;
    out.push_back(base);
    return out;
  }
  // Roots of the minimal polynomial of omega in Z_p.
  std::vector<Integer> roots;
  if (base.half_basis) {
    Integer c1 = -1, c0 = -base.c0;
    Integer r0;
    if (p == 2) {
      r0 = 0;
    } else {
      Integer s = tonelli_shanks(d, p);
      r0 = mod((1 + s) * inverse_mod(Integer(2), p), p);
    }
    Integer r = hensel_root(r0, c1, c0, modulus, prec);
    roots = {r, mod(1 - r, modulus)};
  } else {
    Integer s = hensel_root(tonelli_shanks(d, p), 0, -d, modulus, prec);
    roots = {s, mod(-s, modulus)};
  }
  for (const auto& r : roots) {
    LocalPlace pl = base;
    pl.kind = PlaceKind::Embedded;
    pl.weight = 1;
    pl.omega = r;
    out.push_back(pl);
  }
  return out;
}

// x = (num_a + num_b*omega) / den with integers.
struct IntegralX {
  Integer num_a, num_b, den;
};

IntegralX integral_form(const QuadExt& x, bool half_basis) {
  // u + v sqrt D; sqrt D = 2 omega - 1 in the half basis.
  Rational a = x.u(), b = x.v();
  if (half_basis) {
    a = x.u() - x.v();
    b = 2 * x.v();
  }
  Integer den;
  mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  return {a.get_num() * (den / a.get_den()), b.get_num() * (den / b.get_den()), den};
}

// Per-doubling local increments at all places above p, in units of
// (log p)/2, summed with the place weights.
std::vector<long> local_increments(const LocalPlace& pl, const IntegralX& xi, const DoublingForms& forms, int steps,
                                   long prec) {
  LocalState st;
  st.prec = prec;
  st.modulus = pow_int(pl.p, static_cast<unsigned long>(prec));
  // Initial pair, divided exactly by the largest p-power dividing both.
  LocalElt A0{xi.num_a, xi.num_b}, B0{xi.den, 0};
  Integer big = pow_int(pl.p, static_cast<unsigned long>(prec + 64));
  if (pl.kind == PlaceKind::Embedded && !pl.over_q) {
    A0 = {xi.num_a + xi.num_b * pl.omega, 0};
  }
  long va = doubled_valuation(pl, A0, big), vb = doubled_valuation(pl, B0, big);
  long mu0 = min_doubled_valuation(va, vb, 2 * (prec + 64) / (pl.kind == PlaceKind::Embedded ? 1 : 2));
  long k0 = mu0 / 2;
  Integer pk = pow_int(pl.p, static_cast<unsigned long>(k0));
  for (LocalElt* e : {&A0, &B0}) {
    e->a /= pk;
    e->b /= pk;
  }
  st.A = {mod(A0.a, st.modulus), mod(A0.b, st.modulus)};
  st.B = {mod(B0.a, st.modulus), mod(B0.b, st.modulus)};
  st.mu = mu0 - 2 * k0;

  std::vector<long> inc;
  inc.reserve(static_cast<std::size_t>(steps));
  for (int n = 0; n < steps; ++n) {
    LocalElt F = eval_form(pl, forms.f, st.A, st.B, st.modulus);
    LocalElt G = eval_form(pl, forms.g, st.A, st.B, st.modulus);
    long vf = doubled_valuation(pl, F, st.modulus), vg = doubled_valuation(pl, G, st.modulus);
    long floor_bound = pl.kind == PlaceKind::Embedded ? 2 * st.prec : st.prec;
    long mu = min_doubled_valuation(vf, vg, floor_bound);
    // log max(|F|,|G|) - 4 log max(|A|,|B|) = -(mu - 4 mu_AB)/2 log p.
    inc.push_back(pl.weight * (4 * st.mu - mu));
    st.A = F;
    st.B = G;
    long k = mu / 2;
    divide_pair(st, pl, k);
    st.mu = mu - 2 * k;
  }
  return inc;
}

// ---------------------------------------------------------------------------
// Archimedean places.

std::vector<Complex> complex_embeddings(const QuadExt& x, long prec) {
  if (x.is_rational()) return {Complex(x.u(), prec)};
  BigFloat u(x.u(), prec), v(x.v(), prec);
  BigFloat r = sqrt(abs(BigFloat(x.d(), prec)));
  if (sgn(x.d()) > 0) {
    return {Complex(u + v * r, BigFloat(prec)), Complex(u - v * r, BigFloat(prec))};
  }
  return {Complex(u, v * r), Complex(u, -(v * r))};
}

Complex eval_form(const std::array<Integer, 5>& c, const Complex& A, const Complex& B, long prec) {
  std::array<Complex, 5> apow{Complex(prec), Complex(prec), Complex(prec), Complex(prec), Complex(prec)};
  std::array<Complex, 5> bpow = apow;
  apow[0] = bpow[0] = Complex(BigFloat(1, prec), BigFloat(prec));
  for (std::size_t i = 1; i < 5; ++i) {
    apow[i] = apow[i - 1] * A;
    bpow[i] = bpow[i - 1] * B;
  }
  Complex r(prec);
  for (std::size_t k = 0; k < 5; ++k) {
    if (c[k] == 0) continue;
    r += apow[4 - k] * bpow[k] * BigFloat(c[k], prec);
  }
  return r;
}

// Sum over embeddings of log max(|F|,|G|) - 4 log max(|A|,|B|), per doubling.
std::vector<BigFloat> archimedean_increments(const QuadExt& x, const DoublingForms& forms, int steps, long prec) {
  std::vector<BigFloat> inc(static_cast<std::size_t>(steps), BigFloat(prec));
  for (const Complex& z : complex_embeddings(x, prec)) {
    Complex A = z, B(BigFloat(1, prec), BigFloat(prec));
    BigFloat m = max(abs(A), abs(B));
    A = A * (BigFloat(1, prec) / m);
    B = B * (BigFloat(1, prec) / m);
    for (int n = 0; n < steps; ++n) {
      Complex F = eval_form(forms.f, A, B, prec);
      Complex G = eval_form(forms.g, A, B, prec);
      BigFloat mf = max(abs(F), abs(G));
      inc[static_cast<std::size_t>(n)] += log(mf);
      BigFloat s = BigFloat(1, prec) / mf;
      A = F * s;
      B = G * s;
    }
  }
  return inc;
}

ZPoly minimal_polynomial(const QuadExt& x) {
  if (x.is_rational()) return {-x.u().get_num(), x.u().get_den()};
  // z^2 - 2u z + (u^2 - d v^2)
  QPoly p({x.norm(), -2 * x.u(), Rational(1)});
  return primitive_part(p);
}

}  // namespace

BigFloat weil_height(const QuadExt& x, long prec) {
  if (x.is_zero()) return BigFloat(prec);
  ZPoly mp = minimal_polynomial(x);
  return mahler_height(mp, static_cast<int>(mp.size()) - 1, prec);
}

HeightResult canonical_height_of_x(const WeierstrassCurve& e, const QuadExt& x0, long prec) {
  Integer u = integral_scale(e.a(), e.b());
  Integer u2 = u * u, u4 = u2 * u2, u6 = u4 * u2;
  Rational ai = e.a() * Rational(u4), bi = e.b() * Rational(u6);
  DoublingForms forms = doubling_forms(ai.get_num(), bi.get_num());
  DoublingConstants k = doubling_constants(forms);
  QuadExt x = x0 * QuadExt(Rational(u2));

  const double bound = std::max({std::fabs(k.log_u), std::fabs(k.log_c), 1.0});
  const double tail_target = kHeightTargetError / 8;
  int steps = 1;
  while (bound * std::pow(4.0, -steps) / 3 > tail_target) ++steps;

  const bool over_q = x.is_rational();
  const Integer d = over_q ? Integer(0) : x.d();
  const int deg = over_q ? 1 : 2;

  // Non-archimedean contributions, accumulated per doubling as exact
  // multiples of log p / 2.
  std::map<Integer, std::vector<long>> nonarch;
  Integer r = abs(k.resultant);
  for (const auto& [p, vr] : factor_integer(r)) {
    long wprec = static_cast<long>(steps + 2) * static_cast<long>(vr + 1) + 64;
    std::vector<long> total(static_cast<std::size_t>(steps), 0);
    for (const auto& pl : places_above(p, d, wprec)) {
      IntegralX xi = integral_form(x, pl.half_basis);
      auto inc = local_increments(pl, xi, forms, steps, wprec);
      for (int n = 0; n < steps; ++n) total[static_cast<std::size_t>(n)] += inc[static_cast<std::size_t>(n)];
    }
    nonarch[p] = std::move(total);
  }

  auto evaluate = [&](long wp) {
    auto arch = archimedean_increments(x, forms, steps, wp);
    BigFloat sum(wp);
    BigFloat quarter(0.25, wp);
    BigFloat weight = quarter;
    for (int n = 0; n < steps; ++n) {
      BigFloat in = arch[static_cast<std::size_t>(n)];
      for (const auto& [p, incs] : nonarch) {
        long c = incs[static_cast<std::size_t>(n)];
        if (c != 0) in += BigFloat(static_cast<double>(c), wp) * log(BigFloat(p, wp)) / BigFloat(2, wp);
      }
      sum += weight * in;
      weight *= quarter;
    }
    return sum / BigFloat(static_cast<double>(deg), wp);
  };

  BigFloat h0 = weil_height(x, prec + 64);
  BigFloat s1 = evaluate(prec);
  BigFloat s2 = evaluate(prec + 64);
  HeightResult out;
  out.value = (h0 + s2).with_precision(prec);
  out.doublings = steps;
  BigFloat tail(bound * std::pow(4.0, -steps) / 3, prec);
  out.error = tail + BigFloat(2, prec) * abs(s1 - s2) + pow2(-(prec / 2), prec);
  if (out.error > BigFloat(kHeightTargetError, prec)) {
    throw PrecisionError("canonical height error bound " + out.error.to_string(6) + " exceeds target");
  }
  return out;
}

HeightResult canonical_height(const WeierstrassCurve& e, const RationalPoint& p, long prec) {
  return canonical_height(e, to_quad(p), prec);
}

HeightResult canonical_height(const WeierstrassCurve& e, const QuadPoint& p, long prec) {
  if (!on_curve(e, p)) throw InvalidArgument("canonical_height: point not on curve");
  if (p.infinity) return {BigFloat(prec), BigFloat(prec), 0};
  return canonical_height_of_x(e, p.x, prec);
}

std::optional<QuadExt> sum_x_coordinate(const WeierstrassCurve& e, const QuadPoint& p, const QuadPoint& q) {
  if (p.infinity) return q.infinity ? std::nullopt : std::optional<QuadExt>(q.x);
  if (q.infinity) return p.x;
  bool compatible = !p.x.is_bound() || !q.x.is_bound() || p.x.d() == q.x.d();
  compatible = compatible && (!p.y.is_bound() || !q.y.is_bound() || p.y.d() == q.y.d());
  if (compatible) {
    auto s = add_unchecked(e, p, q);
    if (s.infinity) return std::nullopt;
    return s.x;
  }
  // P = (x1, v1 sqrt d1), Q = (x2, v2 sqrt d2) with x1, x2 rational:
  // lambda^2 = (v2^2 d2 + v1^2 d1 - 2 v1 v2 sqrt(d1 d2)) / (x2 - x1)^2.
  if (!p.x.is_rational() || !q.x.is_rational() || p.y.u() != 0 || q.y.u() != 0) {
    throw InvalidArgument("height pairing: points over different fields must have rational x and y in sqrt(d) Q");
  }
  const Rational x1 = p.x.u(), x2 = q.x.u();
  const Rational v1 = p.y.v(), v2 = q.y.v();
  const Integer d1 = p.y.d(), d2 = q.y.d();
  if (x1 == x2) throw InvalidArgument("height pairing: distinct fields with equal x");
  Integer g;
  mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
  Integer kern = (d1 / g) * (d2 / g);
  if (sgn(d1) < 0 && sgn(d2) < 0) kern = abs(kern);
  // sqrt(d1 d2) = g sqrt(kern), sign fixed by the principal branches of
  // sqrt(d1) and sqrt(d2); only the Galois orbit matters for the height.
  Rational dx2 = (x2 - x1) * (x2 - x1);
  Rational rat = (v2 * v2 * Rational(d2) + v1 * v1 * Rational(d1)) / dx2 - x1 - x2;
  Rational irr = -2 * v1 * v2 * Rational(g) / dx2;
  if (sgn(d1) < 0 && sgn(d2) < 0) irr = -irr;
  if (kern == 1) return QuadExt(rat + irr);
  return QuadExt(kern, rat, irr);
}

BigFloat determinant(std::vector<std::vector<BigFloat>> m) {
  const std::size_t n = m.size();
  if (n == 0) return BigFloat(1, kDefaultPrecision);
  long prec = m[0][0].precision();
  BigFloat det(1, prec);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (abs(m[i][c]) > abs(m[piv][c])) piv = i;
    if (m[piv][c].is_zero()) return BigFloat(prec);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      BigFloat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

HeightPairingMatrix height_pairing_matrix(const WeierstrassCurve& e, const std::vector<QuadPoint>& points, long prec,
                                          double tolerance) {
  for (const auto& p : points)
    if (!on_curve(e, p)) throw InvalidArgument("height pairing: point not on curve");
  const std::size_t n = points.size();
  HeightPairingMatrix out;
  out.points = points;
  out.tolerance = BigFloat(tolerance, prec);
  out.gram.assign(n, std::vector<BigFloat>(n, BigFloat(prec)));
  std::vector<std::vector<BigFloat>> err(n, std::vector<BigFloat>(n, BigFloat(prec)));
  std::vector<HeightResult> diag;
  for (const auto& p : points) diag.push_back(canonical_height(e, p, prec));
  BigFloat half(0.5, prec);
  for (std::size_t i = 0; i < n; ++i) {
    out.gram[i][i] = diag[i].value;
    err[i][i] = diag[i].error;
    for (std::size_t j = i + 1; j < n; ++j) {
      auto xs = sum_x_coordinate(e, points[i], points[j]);
      HeightResult hs = xs ? canonical_height_of_x(e, *xs, prec) : HeightResult{BigFloat(prec), BigFloat(prec), 0};
      BigFloat v = (hs.value - diag[i].value - diag[j].value) * half;
      out.gram[i][j] = v;
      out.gram[j][i] = v;
      BigFloat ev = (hs.error + diag[i].error + diag[j].error) * half;
      err[i][j] = ev;
      err[j][i] = ev;
    }
  }
  out.det = determinant(out.gram);
  // First-order perturbation bound: sum_ij |cofactor_ij| err_ij, with the
  // cofactors bounded by Hadamard's inequality on the row norms.
  BigFloat bound(prec);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigFloat cof(1, prec);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        BigFloat row(prec);
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row += out.gram[r][c] * out.gram[r][c];
        cof *= sqrt(row);
      }
      bound += cof * err[i][j];
    }
  out.det_error = bound;
  return out;
}

BigFloat regulator(const WeierstrassCurve& e, const std::vector<QuadPoint>& points, long prec) {
  return height_pairing_matrix(e, points, prec).det;
}

BigFloat regulator(const WeierstrassCurve& e, const std::vector<RationalPoint>& points, long prec) {
  std::vector<QuadPoint> q;
  for (const auto& p : points) q.push_back(to_quad(p));
  return regulator(e, q, prec);
}

bool independence_verdict(const HeightPairingMatrix& m) {
  long prec = m.tolerance.precision();
  if (!(m.det > m.tolerance)) return false;
  for (std::size_t i = 0; i < m.gram.size(); ++i)
    if (!(m.gram[i][i] > BigFloat(kHeightPositivity, prec))) return false;
  return true;
}

}  // namespace ecrank
