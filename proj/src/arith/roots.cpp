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

#include "ecrank/arith/roots.hpp"

#include <algorithm>
#include <cmath>

namespace ecrank {

namespace {

std::vector<Complex> to_complex_coeffs(const QPoly& p, long prec) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.emplace_back(a, prec);
  return c;
}

Complex horner(const std::vector<Complex>& c, const Complex& z) {
  Complex r(z.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r *= z;
    r += *it;
  }
  return r;
}

// Evaluates p and p' together.
void horner2(const std::vector<Complex>& c, const Complex& z, Complex& p, Complex& dp) {
  long prec = z.precision();
  p = Complex(prec);
  dp = Complex(prec);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp *= z;
    dp += p;
    p *= z;
    p += *it;
  }
}

BigFloat abs_horner(const std::vector<Complex>& c, const BigFloat& r) {
  BigFloat s(r.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * r + abs(*it);
  return s;
}

struct Attempt {
  std::vector<IsolatedRoot> roots;
  bool certified = false;
};

Attempt aberth(const QPoly& p, long prec) {
  const int n = p.degree();
  const long wp = prec + 32;
  auto c = to_complex_coeffs(p, wp);

  // Initial points on a circle of radius given by the Cauchy bound, with an
  // irrational angular offset to avoid symmetric stalls.
  BigFloat rad(root_modulus_bound(p), wp);
  rad = rad * BigFloat(0.5, wp);
  BigFloat two_pi = pi(wp) * BigFloat(2, wp);
  std::vector<Complex> z;
  for (int i = 0; i < n; ++i) {
    BigFloat theta = two_pi * BigFloat(static_cast<double>(i) / n + 0.4, wp);
    z.push_back(polar(rad, theta));
  }

  const BigFloat tol = pow2(-(prec + 8), wp);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  const int max_iter = 400 + 40 * n;
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<std::size_t>(i)]) continue;
      Complex pv(wp), dpv(wp);
      horner2(c, z[static_cast<std::size_t>(i)], pv, dpv);
      if (pv.re.is_zero() && pv.im.is_zero()) {
        done[static_cast<std::size_t>(i)] = true;
        continue;
      }
      Complex ratio = pv / dpv;
      Complex s(wp);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
        s += Complex(BigFloat(1, wp), BigFloat(wp)) / diff;
      }
      Complex one(BigFloat(1, wp), BigFloat(wp));
      Complex w = ratio / (one - ratio * s);
      if (!w.re.is_finite() || !w.im.is_finite()) {
        w = ratio;
      }
      z[static_cast<std::size_t>(i)] -= w;
      BigFloat scale = max(BigFloat(1, wp), abs(z[static_cast<std::size_t>(i)]));
      if (abs(w) < tol * scale) {
        done[static_cast<std::size_t>(i)] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  // Weierstrass disks, inflated by a bound on the evaluation error.
  Attempt out;
  BigFloat lc = abs(c.back());
  BigFloat eps = pow2(-(wp - 8), wp) * BigFloat(static_cast<double>(n + 1), wp);
  for (int i = 0; i < n; ++i) {
    const Complex& zi = z[static_cast<std::size_t>(i)];
    BigFloat num = abs(horner(c, zi)) + eps * abs_horner(c, abs(zi));
    BigFloat den = lc;
    for (int j = 0; j < n; ++j) {
      if (j != i) den *= abs(zi - z[static_cast<std::size_t>(j)]);
    }
    IsolatedRoot r{zi.with_precision(prec), BigFloat(prec)};
    if (den.is_zero()) {
      return out;
    }
    r.radius = (BigFloat(static_cast<double>(n), wp) * num / den).with_precision(prec);
    out.roots.push_back(std::move(r));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& a = out.roots[static_cast<std::size_t>(i)];
      const auto& b = out.roots[static_cast<std::size_t>(j)];
      if (abs(a.z - b.z) <= a.radius + b.radius) return out;
    }
  }
  out.certified = true;
  return out;
}

// Roots of a real polynomial come in conjugate pairs; the Sturm count says
// how many are real. Those with the smallest |Im| are snapped to the axis
// when their disks meet it.
void mark_real_roots(const QPoly& p, std::vector<IsolatedRoot>& roots) {
  int nreal = real_root_count(p);
  std::vector<std::size_t> idx(roots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return abs(roots[a].z.im) < abs(roots[b].z.im); });
  for (int k = 0; k < nreal; ++k) {
    auto& r = roots[idx[static_cast<std::size_t>(k)]];
    if (abs(r.z.im) > r.radius) throw PrecisionError("real root disk does not meet the real axis");
    r.radius = r.radius + abs(r.z.im);
    r.z.im = BigFloat(r.z.precision());
    r.real = true;
  }
}

}  // namespace

Complex eval_complex(const QPoly& p, const Complex& z) {
  return horner(to_complex_coeffs(p, z.precision()), z);
}

std::vector<IsolatedRoot> isolate_roots(const QPoly& squarefree, long prec) {
  if (squarefree.is_zero()) throw InvalidArgument("roots of the zero polynomial");
  if (prec < 64) throw InvalidArgument("precision below 64 bits");
  const int n = squarefree.degree();
  if (n <= 0) return {};
  if (n == 1) {
    Rational r = -squarefree.coeff(0) / squarefree.coeff(1);
    IsolatedRoot root{Complex(r, prec), BigFloat(prec)};
    root.real = true;
    return {root};
  }
  long p = prec;
  for (int attempt = 0; attempt <= 3; ++attempt, p *= 2) {
    Attempt a = aberth(squarefree, p);
    if (!a.certified) continue;
    mark_real_roots(squarefree, a.roots);
    std::sort(a.roots.begin(), a.roots.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) {
      if (x.z.re != y.z.re) return x.z.re < y.z.re;
      return x.z.im < y.z.im;
    });
    return a.roots;
  }
  throw PrecisionError("root isolation failed for " + to_string(squarefree) + " up to " + std::to_string(p / 2) +
                       " bits");
}

std::vector<IsolatedRoot> isolate_roots_with_multiplicity(const QPoly& p, long prec) {
  std::vector<IsolatedRoot> out;
  auto parts = yun_decomposition(p);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() <= 0) continue;
    for (auto& r : isolate_roots(parts[k], prec)) {
      r.multiplicity = static_cast<unsigned>(k + 1);
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

bool near_integer(const BigFloat& v, Integer& out) {
  Rational q = v.to_rational();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational frac = q - Rational(fl);
  Rational half(1, 2);
  out = frac > half ? Integer(fl + 1) : fl;
  Rational diff = abs(q - Rational(out));
  return diff < Rational(1, 1000);
}

// Tries to find a proper factor whose roots are a subset of the given roots.
bool has_factor_from_subsets(const QPoly& p, const std::vector<IsolatedRoot>& roots) {
  const int n = p.degree();
  ZPoly z = primitive_part(p);
  auto lc_divs = positive_divisors(z.back());
  QPoly zp = to_qpoly(z);
  const long prec = roots.front().z.precision();
  for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
    int k = __builtin_popcount(mask);
    if (2 * k > n) continue;
    if (2 * k == n && (mask & 1u) == 0) continue;
    std::vector<Complex> prod{Complex(BigFloat(1, prec), BigFloat(prec))};
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      const Complex& r = roots[static_cast<std::size_t>(i)].z;
      std::vector<Complex> next(prod.size() + 1, Complex(prec));
      for (std::size_t j = 0; j < prod.size(); ++j) {
        next[j + 1] += prod[j];
        next[j] -= prod[j] * r;
      }
      prod = std::move(next);
    }
    bool real = true;
    for (const auto& c : prod) {
      if (abs(c.im) > BigFloat(1e-6, prec) * max(BigFloat(1, prec), abs(c.re))) {
        real = false;
        break;
      }
    }
    if (!real) continue;
    for (const auto& d : lc_divs) {
      BigFloat scale(d, prec);
      std::vector<Rational> coeffs;
      bool ok = true;
      for (const auto& c : prod) {
        Integer v;
        if (!near_integer(c.re * scale, v)) {
          ok = false;
          break;
        }
        coeffs.emplace_back(v);
      }
      if (!ok) continue;
      QPoly g(coeffs);
      if (g.degree() == k && (zp % g).is_zero()) return true;
    }
  }
  return false;
}

}  // namespace

bool is_irreducible(const QPoly& p) {
  if (p.is_zero() || p.degree() <= 0) throw InvalidArgument("irreducibility of a constant");
  const int n = p.degree();
  if (n == 1) return true;
  if (n <= 3) return rational_roots(p).empty();
  if (n > 16) throw InvalidArgument("irreducibility test supports degree <= 16");
  if (!rational_roots(p).empty()) return false;
  if (gcd(p, p.derivative()).degree() > 0) return false;
  return !has_factor_from_subsets(p, isolate_roots(p, 192));
}

BigFloat mahler_height(const ZPoly& min_poly, int degree_of_field, long prec) {
  QPoly p = to_qpoly(min_poly);
  if (p.is_zero()) throw InvalidArgument("mahler_height: zero polynomial");
  if (p.degree() < 1) throw InvalidArgument("mahler_height: constant polynomial");
  if (degree_of_field < 1 || degree_of_field % p.degree() != 0) {
    throw InvalidArgument("mahler_height: field degree must be a multiple of the polynomial degree");
  }
  Integer content = 0;
  for (const auto& c : min_poly) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content != 1) throw InvalidArgument("mahler_height: polynomial is not primitive");
  if (!is_irreducible(p)) throw InvalidArgument("mahler_height: polynomial is reducible");

  const int n = p.degree();
  const long wp = prec + 32;
  const BigFloat target = pow2(-(prec / 2), wp);
  for (long rp = wp; rp <= 8 * wp; rp *= 2) {
    auto roots = isolate_roots(p, rp);
    BigFloat sum = log(abs(BigFloat(min_poly.back(), rp)));
    BigFloat err(rp);
    BigFloat one(1, rp);
    for (const auto& r : roots) {
      BigFloat m = abs(r.z);
      if (m > one) sum += log(m);
      if (m + r.radius > one) {
        BigFloat lo = max(m - r.radius, one);
        err += r.radius / lo;
      }
    }
    if (err <= target) return (sum / BigFloat(static_cast<double>(n), rp)).with_precision(prec);
  }
  throw PrecisionError("mahler_height: error bound not reached");
}

}  // namespace ecrank
