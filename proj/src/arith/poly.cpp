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

#include "ecrank/arith/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ecrank {

ZPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) throw InvalidArgument("primitive part of zero polynomial");
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(v);
  }
  if (sgn(z.back()) < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

QPoly to_qpoly(const ZPoly& z) {
  std::vector<Rational> c(z.begin(), z.end());
  return QPoly(std::move(c));
}

std::vector<QPoly> yun_decomposition(const QPoly& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree decomposition of zero");
  std::vector<QPoly> out;
  if (p.degree() == 0) return out;
  QPoly f = p.monic();
  QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = f / a;
  QPoly c = fp / a;
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    out.push_back(g);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

QPoly squarefree_part(const QPoly& p) {
  QPoly r(Rational(1));
  for (const auto& f : yun_decomposition(p)) r *= f;
  return r;
}

std::vector<QPoly> gcd_free_basis(const std::vector<QPoly>& polys) {
  std::vector<QPoly> basis;
  for (const auto& p : polys) {
    if (p.is_zero() || p.degree() <= 0) continue;
    // Yun factors, so every irreducible factor of a basis element has the
    // same multiplicity in each input.
    std::vector<QPoly> pending = yun_decomposition(p);
    while (!pending.empty()) {
      QPoly f = pending.back();
      pending.pop_back();
      if (f.degree() <= 0) continue;
      bool merged = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        QPoly g = gcd(basis[i], f);
        if (g.degree() <= 0) continue;
        QPoly b_rest = basis[i] / g;
        QPoly f_rest = f / g;
        basis.erase(basis.begin() + static_cast<long>(i));
        pending.push_back(g);
        pending.push_back(b_rest);
        pending.push_back(f_rest);
        merged = true;
        break;
      }
      if (!merged) basis.push_back(f.monic());
    }
  }
  std::sort(basis.begin(), basis.end(), [](const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return basis;
}

unsigned multiplicity_of(const QPoly& q, QPoly p) {
  if (q.degree() <= 0) throw InvalidArgument("multiplicity of a constant factor");
  unsigned k = 0;
  while (!p.is_zero()) {
    auto [quo, rem] = divmod(p, q);
    if (!rem.is_zero()) break;
    p = std::move(quo);
    ++k;
  }
  return k;
}

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at(const std::vector<QPoly>& seq, const Rational& t) {
  std::vector<int> s;
  for (const auto& p : seq) s.push_back(sgn(p.eval(t)));
  return sign_changes(s);
}

int variations_at_plus_infinity(const std::vector<QPoly>& seq) {
  std::vector<int> s;
  for (const auto& p : seq) s.push_back(p.is_zero() ? 0 : sgn(p.lc()));
  return sign_changes(s);
}

int variations_at_minus_infinity(const std::vector<QPoly>& seq) {
  std::vector<int> s;
  for (const auto& p : seq) {
    if (p.is_zero()) {
      s.push_back(0);
    } else {
      int v = sgn(p.lc());
      s.push_back(p.degree() % 2 == 0 ? v : -v);
    }
  }
  return sign_changes(s);
}

}  // namespace

int sturm_count(const std::vector<QPoly>& seq, const Rational& lo, const Rational& hi) {
  return variations_at(seq, lo) - variations_at(seq, hi);
}

int sturm_count_above(const std::vector<QPoly>& seq, const Rational& lo) {
  return variations_at(seq, lo) - variations_at_plus_infinity(seq);
}

int real_root_count(const QPoly& p) {
  auto seq = sturm_sequence(p);
  return variations_at_minus_infinity(seq) - variations_at_plus_infinity(seq);
}

Rational root_modulus_bound(const QPoly& p) {
  if (p.degree() <= 0) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(static_cast<std::size_t>(i)) / p.lc());
    if (r > m) m = r;
  }
  return m + 1;
}

Rational resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0) {
    Rational r = 1;
    for (int i = 0; i < b.degree(); ++i) r *= a.lc();
    return r;
  }
  if (b.degree() == 0) {
    Rational r = 1;
    for (int i = 0; i < a.degree(); ++i) r *= b.lc();
    return r;
  }
  // res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) res(b, r), r = a mod b.
  QPoly r = a % b;
  if (r.is_zero()) return 0;
  Rational s = ((a.degree() * b.degree()) % 2 == 0) ? 1 : -1;
  for (int i = 0; i < a.degree() - r.degree(); ++i) s *= b.lc();
  return s * resultant(b, r);
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool unit = a == 1;
    if (!unit || i == 0) os << to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<Rational> rational_roots(const QPoly& p) {
  if (p.is_zero()) throw InvalidArgument("rational roots of zero polynomial");
  std::vector<Rational> roots;
  ZPoly z = primitive_part(p);
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 >= z.size()) return roots;
  const Integer& a0 = z[low];
  const Integer& an = z.back();
  auto num_divs = positive_divisors(a0);
  auto den_divs = positive_divisors(an);
  QPoly q = p;
  for (const auto& n : num_divs) {
    for (const auto& d : den_divs) {
      for (int s : {1, -1}) {
        Rational r(Integer(s * n), d);
        r.canonicalize();
        if (sgn(q.eval(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ecrank
