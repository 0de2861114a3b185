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

#include "ecrank/pencil/forms.hpp"

#include <algorithm>
#include <random>

namespace ecrank {

QuadraticForm::QuadraticForm(QMatrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw InvalidArgument("quadratic form matrix must be square and symmetric");
}

Rational QuadraticForm::operator()(const std::vector<Rational>& v) const {
  if (v.size() != dim()) throw InvalidArgument("quadratic form: vector has wrong length");
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) s += m_(i, j) * v[i] * v[j];
  return s;
}

Rational QuadraticForm::operator()(const std::vector<Integer>& v) const {
  std::vector<Rational> r(v.begin(), v.end());
  return (*this)(r);
}

namespace {

using PolyMatrix = std::vector<std::vector<QPoly>>;

QMatrix at(const QMatrix& a, const QMatrix& b, const Rational& t) {
  QMatrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += t * b(i, j);
  return m;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  QPoly p;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= QPoly({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    p += basis * (ys[i] / denom);
  }
  return p;
}

// Rank of m over each component of Q[t]/(g), g squarefree.
void rank_mod(const PolyMatrix& m0, const QPoly& g, std::vector<std::pair<QPoly, std::size_t>>& out) {
  PolyMatrix m = m0;
  for (auto& row : m)
    for (auto& e : row) e = e % g;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    for (; p < rows; ++p) {
      if (m[p][c].is_zero()) continue;
      QPoly d = gcd(m[p][c], g);
      if (d.degree() > 0) {
        rank_mod(m0, d, out);
        rank_mod(m0, exact_div(g, d), out);
        return;
      }
      break;
    }
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    QPoly inv = std::get<1>(xgcd(m[r][c], g));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      QPoly f = (m[i][c] * inv) % g;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] - f * m[r][j]) % g;
    }
    ++r;
  }
  out.emplace_back(g.monic(), r);
}

}  // namespace

PencilRank pencil_rank(const QuadraticForm& qa, const QuadraticForm& qb) {
  if (qa.dim() != qb.dim()) throw InvalidArgument("pencil forms must have equal dimension");
  const QMatrix& a = qa.matrix();
  const QMatrix& b = qb.matrix();
  const std::size_t n = qa.dim();
  PencilRank pr;
  pr.rank_at_infinity = b.rank();
  // The drop locus has at most n points, so n + 1 samples include a generic one.
  for (std::size_t i = 0; i <= n; ++i) pr.generic_rank = std::max(pr.generic_rank, at(a, b, Rational(i)).rank());
  pr.min_rank = std::min(pr.generic_rank, pr.rank_at_infinity);
  const std::size_t r = pr.generic_rank;
  if (r == 0) return pr;

  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Rational> xs;
  for (std::size_t i = 0; i <= r; ++i) xs.emplace_back(static_cast<long>(i));
  QPoly g;
  int nonzero = 0;
  for (int attempt = 0; attempt < 12 && nonzero < 3; ++attempt) {
    QMatrix u(r, n), v(n, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        u(i, j) = coef(rng);
        v(j, i) = coef(rng);
      }
    if (r == n) u = v = QMatrix::identity(n);
    std::vector<Rational> ys;
    for (const auto& x : xs) ys.push_back((u * at(a, b, x) * v).det());
    QPoly d = interpolate(xs, ys);
    if (d.is_zero()) continue;
    g = g.is_zero() ? d.monic() : gcd(g, d);
    ++nonzero;
    if (r == n) break;
  }
  if (nonzero == 0) throw VerificationError("pencil rank", "no nonzero compressed determinant");
  if (g.degree() <= 0) return pr;
  pr.drop_polynomial = squarefree_part(g);

  PolyMatrix m(n, std::vector<QPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = QPoly({a(i, j), b(i, j)});
  rank_mod(m, pr.drop_polynomial, pr.drops);
  std::sort(pr.drops.begin(), pr.drops.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return x.first.coeffs() < y.first.coeffs();
  });
  for (const auto& [q, rk] : pr.drops) pr.min_rank = std::min(pr.min_rank, rk);
  return pr;
}

std::size_t pencil_min_rank(const QuadraticForm& a, const QuadraticForm& b) { return pencil_rank(a, b).min_rank; }

namespace {

// Integer matrix proportional to m.
std::vector<std::vector<Integer>> integral(const QMatrix& m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational s = m(i, j) * l;
      out[i][j] = s.get_num();
    }
  return out;
}

// Integer z with a z^2 + b z + c = 0 and |z| <= bound; `all` when the
// polynomial vanishes identically.
void integer_roots(const Integer& a, const Integer& b, const Integer& c, int bound, std::vector<long>& out, bool& all) {
  out.clear();
  all = false;
  auto keep = [&](const Integer& z) {
    if (abs(z) <= bound) out.push_back(z.get_si());
  };
  if (a == 0) {
    if (b == 0) {
      all = c == 0;
      return;
    }
    if (c % b == 0) keep(-c / b);
    return;
  }
  Integer disc = b * b - 4 * a * c;
  if (disc < 0) return;
  Integer s = sqrt(disc);
  if (s * s != disc) return;
  for (const Integer& num : {Integer(-b + s), Integer(-b - s)}) {
    if (num % (2 * a) == 0) keep(num / (2 * a));
    if (s == 0) break;
  }
}

Integer value(const std::vector<std::vector<Integer>>& m, const std::vector<Integer>& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < v.size(); ++j) row += m[i][j] * v[j];
    s += v[i] * row;
  }
  return s;
}

// Order key: max-norm, then coordinatewise (|c|, positive first).
bool precedes(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  Integer nx = 0, ny = 0;
  for (const auto& c : x) nx = std::max(nx, Integer(abs(c)));
  for (const auto& c : y) ny = std::max(ny, Integer(abs(c)));
  if (nx != ny) return nx < ny;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Integer ax = abs(x[i]), ay = abs(y[i]);
    if (ax != ay) return ax < ay;
    if (sgn(x[i]) != sgn(y[i])) return sgn(x[i]) > sgn(y[i]);
  }
  return false;
}

}  // namespace

IsotropicResult isotropic_search(const QuadraticForm& f1, const QuadraticForm& f2, int height_bound,
                                 const std::vector<std::vector<Rational>>& excluded) {
  if (f1.dim() != f2.dim() || f1.dim() == 0) throw InvalidArgument("isotropic_search: forms of unequal dimension");
  if (height_bound < 1) throw InvalidArgument("isotropic_search: height bound must be >= 1");
  const std::size_t d = f1.dim();
  for (const auto& l : excluded)
    if (l.size() != d) throw InvalidArgument("isotropic_search: excluded hyperplane has wrong length");
  const auto m1 = integral(f1.matrix()), m2 = integral(f2.matrix());
  const std::size_t last = d - 1;

  IsotropicResult res;
  res.height_bound = height_bound;
  std::vector<Integer> v(d, -height_bound);
  std::vector<long> z1, z2;
  bool all1 = false, all2 = false;

  auto coefficients = [&](const std::vector<std::vector<Integer>>& m, Integer& qa, Integer& qb, Integer& qc) {
    qa = m[last][last];
    qb = 0;
    for (std::size_t j = 0; j < last; ++j) qb += m[j][last] * v[j];
    qb *= 2;
    v[last] = 0;
    qc = value(m, v);
  };

  auto consider = [&](long z) {
    v[last] = z;
    std::vector<Integer> c = v;
    auto first = std::find_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; });
    if (first == c.end()) return;
    if (*first < 0)
      for (auto& x : c) x = -x;
    Integer g = 0;
    for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 1) return;
    if (value(m1, c) != 0 || value(m2, c) != 0) return;
    for (const auto& l : excluded) {
      Rational s = 0;
      for (std::size_t i = 0; i < d; ++i) s += l[i] * c[i];
      if (sgn(s) == 0) return;
    }
    if (!res.found || precedes(c, res.vector)) {
      res.found = true;
      res.vector = std::move(c);
    }
  };

  for (std::size_t i = 0; i < d; ++i) v[i] = -height_bound;
  while (true) {
    ++res.prefixes_examined;
    Integer a1, b1, c1, a2, b2, c2;
    coefficients(m1, a1, b1, c1);
    integer_roots(a1, b1, c1, height_bound, z1, all1);
    if (all1) {
      coefficients(m2, a2, b2, c2);
      integer_roots(a2, b2, c2, height_bound, z2, all2);
      if (all2) {
        z2.clear();
        for (long z = -height_bound; z <= height_bound; ++z) z2.push_back(z);
      }
      for (long z : z2) consider(z);
    } else {
      for (long z : z1) consider(z);
    }
    // advance the prefix odometer
    std::size_t k = 0;
    while (k < last && v[k] == height_bound) v[k++] = -height_bound;
    if (k == last) break;
    v[k] += 1;
  }
  if (res.found) {
    res.certificate = "common zero found; least in (max-norm, |coordinate|, sign) order";
  } else {
    res.certificate = "no primitive integer common zero with max-norm <= " + std::to_string(height_bound) +
                      " off the " + std::to_string(excluded.size()) +
                      " excluded hyperplane(s); search exhaustive within this bound only";
  }
  return res;
}

}  // namespace ecrank
