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

#include "ecrank/monodromy/monodromy.hpp"

#include <algorithm>
#include <numeric>

#include "ecrank/arith/roots.hpp"
#include "ecrank/ff/divisor.hpp"
#include "ecrank/pencil/construction.hpp"

namespace ecrank {

namespace {

using Sheet = std::pair<Complex, Complex>;

BigFloat dist(const Complex& a, const Complex& b) { return abs(a - b); }

BigFloat sheet_dist(const Sheet& a, const Sheet& b) { return max(dist(a.first, b.first), dist(a.second, b.second)); }

BigFloat min_sheet_dist(const std::vector<Sheet>& s) {
  BigFloat m(-1.0, s.front().first.precision());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      BigFloat d = sheet_dist(s[i], s[j]);
      if (m.sign() < 0 || d < m) m = d;
    }
  return m;
}

// One piece of a loop in the lambda plane: a line a -> b, or the arc
// center + r e^{i(theta0 + sweep s)}, s in [0, 1].
struct Segment {
  bool arc = false;
  Complex a, b, center;
  BigFloat radius, theta0, sweep;

  Complex at(double s) const {
    long prec = a.precision();
    BigFloat t(s, prec);
    if (!arc) return a + (b - a) * t;
    return center + polar(radius, theta0 + sweep * t);
  }
  Segment reversed() const {
    Segment r = *this;
    if (!arc) {
      std::swap(r.a, r.b);
    } else {
      r.theta0 = theta0 + sweep;
      r.sweep = -sweep;
    }
    return r;
  }
};

Segment line(const Complex& a, const Complex& b) {
  Segment s;
  s.a = a;
  s.b = b;
  return s;
}

Segment arc(const Complex& center, const BigFloat& r, const BigFloat& theta0, const BigFloat& sweep) {
  Segment s;
  s.arc = true;
  s.a = center + polar(r, theta0);
  s.center = center;
  s.radius = r;
  s.theta0 = theta0;
  s.sweep = sweep;
  return s;
}

// Sheets of f - lambda = 0 tracked as points (x, y) on E.
class Tracker {
 public:
  Tracker(const FFElement& f, long prec)
      : u_(f.u()), v_(f.v()), du_(u_.derivative()), dv_(v_.derivative()), w_(f.w()), dw_(w_.derivative()),
        prec_(prec), tol_(pow2(-prec / 2, prec)) {}

  // Moves every sheet along the segment; throws PrecisionError on step underflow.
  void follow(const Segment& seg, std::vector<Sheet>& sheets) const {
    double s = 0, h = 0.125;
    int streak = 0;
    while (s < 1) {
      h = std::min(h, 1 - s);
      if (h < 0x1p-48) throw PrecisionError("monodromy: path tracking step underflow");
      Complex la = seg.at(s), lb = seg.at(s + h);
      auto next = step(sheets, la, lb);
      if (!next) {
        h /= 2;
        streak = 0;
        continue;
      }
      sheets = std::move(*next);
      s += h;
      if (++streak >= 2) h = std::min(2 * h, 0.25);
    }
  }

 private:
  std::optional<std::vector<Sheet>> step(const std::vector<Sheet>& cur, const Complex& la, const Complex& lb) const {
    BigFloat guard = min_sheet_dist(cur) / BigFloat(3.0, prec_);
    Complex dl = lb - la;
    std::vector<Sheet> out;
    out.reserve(cur.size());
    for (const auto& [x0, y0] : cur) {
      Complex det = jacobian_det(x0, y0);
      if (det.re.is_zero() && det.im.is_zero()) return std::nullopt;
      Complex x = x0 + Complex(BigFloat(2.0, prec_) * y0.re, BigFloat(2.0, prec_) * y0.im) / det * dl;
      Complex y = y0 + eval_complex(dw_, x0) / det * dl;
      if (!correct(x, y, lb, guard / BigFloat(2.0, prec_))) return std::nullopt;
      Sheet s{x, y};
      if (!(sheet_dist(s, {x0, y0}) < guard)) return std::nullopt;
      out.push_back(std::move(s));
    }
    if (!(min_sheet_dist(out) > guard)) return std::nullopt;
    return out;
  }

  // det of the Jacobian of (u + v y - lambda, y^2 - w); equals D(f) on E.
  Complex jacobian_det(const Complex& x, const Complex& y) const {
    Complex a = eval_complex(du_, x) + eval_complex(dv_, x) * y;
    Complex two_y(BigFloat(2.0, prec_) * y.re, BigFloat(2.0, prec_) * y.im);
    return a * two_y + eval_complex(v_, x) * eval_complex(dw_, x);
  }

  // Newton on (u + v y - lambda, y^2 - w). The first correction must stay
  // below `first_bound` so the iterate cannot jump to another sheet.
  bool correct(Complex& x, Complex& y, const Complex& lambda, const BigFloat& first_bound) const {
    for (int it = 0; it < 10; ++it) {
      Complex vx = eval_complex(v_, x);
      Complex f1 = eval_complex(u_, x) + vx * y - lambda;
      Complex f2 = y * y - eval_complex(w_, x);
      Complex a = eval_complex(du_, x) + eval_complex(dv_, x) * y;
      Complex c = -eval_complex(dw_, x);
      Complex d(BigFloat(2.0, prec_) * y.re, BigFloat(2.0, prec_) * y.im);
      Complex det = a * d - vx * c;
      if (det.re.is_zero() && det.im.is_zero()) return false;
      Complex dx = (vx * f2 - f1 * d) / det;
      Complex dy = (c * f1 - a * f2) / det;
      x += dx;
      y += dy;
      BigFloat step = max(abs(dx), abs(dy));
      if (it == 0 && !(step < first_bound)) return false;
      BigFloat scale = BigFloat(1.0, prec_) + max(abs(x), abs(y));
      if (step <= tol_ * scale) return true;
    }
    return false;
  }

  QPoly u_, v_, du_, dv_, w_, dw_;
  long prec_;
  BigFloat tol_;
};

// Spoke from the base to the near point of the circle around `target`, with
// arcs around every other critical value disk it crosses. A critical value
// on the spoke itself is passed on the right, so it lies to the left of the
// path, as if its argument were slightly larger.
std::vector<Segment> spoke(const Complex& base, const std::vector<Complex>& crit, const std::vector<BigFloat>& radii,
                           std::size_t target, const BigFloat& tie) {
  long prec = base.precision();
  const Complex& c = crit[target];
  BigFloat len0 = dist(c, base);
  Complex dir = (c - base) / Complex(len0, BigFloat(prec));
  BigFloat len = len0 - radii[target];
  struct Crossing {
    BigFloat enter, exit;
    std::size_t k;
    bool ccw;
  };
  std::vector<Crossing> cross;
  for (std::size_t k = 0; k < crit.size(); ++k) {
    if (k == target) continue;
    Complex rel = conj(dir) * (crit[k] - base);
    const BigFloat& t = rel.re;
    const BigFloat& hgt = rel.im;
    if (!(abs(hgt) < radii[k]) || t.sign() <= 0 || !(t < len + radii[k])) continue;
    BigFloat half = sqrt(radii[k] * radii[k] - hgt * hgt);
    BigFloat enter = t - half, exit = min(t + half, len);
    if (!(enter.sign() > 0) || !(enter < exit)) throw PrecisionError("monodromy: loop construction failed");
    bool left = abs(hgt) <= tie * t || hgt.sign() > 0;
    cross.push_back({enter, exit, k, left});
  }
  std::sort(cross.begin(), cross.end(), [](const Crossing& a, const Crossing& b) { return a.enter < b.enter; });
  std::vector<Segment> out;
  Complex pos = base;
  BigFloat two_pi = BigFloat(2.0, prec) * pi(prec);
  for (const auto& cr : cross) {
    Complex e1 = base + dir * cr.enter, e2 = base + dir * cr.exit;
    out.push_back(line(pos, e1));
    BigFloat th1 = arg(e1 - crit[cr.k]), th2 = arg(e2 - crit[cr.k]);
    BigFloat sw = th2 - th1;
    if (cr.ccw) {
      while (sw.sign() <= 0) sw += two_pi;
      while (sw > two_pi) sw -= two_pi;
    } else {
      while (sw.sign() >= 0) sw -= two_pi;
      while (sw < -two_pi) sw += two_pi;
    }
    out.push_back(arc(crit[cr.k], radii[cr.k], th1, sw));
    pos = e2;
  }
  Complex end = base + dir * len;
  if (dist(pos, end) > BigFloat(0.0, prec)) out.push_back(line(pos, end));
  return out;
}

std::vector<int> cycle_type_of(const Permutation& p) {
  std::vector<int> t;
  for (auto c : p.cycle_type()) t.push_back(static_cast<int>(c));
  return t;
}

MonodromyResult compute(const FFElement& f, long prec) {
  const int n = f.pole_order();
  MonodromyResult res;
  res.n = n;
  res.precision = prec;
  auto bps = critical_values(f, prec);

  BigFloat min_re = bps.front().lambda.re;
  for (const auto& b : bps) min_re = min(min_re, b.lambda.re);
  Integer fl;
  mpfr_get_z(fl.get_mpz_t(), min_re.raw(), MPFR_RNDD);
  res.base = Rational(fl - 1);
  Complex base(res.base, prec);

  std::vector<Complex> crit;
  for (const auto& b : bps) crit.push_back(b.lambda);
  const std::size_t k = crit.size();
  std::vector<BigFloat> radii(k, BigFloat(prec));
  for (std::size_t i = 0; i < k; ++i) {
    BigFloat r = dist(crit[i], base);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) r = min(r, dist(crit[i], crit[j]));
    radii[i] = r / BigFloat(2.0, prec);
  }

  // Loop order: increasing argument from the base, farther first on ties.
  BigFloat tie = pow2(-prec / 3, prec);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<BigFloat> args, lens;
  for (const auto& c : crit) {
    args.push_back(arg(c - base));
    lens.push_back(dist(c, base));
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (abs(args[a] - args[b]) <= tie) return lens[a] > lens[b];
    return args[a] < args[b];
  });

  for (const auto& e : fiber_roots(f, res.base, prec)) {
    if (e.multiplicity != 1) throw VerificationError("monodromy", "base point is a critical value");
    res.sheets.emplace_back(e.place.x, e.place.y);
  }
  if (static_cast<int>(res.sheets.size()) != n) throw VerificationError("monodromy", "wrong number of sheets at base");
  std::sort(res.sheets.begin(), res.sheets.end(), [](const Sheet& a, const Sheet& b) {
    if (!(a.first.re == b.first.re)) return a.first.re < b.first.re;
    if (!(a.first.im == b.first.im)) return a.first.im < b.first.im;
    if (!(a.second.re == b.second.re)) return a.second.re < b.second.re;
    return a.second.im < b.second.im;
  });
  const BigFloat match = min_sheet_dist(res.sheets) / BigFloat(3.0, prec);

  Tracker tracker(f, prec);
  auto run_loop = [&](const std::vector<Segment>& path) {
    std::vector<Sheet> s = res.sheets;
    for (const auto& seg : path) tracker.follow(seg, s);
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!(sheet_dist(s[static_cast<std::size_t>(i)], res.sheets[static_cast<std::size_t>(j)]) < match)) continue;
        if (img[static_cast<std::size_t>(i)] >= 0 || used[static_cast<std::size_t>(j)])
          throw VerificationError("monodromy", "ambiguous root matching");
        img[static_cast<std::size_t>(i)] = j;
        used[static_cast<std::size_t>(j)] = true;
      }
      if (img[static_cast<std::size_t>(i)] < 0) throw VerificationError("monodromy", "sheet lost during tracking");
    }
    return Permutation(img);
  };

  BigFloat two_pi = BigFloat(2.0, prec) * pi(prec);
  for (std::size_t idx : order) {
    auto out = spoke(base, crit, radii, idx, tie);
    std::vector<Segment> path = out;
    Complex near = out.empty() ? base : (out.back().arc ? out.back().at(1.0) : out.back().b);
    path.push_back(arc(crit[idx], radii[idx], arg(near - crit[idx]), two_pi));
    for (auto it = out.rbegin(); it != out.rend(); ++it) path.push_back(it->reversed());
    res.branch.push_back(bps[idx]);
    res.generators.push_back(run_loop(path));
  }

  // Clockwise circle through the base enclosing every critical value:
  // center base + R with R >= max |c - base|^2 / Re(c - base).
  BigFloat big(1.0, prec);
  for (const auto& c : crit) {
    Complex rel = c - base;
    big = max(big, norm(rel) / rel.re);
  }
  big += BigFloat(1.0, prec);
  Complex center = base + Complex(big, BigFloat(prec));
  res.at_infinity = run_loop({arc(center, big, pi(prec), -two_pi)});

  std::vector<Permutation> gens = res.generators;
  res.transitive = orbits_of(n, gens).size() == 1;
  res.primitive = is_primitive(n, gens);
  for (const auto& g : gens) res.has_transposition = res.has_transposition || extract_transposition(g).applicable;
  try {
    res.group = PermGroup(n, gens);
    res.order = Integer(static_cast<unsigned long>(res.group->order()));
  } catch (const InvalidArgument&) {
    res.group.reset();
  }
  if (!res.order && res.primitive && res.has_transposition) {
    Integer fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    res.order = fact;
  }

  for (std::size_t i = 0; i < res.branch.size(); ++i)
    if (cycle_type_of(res.generators[i]) != res.branch[i].multiplicities)
      throw VerificationError("monodromy", "loop cycle type differs from the local multiplicities at " +
                                               res.branch[i].lambda.re.to_string(12) + " + " +
                                               res.branch[i].lambda.im.to_string(12) + "i");
  if (cycle_type_of(res.at_infinity) != std::vector<int>{n})
    throw VerificationError("monodromy", "loop around infinity is not an n-cycle");
  if (!res.loop_product().is_identity()) throw VerificationError("monodromy", "loop product is not the identity");
  if (res.hurwitz_sum() != 2 * n) throw VerificationError("monodromy", "Riemann-Hurwitz sum differs from 2n");
  return res;
}

unsigned long odd_lcm(const std::vector<int>& parts) {
  unsigned long c = 1;
  for (int p : parts)
    if (p % 2 != 0) c = std::lcm(c, static_cast<unsigned long>(p));
  return c;
}

}  // namespace

std::vector<BranchPoint> critical_values(const FFElement& f, long prec) {
  if (f.is_constant()) throw InvalidArgument("critical_values: constant function");
  const int n = f.pole_order();
  GenusReport g = genus_of_preimage(f);
  std::vector<BranchPoint> out;
  for (const auto& bf : g.branch)
    for (auto& r : isolate_roots(bf.factor, prec)) {
      BranchPoint b;
      b.lambda = r.z;
      b.radius = r.radius;
      b.real = r.real;
      b.factor = bf.factor;
      b.contact = bf.contact;
      out.push_back(std::move(b));
    }
  BigFloat sep(-1.0, prec);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      BigFloat d = dist(out[i].lambda, out[j].lambda);
      if (sep.sign() < 0 || d < sep) sep = d;
    }

  Divisor dz = divisor_of(ff_derivative(f), prec);
  for (const auto& e : dz.entries) {
    if (e.place.infinity || e.multiplicity <= 0) continue;
    Complex val = f.eval(e.place.x, e.place.y);
    std::size_t best = 0;
    for (std::size_t i = 1; i < out.size(); ++i)
      if (dist(val, out[i].lambda) < dist(val, out[best].lambda)) best = i;
    if (sep.sign() > 0 && !(dist(val, out[best].lambda) < sep / BigFloat(2.0, prec)))
      throw PrecisionError("critical_values: cannot match a zero of D(f) to a critical value");
    out[best].multiplicities.push_back(static_cast<int>(e.multiplicity) + 1);
  }
  for (auto& b : out) {
    int c = 0, s = 0;
    for (int m : b.multiplicities) {
      c += m - 1;
      s += m;
    }
    if (c != b.contact || s > n) throw VerificationError("monodromy", "local multiplicities disagree with contact orders");
    b.multiplicities.resize(b.multiplicities.size() + static_cast<std::size_t>(n - s), 1);
    std::sort(b.multiplicities.rbegin(), b.multiplicities.rend());
  }
  std::sort(out.begin(), out.end(), [](const BranchPoint& a, const BranchPoint& b) {
    if (!(a.lambda.re == b.lambda.re)) return a.lambda.re < b.lambda.re;
    return a.lambda.im < b.lambda.im;
  });
  return out;
}

Permutation MonodromyResult::loop_product() const {
  Permutation p = at_infinity;
  for (auto it = generators.rbegin(); it != generators.rend(); ++it) p = p * *it;
  return p;
}

int MonodromyResult::hurwitz_sum() const {
  int s = n - at_infinity.cycle_count();
  for (const auto& g : generators) s += n - g.cycle_count();
  return s;
}

MonodromyResult monodromy_group(const FFElement& f, long prec) {
  if (f.is_constant()) throw InvalidArgument("monodromy_group: constant function");
  if (f.pole_order() > Permutation::kMaxDegree) throw InvalidArgument("monodromy_group: pole order above 16");
  for (int attempt = 0;; ++attempt) {
    try {
      return compute(f, prec << attempt);
    } catch (const PrecisionError&) {
      if (attempt == 3) throw;
    } catch (const VerificationError&) {
      if (attempt == 3) throw;
    }
  }
}

TranspositionResult extract_transposition(const Permutation& loop) {
  TranspositionResult r;
  std::vector<int> parts = cycle_type_of(loop);
  int twos = 0, evens = 0;
  for (int p : parts) {
    if (p % 2 == 0) ++evens;
    if (p == 2) ++twos;
  }
  if (evens == 0) r.reason = "no cycle of even length";
  else if (evens > 1) r.reason = "more than one cycle of even length";
  else if (twos == 0) r.reason = "even cycle of length at least 4";
  if (!r.reason.empty()) return r;
  r.power = odd_lcm(parts);
  Permutation t = Permutation::identity(loop.degree());
  for (unsigned long i = 0; i < r.power; ++i) t = loop * t;
  if (!t.is_transposition()) throw VerificationError("monodromy", "odd-lcm power is not a transposition");
  r.applicable = true;
  r.transposition = t;
  return r;
}

TranspositionResult extract_transposition(const MonodromyResult& result, std::size_t index) {
  if (index >= result.generators.size()) throw InvalidArgument("extract_transposition: generator index out of range");
  TranspositionResult r = extract_transposition(result.generators[index]);
  if (r.applicable && result.group && !result.group->contains(*r.transposition))
    throw VerificationError("monodromy", "transposition outside the monodromy group");
  return r;
}

}  // namespace ecrank
