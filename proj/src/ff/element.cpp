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

#include "ecrank/ff/element.hpp"

namespace ecrank {

FFElement::FFElement(const WeierstrassCurve& e, QPoly u, QPoly v) : e_(e), u_(std::move(u)), v_(std::move(v)) {}

int FFElement::pole_order() const {
  if (is_zero()) return -1;
  int pu = u_.is_zero() ? -1 : 2 * u_.degree();
  int pv = v_.is_zero() ? -1 : 2 * v_.degree() + 3;
  return std::max(pu, pv);
}

QPoly FFElement::w() const { return QPoly({e_.b(), e_.a(), Rational(0), Rational(1)}); }

QPoly FFElement::norm() const { return u_ * u_ - v_ * v_ * w(); }

Rational FFElement::eval(const RationalPoint& p) const {
  if (p.infinity) throw InvalidArgument("FFElement::eval at O");
  return u_.eval(p.x) + v_.eval(p.x) * p.y;
}

QuadExt FFElement::eval(const QuadPoint& p) const {
  if (p.infinity) throw InvalidArgument("FFElement::eval at O");
  auto conv = [](const Rational& c) { return QuadExt(c); };
  return u_.eval_as(p.x, conv) + v_.eval_as(p.x, conv) * p.y;
}

Complex FFElement::eval(const Complex& x, const Complex& y) const {
  long prec = x.precision();
  auto conv = [prec](const Rational& c) { return Complex(c, prec); };
  return u_.eval_as(x, conv) + v_.eval_as(x, conv) * y;
}

void FFElement::check_same_curve(const FFElement& o) const {
  if (!(e_ == o.e_)) throw InvalidArgument("function field elements on different curves");
}

FFElement& FFElement::operator+=(const FFElement& o) {
  check_same_curve(o);
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

FFElement& FFElement::operator-=(const FFElement& o) {
  check_same_curve(o);
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

FFElement& FFElement::operator*=(const FFElement& o) {
  check_same_curve(o);
  QPoly u = u_ * o.u_ + v_ * o.v_ * w();
  v_ = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(u);
  return *this;
}

FFElement& FFElement::operator*=(const Rational& s) {
  u_ *= s;
  v_ *= s;
  return *this;
}

std::string FFElement::to_string() const {
  if (v_.is_zero()) return ecrank::to_string(u_);
  std::string vs = "(" + ecrank::to_string(v_) + ")*y";
  if (u_.is_zero()) return vs;
  return ecrank::to_string(u_) + " + " + vs;
}

FFElement ff_derivative(const FFElement& f) {
  QPoly w = f.w();
  QPoly du = QPoly(Rational(2)) * f.v().derivative() * w + f.v() * w.derivative();
  QPoly dv = QPoly(Rational(2)) * f.u().derivative();
  return {f.curve(), du, dv};
}

int rr_pole_order(std::size_t index) { return index == 0 ? 0 : static_cast<int>(index) + 1; }

namespace {

FFElement monomial_of_pole_order(const WeierstrassCurve& e, int k) {
  if (k == 0) return FFElement::constant(e, 1);
  if (k % 2 == 0) return {e, QPoly::monomial(Rational(1), static_cast<std::size_t>(k / 2)), {}};
  return {e, {}, QPoly::monomial(Rational(1), static_cast<std::size_t>((k - 3) / 2))};
}

}  // namespace

std::vector<FFElement> rr_basis(const WeierstrassCurve& e, int n) {
  if (n < 2) throw InvalidArgument("rr_basis: n must be at least 2");
  std::vector<FFElement> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) out.push_back(monomial_of_pole_order(e, rr_pole_order(i)));
  return out;
}

std::vector<Rational> rr_coordinates(const FFElement& f, int n) {
  if (f.pole_order() > n) throw InvalidArgument("rr_coordinates: element is not in L(nO)");
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    int k = rr_pole_order(i);
    if (k == 0) c[i] = f.u().coeff(0);
    else if (k % 2 == 0) c[i] = f.u().coeff(static_cast<std::size_t>(k / 2));
    else c[i] = f.v().coeff(static_cast<std::size_t>((k - 3) / 2));
  }
  return c;
}

FFElement from_rr_coordinates(const WeierstrassCurve& e, const std::vector<Rational>& coords) {
  std::vector<Rational> u, v;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    int k = rr_pole_order(i);
    std::size_t idx = k % 2 == 0 ? static_cast<std::size_t>(k / 2) : static_cast<std::size_t>((k - 3) / 2);
    auto& target = k % 2 == 0 ? u : v;
    if (target.size() <= idx) target.resize(idx + 1, Rational(0));
    target[idx] = coords[i];
  }
  return {e, QPoly(u), QPoly(v)};
}

int order_at(const FFElement& f, const RationalPoint& p) {
  if (f.is_zero()) throw InvalidArgument("order_at: zero function");
  if (p.infinity) throw InvalidArgument("order_at: use pole_order at O");
  if (!on_curve(f.curve(), p)) throw InvalidArgument("order_at: point not on curve");
  FFElement g = f;
  for (int k = 0;; ++k) {
    if (sgn(g.eval(p)) != 0) return k;
    g = ff_derivative(g);
  }
}

}  // namespace ecrank
