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

#include "ecrank/arith/quadext.hpp"

#include "ecrank/arith/square_class.hpp"
#include "ecrank/errors.hpp"

namespace ecrank {

bool is_valid_quadratic_d(const Integer& d) {
  if (d == 0 || d == 1) return false;
  return SquareClass::of(d).kernel() == d;
}

QuadExt::QuadExt(const Integer& d, const Rational& u, const Rational& v) : d_(d), u_(u), v_(v) {
  if (!is_valid_quadratic_d(d)) throw InvalidArgument("QuadExt: d = " + d.get_str() + " is not a valid squarefree d");
}

void QuadExt::adopt(const QuadExt& o) {
  if (o.d_ == 0) return;
  if (d_ == 0) {
    d_ = o.d_;
    return;
  }
  if (d_ != o.d_) throw InvalidArgument("QuadExt: mixing Q(sqrt " + d_.get_str() + ") and Q(sqrt " + o.d_.get_str() + ")");
}

QuadExt QuadExt::conj() const {
  QuadExt r = *this;
  r.v_ = -v_;
  return r;
}

Rational QuadExt::norm() const { return u_ * u_ - Rational(d_) * v_ * v_; }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw InvalidArgument("QuadExt: inverse of zero");
  Rational n = norm();
  QuadExt r = conj();
  r.u_ /= n;
  r.v_ /= n;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  adopt(o);
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  adopt(o);
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  adopt(o);
  Rational u = u_ * o.u_ + Rational(d_) * v_ * o.v_;
  v_ = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(u);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  adopt(o);
  return *this *= o.inverse();
}

QuadExt operator-(const QuadExt& a) {
  QuadExt r = a;
  r.u_ = -a.u_;
  r.v_ = -a.v_;
  return r;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.d_ != 0 && b.d_ != 0 && a.d_ != b.d_) return a.is_rational() && b.is_rational() && a.u_ == b.u_;
  return a.u_ == b.u_ && a.v_ == b.v_;
}

std::string QuadExt::to_string() const {
  if (is_rational()) return ecrank::to_string(u_);
  return ecrank::to_string(u_) + " + " + ecrank::to_string(v_) + "*sqrt(" + d_.get_str() + ")";
}

}  // namespace ecrank
