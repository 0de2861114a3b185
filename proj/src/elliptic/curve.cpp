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

#include "ecrank/elliptic/curve.hpp"

namespace ecrank {

WeierstrassCurve::WeierstrassCurve(const Rational& a, const Rational& b)
    : a_(a), b_(b), disc_(-16 * (4 * a * a * a + 27 * b * b)) {
  if (sgn(disc_) == 0) throw InvalidArgument("singular curve: 4a^3 + 27b^2 = 0");
}

std::string WeierstrassCurve::to_string() const {
  return "y^2 = x^3 + (" + ecrank::to_string(a_) + ")x + (" + ecrank::to_string(b_) + ")";
}

std::optional<RationalPoint> to_rational(const QuadPoint& p) {
  if (p.infinity) return RationalPoint::O();
  if (!p.x.is_rational() || !p.y.is_rational()) return std::nullopt;
  return RationalPoint::affine(p.x.u(), p.y.u());
}

std::string to_string(const RationalPoint& p) {
  if (p.infinity) return "O";
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

std::string to_string(const QuadPoint& p) {
  if (p.infinity) return "O";
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

}  // namespace ecrank
