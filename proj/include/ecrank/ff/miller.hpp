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

#pragma once

#include <vector>

#include "ecrank/ff/element.hpp"

namespace ecrank {

/// Raised when a multiset of points does not sum to O; carries the sum.
class DivisorSumError : public InvalidArgument {
 public:
  explicit DivisorSumError(QuadPoint defect);
  const QuadPoint& defect() const noexcept { return defect_; }

 private:
  QuadPoint defect_;
};

/// The function f in L(nO), n = |points|, with div f = sum (P_i) - n(O),
/// scaled so that its leading basis coefficient is 1.
///
/// Built as a product of chord/tangent lines over a product of vertical lines
/// (Miller accumulation), the vertical factors being removed by exact
/// polynomial division. Points may lie over one common Q(sqrt d); the
/// multiset must be Galois-stable so that f has rational coefficients.
FFElement function_with_divisor(const WeierstrassCurve& e, const std::vector<QuadPoint>& points);
FFElement function_with_divisor(const WeierstrassCurve& e, const std::vector<RationalPoint>& points);

/// Projective point (a_0 : ... : a_{n-1}), normalized so the first nonzero
/// coordinate is 1.
struct SymPoint {
  std::vector<Rational> coords;

  static SymPoint normalized(std::vector<Rational> c);
  friend bool operator==(const SymPoint& a, const SymPoint& b) { return a.coords == b.coords; }
};

/// Coordinates of function_with_divisor(points) in rr_basis(n).
SymPoint symmetrize(const WeierstrassCurve& e, const std::vector<QuadPoint>& points);
SymPoint symmetrize(const WeierstrassCurve& e, const std::vector<RationalPoint>& points);

/// The element of L(nO) with the given projective coordinates.
FFElement function_of(const WeierstrassCurve& e, const SymPoint& s);

}  // namespace ecrank
