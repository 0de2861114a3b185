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

#include <optional>
#include <vector>

#include "ecrank/arith/bigfloat.hpp"
#include "ecrank/ff/element.hpp"

namespace ecrank {

/// A point of E over the algebraic closure: O, or an affine point given by
/// certified approximations, plus exact coordinates when they lie in Q or a
/// quadratic field.
struct Place {
  bool infinity = false;
  Complex x;
  Complex y;
  /// Radius of an isolating disk around x (zero when x is exact).
  BigFloat x_radius;
  std::optional<QuadPoint> exact;
};

struct DivisorEntry {
  Place place;
  long multiplicity = 0;
};

/// Finite formal sum of places with integer multiplicities.
struct Divisor {
  std::vector<DivisorEntry> entries;
  long degree() const;
  /// Multiset of multiplicities of the affine zeros, sorted descending.
  std::vector<long> zero_multiplicities() const;
};

/// Divisor of a nonzero polynomial element: affine zeros with exact
/// multiplicities and the pole at O.
///
/// With F = c (u' + v' y), c = gcd(u, v), the zero orders above a root x0
/// follow from the multiplicities k of x0 in c and e of x0 in
/// N = u'^2 - v'^2 w: at a 2-torsion point the order is 2k + e; otherwise one
/// point has k + e and its negative k. Roots are grouped through a gcd-free
/// basis and located with certified isolation; points with coordinates in
/// Q or Q(sqrt d) are also given exactly.
Divisor divisor_of(const FFElement& f, long prec = kDefaultPrecision);

/// Zeros of f - lambda with multiplicities summing to the pole order n.
std::vector<DivisorEntry> fiber_roots(const FFElement& f, const Rational& lambda, long prec = kDefaultPrecision);

}  // namespace ecrank
