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

#include "ecrank/arith/bigfloat.hpp"
#include "ecrank/elliptic/curve.hpp"

namespace ecrank {

/// A height value with a rigorous-in-intent error bound: tail bound of the
/// doubling series + Mahler-measure error + estimated rounding error.
struct HeightResult {
  BigFloat value;
  BigFloat error;
  int doublings = 0;
};

inline constexpr double kHeightTargetError = 1e-8;

/// Absolute logarithmic Weil height of x in Q or Q(sqrt d), via the Mahler
/// measure of its minimal polynomial.
BigFloat weil_height(const QuadExt& x, long prec = kDefaultPrecision);

/// Canonical height lim 4^-n h(x(2^n P)) of any point whose x-coordinate is
/// x (x in Q or Q(sqrt d)). Uses h without the factor 1/2, so
/// canonical_height(2P) = 4 canonical_height(P).
///
/// The limit is evaluated as h(x_0) + sum_n 4^-(n+1) (h(x_{n+1}) - 4 h(x_n)).
/// Each bracket is computed exactly in terms of local contributions: one per
/// complex embedding (tracked as a normalized projective pair) and one per
/// place above a prime dividing the resultant of the doubling forms (tracked
/// p-adically); all other places contribute zero. The bracket is bounded by
/// curve constants, which bounds the truncated tail.
HeightResult canonical_height_of_x(const WeierstrassCurve& e, const QuadExt& x, long prec = kDefaultPrecision);

HeightResult canonical_height(const WeierstrassCurve& e, const RationalPoint& p, long prec = kDefaultPrecision);
HeightResult canonical_height(const WeierstrassCurve& e, const QuadPoint& p, long prec = kDefaultPrecision);

/// Symmetric Gram matrix of the height pairing <P,Q> = (h(P+Q) - h(P) - h(Q))/2.
struct HeightPairingMatrix {
  std::vector<QuadPoint> points;
  std::vector<std::vector<BigFloat>> gram;
  BigFloat det;
  /// Bound on |det| error induced by the entry errors (first-order).
  BigFloat det_error;
  BigFloat tolerance;
};

inline constexpr double kRegulatorTolerance = 1e-3;
inline constexpr double kHeightPositivity = 1e-4;

/// Points may lie over a common Q(sqrt d), or be rational-x points over
/// distinct quadratic fields (then x(P+Q) lies in Q(sqrt(d_P d_Q))).
HeightPairingMatrix height_pairing_matrix(const WeierstrassCurve& e, const std::vector<QuadPoint>& points,
                                          long prec = kDefaultPrecision, double tolerance = kRegulatorTolerance);

/// Determinant of the height pairing matrix.
BigFloat regulator(const WeierstrassCurve& e, const std::vector<QuadPoint>& points, long prec = kDefaultPrecision);
BigFloat regulator(const WeierstrassCurve& e, const std::vector<RationalPoint>& points, long prec = kDefaultPrecision);

/// det > tolerance and every diagonal entry > 1e-4.
bool independence_verdict(const HeightPairingMatrix& m);

/// x(P+Q) for P, Q that may lie over different quadratic fields; only the
/// x-coordinates matter because the height is computed from x alone.
std::optional<QuadExt> sum_x_coordinate(const WeierstrassCurve& e, const QuadPoint& p, const QuadPoint& q);

/// Determinant of a square BigFloat matrix by Gaussian elimination with
/// partial pivoting.
BigFloat determinant(std::vector<std::vector<BigFloat>> m);

}  // namespace ecrank
