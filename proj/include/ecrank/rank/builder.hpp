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
#include <string>
#include <vector>

#include "ecrank/arith/bigfloat.hpp"
#include "ecrank/arith/square_class.hpp"
#include "ecrank/elliptic/curve.hpp"
#include "ecrank/elliptic/height.hpp"

namespace ecrank {

enum class CandidateStatus { accepted, nonpositive, square, class_dependent };

std::string to_string(CandidateStatus s);

struct CandidateRecord {
  Rational x;
  Rational w;
  /// Square class of w; absent when w = 0.
  std::optional<SquareClass> d;
  CandidateStatus status = CandidateStatus::nonpositive;
};

/// Classifies x against the classes accepted so far and extends `basis` on
/// acceptance: w = x^3 + a x + b must be positive, not a square, and
/// F2-independent of the basis.
CandidateRecord classify_candidate(const WeierstrassCurve& e, const Rational& x, SquareClassBasis& basis);

/// Largest real root of x^3 + a x + b, as an isolated approximation.
BigFloat largest_real_root(const WeierstrassCurve& e, long prec = kDefaultPrecision);

struct ScanOptions {
  Rational stride = 1;
  /// Upper limit on examined candidates.
  std::size_t max_candidates = 100000;
};

/// Scans x = start, start + stride, ... until `count` candidates are accepted,
/// recording every rejection. start must exceed the largest real root of
/// x^3 + a x + b (checked exactly with a Sturm count); otherwise
/// InvalidArgument reports the root. Records are a deterministic function of
/// (E, start, stride), so a longer scan extends a shorter one.
std::vector<CandidateRecord> candidate_scan(const WeierstrassCurve& e, const Rational& start, std::size_t count,
                                            const ScanOptions& opts = {});

/// (x, v sqrt d) with v^2 d = w and v > 0; its Galois conjugate is its
/// negative. Requires an accepted record.
QuadPoint lift_point(const WeierstrassCurve& e, const CandidateRecord& record);

struct TorsionScreen {
  unsigned order_bound = kTorsionBoundQuadratic;
  BigFloat height;
  BigFloat height_error;
};

struct RegulatorCheck {
  std::size_t points_used = 0;
  BigFloat value;
  BigFloat error;
};

struct IndependenceCertificate {
  WeierstrassCurve curve;
  std::vector<QuadPoint> points;
  /// Square class kernel of each point's field Q(sqrt d).
  std::vector<Integer> classes;
  std::vector<TorsionScreen> torsion_screen;
  std::optional<RegulatorCheck> regulator;
  std::string conclusion;
};

inline const std::vector<std::string> kEvidenceLayers = {"square-class independence", "non-torsion", "not in E(Q)"};

struct CertifyOptions {
  unsigned torsion_bound = kTorsionBoundQuadratic;
  double height_threshold = kHeightPositivity;
  /// Number of leading points in the regulator check (0 disables it).
  std::size_t regulator_points = 6;
  double regulator_threshold = kRegulatorTolerance;
  long prec = kDefaultPrecision;
};

/// Certifies that the points are independent and non-torsion. Every point
/// must have rational x and y = v sqrt d with d a nontrivial squarefree class
/// (layer "not in E(Q)"); the classes must be F2-independent (layer
/// "class-dependence"); each point must have no order <= the torsion bound
/// and height above the threshold (layer "torsion"); the regulator of the
/// leading points must exceed its threshold (layer "regulator"). Failures
/// raise VerificationError naming the layer and the point.
IndependenceCertificate certify_independence(const WeierstrassCurve& e, const std::vector<QuadPoint>& points,
                                             const CertifyOptions& opts = {});

/// The automorphism sigma of Kbar whose fixed field is the base of the tower.
enum class AutomorphismKind { complex_conjugation, other };

struct Strategy {
  bool implemented = false;
  std::string description;
};

/// Complex conjugation: quadratic twists by positive classes, run by
/// candidate_scan. Any other sigma needs a ground-field extension that is not
/// implemented; the returned strategy says so.
Strategy select_strategy(AutomorphismKind kind);

}  // namespace ecrank
