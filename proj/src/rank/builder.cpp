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

#include "ecrank/rank/builder.hpp"

#include <algorithm>

#include "ecrank/arith/poly.hpp"
#include "ecrank/arith/roots.hpp"

namespace ecrank {

std::string to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::accepted:
      return "accepted";
    case CandidateStatus::nonpositive:
      return "nonpositive";
    case CandidateStatus::square:
      return "square";
    case CandidateStatus::class_dependent:
      return "class-dependent";
  }
  return "?";
}

CandidateRecord classify_candidate(const WeierstrassCurve& e, const Rational& x, SquareClassBasis& basis) {
  CandidateRecord r;
  r.x = x;
  r.w = e.rhs(x);
  if (sgn(r.w) == 0) return r;
  r.d = SquareClass::of(r.w);
  if (sgn(r.w) < 0) return r;
  if (r.d->is_square()) {
    r.status = CandidateStatus::square;
  } else if (basis.try_extend(*r.d)) {
    r.status = CandidateStatus::accepted;
  } else {
    r.status = CandidateStatus::class_dependent;
  }
  return r;
}

BigFloat largest_real_root(const WeierstrassCurve& e, long prec) {
  QPoly w = squarefree_part(e.rhs(QPoly::x()));
  std::optional<BigFloat> best;
  for (const auto& r : isolate_roots(w, prec))
    if (r.real && (!best || r.z.re > *best)) best = r.z.re;
  return *best;  // a real cubic has a real root
}

std::vector<CandidateRecord> candidate_scan(const WeierstrassCurve& e, const Rational& start, std::size_t count,
                                            const ScanOptions& opts) {
  if (sgn(opts.stride) <= 0) throw InvalidArgument("candidate_scan: stride must be positive");
  QPoly w = e.rhs(QPoly::x());
  if (sturm_count_above(sturm_sequence(squarefree_part(w)), start) != 0 || sgn(w.eval(start)) == 0)
    throw InvalidArgument("candidate_scan: start " + to_string(start) + " does not exceed the largest real root " +
                          largest_real_root(e).to_string(12) + " of x^3 + a x + b");
  SquareClassBasis basis;
  std::vector<CandidateRecord> out;
  std::size_t accepted = 0;
  Rational x = start;
  while (accepted < count) {
    if (out.size() >= opts.max_candidates)
      throw InvalidArgument("candidate_scan: no " + std::to_string(count) + " accepted candidates among the first " +
                            std::to_string(opts.max_candidates));
    out.push_back(classify_candidate(e, x, basis));
    if (out.back().status == CandidateStatus::accepted) ++accepted;
    x += opts.stride;
  }
  return out;
}

QuadPoint lift_point(const WeierstrassCurve& e, const CandidateRecord& record) {
  if (record.status != CandidateStatus::accepted || !record.d)
    throw InvalidArgument("lift_point: candidate " + to_string(record.x) + " was not accepted");
  if (record.w != e.rhs(record.x)) throw InvalidArgument("lift_point: record does not belong to this curve");
  const Integer& d = record.d->kernel();
  auto v = rational_sqrt(record.w / Rational(d));
  if (!v) throw VerificationError("lift", "w / d is not a square");
  return QuadPoint::affine(QuadExt(record.x), QuadExt(d, 0, *v));
}

IndependenceCertificate certify_independence(const WeierstrassCurve& e, const std::vector<QuadPoint>& points,
                                             const CertifyOptions& opts) {
  if (points.empty()) throw InvalidArgument("certify_independence: no points");
  IndependenceCertificate cert{e, points, {}, {}, std::nullopt, {}};
  SquareClassBasis basis;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const std::string who = "point " + std::to_string(i + 1);
    if (p.infinity || !on_curve(e, p)) throw VerificationError("not in E(Q)", who + " is not an affine point of E");
    if (!p.x.is_rational() || sgn(p.y.u()) != 0 || p.y.is_rational())
      throw VerificationError("not in E(Q)", who + " is not of the form (x, v sqrt d) with x rational, v != 0");
    if (!basis.try_extend(SquareClass::of(p.y.d())))
      throw VerificationError("class-dependence", who + ": class " + p.y.d().get_str() + " is in the span of the others");
    cert.classes.push_back(p.y.d());
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string who = "point " + std::to_string(i + 1);
    if (auto ord = torsion_order(e, points[i], opts.torsion_bound))
      throw VerificationError("torsion", who + " has order " + std::to_string(*ord));
    HeightResult h = canonical_height(e, points[i], opts.prec);
    if (!(h.value - h.error > BigFloat(opts.height_threshold, opts.prec)))
      throw VerificationError("torsion", who + " has canonical height " + h.value.to_string(10));
    cert.torsion_screen.push_back({opts.torsion_bound, h.value, h.error});
  }
  std::size_t r = std::min(opts.regulator_points, points.size());
  if (r > 0) {
    std::vector<QuadPoint> lead(points.begin(), points.begin() + static_cast<long>(r));
    HeightPairingMatrix m = height_pairing_matrix(e, lead, opts.prec, opts.regulator_threshold);
    if (!(m.det - m.det_error > BigFloat(opts.regulator_threshold, opts.prec)))
      throw VerificationError("regulator", "regulator of the first " + std::to_string(r) + " points is " +
                                               m.det.to_string(10));
    cert.regulator = RegulatorCheck{r, m.det, m.det_error};
  }
  cert.conclusion = "linearly independent non-torsion points";
  return cert;
}

Strategy select_strategy(AutomorphismKind kind) {
  if (kind == AutomorphismKind::complex_conjugation)
    return {true, "quadratic twists by positive square classes: points (x, v sqrt d) with x^3 + a x + b > 0"};
  return {false,
          "extend K to a totally imaginary field fixed by sigma and run the pencil construction over it; "
          "number fields beyond quadratic ones are not implemented"};
}

}  // namespace ecrank
