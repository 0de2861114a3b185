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

#include <algorithm>
#include <fstream>

#include "ecrank/arith/square_class.hpp"
#include "ecrank/cli/run.hpp"
#include "ecrank/elliptic/height.hpp"
#include "ecrank/ff/miller.hpp"
#include "ecrank/monodromy/monodromy.hpp"
#include "ecrank/pencil/construction.hpp"
#include "ecrank/perm/group.hpp"

namespace ecrank {

namespace {

struct Fail {
  std::string layer, detail;
};

void require(bool ok, const std::string& layer, const std::string& detail) {
  if (!ok) throw Fail{layer, detail};
}

const Json& at(const Json& j, const char* key, const std::string& layer = "structure") {
  require(j.is_object() && j.contains(key), layer, std::string("missing \"") + key + "\"");
  return j.at(key);
}

BigFloat decimal(const Json& j, long prec) {
  BigFloat r(prec);
  require(j.is_string() && mpfr_set_str(r.raw(), j.get<std::string>().c_str(), 10, MPFR_RNDN) == 0, "structure",
          "malformed decimal " + j.dump());
  return r;
}

Integer class_of(const Json& j) {
  Rational q = rational_from_json(j);
  require(q.get_den() == 1, "structure", "class is not an integer");
  return q.get_num();
}

void verify_points(const Json& result, long prec) {
  const Json& cert = at(result, "certificate");
  WeierstrassCurve e = curve_from_json(at(cert, "curve"));
  const Json& pts = at(cert, "points");
  const Json& classes = at(cert, "classes");
  const Json& screen = at(cert, "torsion_screen");
  require(pts.is_array() && classes.is_array() && screen.is_array() && pts.size() == classes.size() &&
              pts.size() == screen.size() && !pts.empty(),
          "structure", "points, classes and torsion_screen differ in length");

  SquareClassBasis basis;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Integer d = class_of(classes[i]);
    require(basis.try_extend(SquareClass::of(d)), "class-dependence",
            "class " + d.get_str() + " of point " + std::to_string(i + 1) + " is in the span of the others");
  }

  std::vector<QuadPoint> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string who = "point " + std::to_string(i + 1);
    QuadPoint p = point_from_json(pts[i]);
    require(!p.infinity && on_curve(e, p), "curve-equation", who + " does not satisfy the curve equation");
    require(p.x.is_rational() && sgn(p.y.u()) == 0 && !p.y.is_rational(), "not in E(Q)",
            who + " is not of the form (x, v sqrt d)");
    Integer d = class_of(classes[i]);
    require(p.y.d() == d && SquareClass::of(e.rhs(p.x.u())).kernel() == d, "class-mismatch",
            who + " does not lie over Q(sqrt " + d.get_str() + ")");
    auto bound = at(screen[i], "order_bound").get<unsigned>();
    require(bound >= 1, "torsion", who + ": empty order bound");
    require(!torsion_order(e, p, bound), "torsion", who + " is torsion");
    HeightResult h = canonical_height(e, p, prec);
    require(h.value - h.error > BigFloat(kHeightPositivity, prec), "torsion", who + " has height below 1e-4");
    BigFloat stored = decimal(at(screen[i], "height"), prec);
    require(abs(stored - h.value).to_double() < 1e-6, "height", who + " height differs from the recomputed value");
    points.push_back(p);
  }

  const Json& reg = at(cert, "regulator");
  if (!reg.is_null()) {
    auto r = at(cert, "regulator_points").get<std::size_t>();
    require(r >= 1 && r <= points.size(), "structure", "regulator point count out of range");
    std::vector<QuadPoint> lead(points.begin(), points.begin() + static_cast<long>(r));
    HeightPairingMatrix m = height_pairing_matrix(e, lead, prec);
    require(m.det - m.det_error > BigFloat(kRegulatorTolerance, prec), "regulator", "regulator below 1e-3");
    require(abs(decimal(reg, prec) - m.det).to_double() < 1e-6, "regulator", "regulator differs from recomputation");
  }
  require(at(cert, "lemma_basis") == Json(kEvidenceLayers), "structure", "unexpected lemma_basis");
}

void verify_group(const Json& config, const Json& result) {
  const int n = at(result, "n").get<int>();
  require(n == at(config, "n").get<int>(), "structure", "n differs from the config");
  const Json& groups = at(result, "groups");
  bool exhaustive = at(config, "exhaustive").get<bool>();
  auto expected = transitive_groups_with_transposition(n, !exhaustive);
  require(groups.size() == expected.size(), "enumeration",
          "expected " + std::to_string(expected.size()) + " groups, report has " + std::to_string(groups.size()));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const Json& g = groups[i];
    std::vector<Permutation> gens;
    for (const auto& p : at(g, "generators")) gens.push_back(permutation_from_json(p));
    PermGroup h(n, gens);
    const std::string who = "group " + std::to_string(i + 1);
    require(h.order() == at(g, "order").get<std::size_t>(), "order", who + ": order differs");
    auto bd = block_decomposition(h);
    unsigned long mfact = 1;
    for (int j = 2; j <= bd.m; ++j) mfact *= static_cast<unsigned long>(j);
    unsigned long mk = 1;
    for (int j = 0; j < bd.k; ++j) mk *= mfact;
    require(bd.m == at(g, "m").get<int>() && bd.k == at(g, "k").get<int>(), "block", who + ": m or k differs");
    require(bd.M_order == mk && at(g, "M_order").get<std::size_t>() == mk, "block", who + ": |M| != (m!)^k");
    require(bd.K_image.is_transitive() && at(g, "K_transitive").get<bool>(), "block", who + ": K not transitive");
    require(fixed_space_dimension(h) == 1 && at(g, "fixed_dimension").get<int>() == 1, "fixed-space",
            who + ": fixed space of H is not a line");
    if (n >= 3) {
      require(h.even_part().is_transitive() && at(g, "even_part_transitive").get<bool>(), "even-part",
              who + ": H meet A_n not transitive");
      require(fixed_space_dimension(h.even_part()) == 1 && at(g, "fixed_dimension_even_part").get<int>() == 1,
              "fixed-space", who + ": fixed space of H meet A_n is not a line");
    }
  }
  if (result.contains("alternating_min_cycles")) {
    const Json& mc = result.at("alternating_min_cycles");
    Permutation w = permutation_from_json(at(mc, "witness"));
    require(w.degree() == n && w.sign() == 1 && w.cycle_count() == at(mc, "cycles").get<int>(), "alternating",
            "witness is not an even permutation with the stated cycle count");
    require(alternating_min_cycles(n).cycles == at(mc, "cycles").get<int>(), "alternating",
            "minimum cycle count differs");
  }
}

void verify_pencil(const Json& config, const Json& result) {
  WeierstrassCurve e = curve_from_json(at(config, "curve"));
  QuadPoint qp = point_from_json(at(config, "point"));
  RationalPoint p = RationalPoint::affine(qp.x.u(), qp.y.u());
  bool any = false;
  for (const auto& a : at(result, "attempts")) {
    int n = at(a, "n").get<int>();
    const std::string who = "n = " + std::to_string(n);
    auto sys = build_pencil(e, p, n);
    const Json& forms = at(a, "forms");
    for (int k = 0; k < 2; ++k) {
      const QMatrix& m = sys.forms[k].matrix();
      require(forms.size() == 2 && forms[k].size() == m.rows(), "forms", who + ": form size differs");
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          require(rational_from_json(forms[k][i][j]) == m(i, j), "forms", who + ": form entry differs");
    }
    const Json& s = at(a, "search");
    int bound = at(s, "height_bound").get<int>();
    if (!at(s, "found").get<bool>()) {
      auto res = isotropic_search(sys.forms[0], sys.forms[1], bound, sys.excluded_hyperplanes());
      require(!res.found, "search", who + ": a common zero exists within the bound");
      require(res.prefixes_examined == at(s, "prefixes_examined").get<std::uint64_t>(), "search",
              who + ": prefix count differs");
      continue;
    }
    std::vector<Integer> v;
    for (const auto& x : at(s, "vector")) v.push_back(Integer(x.get<std::string>()));
    std::vector<Rational> vq(v.begin(), v.end());
    require(sgn(sys.forms[0](vq)) == 0 && sgn(sys.forms[1](vq)) == 0, "isotropic", who + ": vector is not a common zero");
    for (const auto& l : sys.excluded_hyperplanes()) {
      Rational dot = 0;
      for (std::size_t i = 0; i < l.size(); ++i) dot += l[i] * vq[i];
      require(sgn(dot) != 0, "isotropic", who + ": vector lies on an excluded hyperplane");
    }
    ConstructionReport rep = verify_construction(sys, v);
    const Json& c = at(a, "construction");
    require(ff_from_json(e, at(c, "f")) == rep.f && ff_from_json(e, at(c, "h")) == rep.h, "identity",
            who + ": f or h differs");
    require(ff_derivative(rep.f) == sys.l * rep.h * rep.h, "identity", who + ": D(f) != l h^2");
    require(rational_from_json(at(c, "lambda_p")) == rep.lambda_p, "divisor shape", who + ": lambda_P differs");
    require(at(c, "divisor_shape").get<std::vector<long>>() == rep.divisor_shape, "divisor shape",
            who + ": divisor shape differs");
    require(at(c, "genus").get<int>() == rep.genus.genus, "genus", who + ": genus differs");
    any = true;
  }
  require(any == at(result, "found").get<bool>(), "structure", "found flag inconsistent with attempts");
}

void verify_monodromy(const Json& config, const Json& result, long prec) {
  WeierstrassCurve e = curve_from_json(at(config, "curve"));
  FFElement f = ff_from_json(e, at(result, "function"));
  const int n = at(result, "n").get<int>();
  require(f.pole_order() == n, "structure", "n differs from the pole order of f");
  std::vector<Permutation> gens;
  for (const auto& g : at(result, "generators")) gens.push_back(permutation_from_json(g));
  Permutation inf = permutation_from_json(at(result, "at_infinity"));
  const Json& branch = at(result, "branch");
  require(branch.size() == gens.size(), "structure", "one generator per branch point expected");

  // Local data re-derived from f.
  std::vector<std::vector<int>> want, got;
  for (const auto& b : critical_values(f, prec)) want.push_back(b.multiplicities);
  for (const auto& b : branch) got.push_back(at(b, "multiplicities").get<std::vector<int>>());
  std::vector<std::vector<int>> want_sorted = want, got_sorted = got;
  std::sort(want_sorted.begin(), want_sorted.end());
  std::sort(got_sorted.begin(), got_sorted.end());
  require(want_sorted == got_sorted, "critical-values", "local multiplicities differ from the recomputation");

  for (std::size_t i = 0; i < gens.size(); ++i)
    require(gens[i].degree() == n && gens[i].cycle_type() == got[i], "cycle-type",
            "generator " + std::to_string(i + 1) + " differs from its local multiplicities");
  require(inf.cycle_type() == std::vector<int>{n}, "cycle-type", "loop around infinity is not an n-cycle");
  Permutation prod = inf;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) prod = prod * *it;
  require(prod.is_identity(), "loop-product", "product of the loops is not the identity");
  int hs = n - inf.cycle_count();
  for (const auto& g : gens) hs += n - g.cycle_count();
  require(hs == 2 * n && at(result, "hurwitz_sum").get<int>() == hs, "riemann-hurwitz", "sum differs from 2n");
  require(orbits_of(n, gens).size() == 1 && at(result, "transitive").get<bool>(), "transitivity",
          "generators are not transitive");
  require(is_primitive(n, gens) == at(result, "primitive").get<bool>(), "primitivity", "primitivity flag differs");

  const Json& w = at(result, "transposition");
  if (!w.is_null()) {
    auto i = at(w, "generator").get<std::size_t>();
    require(i < gens.size(), "transposition", "witness generator out of range");
    auto t = extract_transposition(gens[i]);
    require(t.applicable && t.power == at(w, "power").get<unsigned long>() &&
                *t.transposition == permutation_from_json(at(w, "transposition")),
            "transposition", "witness differs from the recomputed power");
    Permutation q = Permutation::identity(n);
    for (unsigned long k = 0; k < t.power; ++k) q = q * gens[i];
    require(q == *t.transposition && q.cycle_type()[0] == 2 && q.cycle_count() == n - 1, "transposition",
            "power of the generator is not a transposition");
  }
}

void verify_symmetrize(const Json& config, const Json& result) {
  WeierstrassCurve e = curve_from_json(at(config, "curve"));
  std::vector<QuadPoint> pts;
  for (const auto& p : at(config, "points")) pts.push_back(point_from_json(p));
  auto f = function_with_divisor(e, pts);
  require(ff_from_json(e, at(result, "function")) == f, "function", "function differs from the recomputation");
  require(rationals_from_json(at(result, "sympoint")) == symmetrize(e, pts).coords, "sympoint",
          "symmetrized point differs");
}

}  // namespace

VerifyOutcome verify_report(const Json& report) {
  VerifyOutcome out;
  try {
    require(report.is_object() && report.value("schema", "") == kReportSchema, "schema", "unknown or missing schema");
    require(!report.contains("error"), "error", "report records a failed run");
    const std::string cmd = at(report, "command").get<std::string>();
    const Json& config = at(report, "config");
    const Json& result = at(report, "result");
    long prec = at(config, "precision").get<long>();
    if (cmd == "points") {
      verify_points(result, prec);
    } else if (cmd == "group") {
      verify_group(config, result);
    } else if (cmd == "pencil") {
      verify_pencil(config, result);
    } else if (cmd == "monodromy") {
      verify_monodromy(config, result, prec);
    } else if (cmd == "symmetrize") {
      verify_symmetrize(config, result);
    } else {
      throw Fail{"structure", "unknown command \"" + cmd + "\""};
    }
    out.pass = true;
  } catch (const Fail& f) {
    out.layer = f.layer;
    out.detail = f.detail;
  } catch (const VerificationError& e) {
    out.layer = e.layer();
    out.detail = e.what();
  } catch (const std::exception& e) {
    out.layer = "structure";
    out.detail = e.what();
  }
  return out;
}

VerifyOutcome verify_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {false, "structure", "cannot read " + path};
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    return {false, "structure", std::string("not JSON: ") + e.what()};
  }
  return verify_report(j);
}

}  // namespace ecrank
