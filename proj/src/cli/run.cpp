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

#include "ecrank/cli/run.hpp"

#include <fstream>
#include <sstream>

#include "ecrank/arith/roots.hpp"
#include "ecrank/cli/parse.hpp"
#include "ecrank/ff/divisor.hpp"
#include "ecrank/monodromy/monodromy.hpp"
#include "ecrank/pencil/construction.hpp"
#include "ecrank/perm/group.hpp"
#include "ecrank/rank/builder.hpp"

namespace ecrank {

namespace {

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json complex_json(const Complex& z) { return Json::array({z.re.to_string(20), z.im.to_string(20)}); }

Json integers_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json config_echo(const RunConfig& c) {
  Json j;
  if (!c.curve.empty()) j["curve"] = to_json(parse_curve(c.curve));
  j["precision"] = c.precision;
  if (c.command == "points") {
    j["count"] = c.count;
    j["start"] = c.start.empty() ? Json(nullptr) : to_json(parse_rational(c.start));
    j["stride"] = to_json(parse_rational(c.stride));
    j["torsion_bound"] = c.torsion_bound;
    j["regulator_points"] = c.regulator_points;
  } else if (c.command == "group") {
    j["n"] = c.n;
    j["exhaustive"] = c.exhaustive;
  } else if (c.command == "pencil") {
    j["point"] = to_json(parse_point(c.point));
    j["n"] = c.n;
    j["escalate_n"] = c.escalate_n;
    j["height_bound"] = c.height_bound;
  } else if (c.command == "monodromy") {
    if (!c.solution.empty()) {
      j["point"] = to_json(parse_point(c.point));
      j["n"] = c.n;
      j["solution"] = integers_json(parse_integers(c.solution));
    } else {
      j["u"] = to_json(c.u.empty() ? std::vector<Rational>{0, 1} : parse_rationals(c.u));
      j["v"] = to_json(c.v.empty() ? std::vector<Rational>{} : parse_rationals(c.v));
    }
  } else if (c.command == "symmetrize") {
    Json pts = Json::array();
    for (const auto& p : parse_points(c.points)) pts.push_back(to_json(p));
    j["points"] = pts;
  }
  return j;
}

Rational default_start(const WeierstrassCurve& e) {
  BigFloat r = largest_real_root(e);
  Integer fl;
  mpfr_get_z(fl.get_mpz_t(), r.raw(), MPFR_RNDD);
  return Rational(fl + 1 > 1 ? fl + 1 : Integer(1));
}

Json run_points(const RunConfig& c, std::ostringstream& sum) {
  auto e = parse_curve(c.curve);
  Rational start = c.start.empty() ? default_start(e) : parse_rational(c.start);
  ScanOptions so;
  so.stride = parse_rational(c.stride);
  auto recs = candidate_scan(e, start, c.count, so);
  Json scan = Json::array();
  std::vector<QuadPoint> pts;
  for (const auto& r : recs) {
    scan.push_back(Json{{"x", to_json(r.x)},
                        {"w", to_json(r.w)},
                        {"class", r.d ? Json(r.d->kernel().get_str()) : Json(nullptr)},
                        {"status", to_string(r.status)}});
    if (r.status == CandidateStatus::accepted) pts.push_back(lift_point(e, r));
  }
  CertifyOptions co;
  co.torsion_bound = c.torsion_bound;
  co.regulator_points = c.regulator_points;
  co.prec = c.precision;
  auto cert = certify_independence(e, pts, co);
  sum << "curve " << e.to_string() << ", start " << to_string(start) << "\n";
  sum << "candidates examined " << recs.size() << ", accepted " << pts.size() << "\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    sum << "  P" << i + 1 << " = " << to_string(pts[i]) << "  h = " << cert.torsion_screen[i].height.to_string(10) << "\n";
  if (cert.regulator)
    sum << "regulator of the first " << cert.regulator->points_used << " points: " << cert.regulator->value.to_string(10)
        << "\n";
  sum << cert.conclusion << "\n";
  return Json{{"start", to_json(start)}, {"stride", to_json(so.stride)}, {"scan", scan}, {"certificate", to_json(cert)}};
}

Json run_group(const RunConfig& c, std::ostringstream& sum) {
  const int n = c.n;
  auto groups = transitive_groups_with_transposition(n, !c.exhaustive);
  Json list = Json::array();
  sum << "transitive subgroups of S_" << n << " with a transposition"
      << (c.exhaustive ? "" : " (up to conjugacy)") << ": " << groups.size() << "\n";
  sum << "  order    m  k   |M|  |K|  fix(H)  fix(H^A_n)\n";
  for (const auto& h : groups) {
    auto bd = block_decomposition(h);
    Json gens = Json::array();
    for (const auto& g : h.generators()) gens.push_back(to_json(g));
    Json classes = Json::array();
    for (const auto& cl : bd.classes) {
      Json a = Json::array();
      for (int i : cl) a.push_back(i + 1);
      classes.push_back(a);
    }
    int fix = fixed_space_dimension(h);
    Json fix_even = nullptr;
    if (n >= 3) fix_even = fixed_space_dimension(h.even_part());
    list.push_back(Json{{"generators", gens},
                        {"order", h.order()},
                        {"classes", classes},
                        {"m", bd.m},
                        {"k", bd.k},
                        {"M_order", bd.M_order},
                        {"K_order", bd.K_image.order()},
                        {"K_transitive", bd.K_image.is_transitive()},
                        {"even_part_transitive", n >= 3 ? Json(bd.even_part_transitive) : Json(nullptr)},
                        {"fixed_dimension", fix},
                        {"fixed_dimension_even_part", fix_even}});
    char line[128];
    std::snprintf(line, sizeof line, "  %5zu  %3d %2d %5zu %4zu  %6d  %10s\n", h.order(), bd.m, bd.k, bd.M_order,
                  bd.K_image.order(), fix, n >= 3 ? std::to_string(fix_even.get<int>()).c_str() : "n/a");
    sum << line;
  }
  Json body{{"n", n}, {"groups", list}};
  if (n % 2 == 0 && n <= 10) {
    auto mc = alternating_min_cycles(n);
    body["alternating_min_cycles"] = Json{{"cycles", mc.cycles}, {"witness", to_json(mc.witness)}};
    sum << "minimum cycle count over A_" << n << ": " << mc.cycles << ", witness " << mc.witness.to_string() << "\n";
  }
  sum << "all checks passed\n";
  return body;
}

Json construction_json(const ConstructionReport& rep) {
  Json branch = Json::array();
  for (const auto& b : rep.genus.branch)
    branch.push_back(Json{{"factor", to_json(b.factor.coeffs())}, {"contact", b.contact}, {"odd", b.odd()}});
  return Json{{"f", to_json(rep.f)},
              {"h", to_json(rep.h)},
              {"lambda_p", to_json(rep.lambda_p)},
              {"divisor_shape", rep.divisor_shape},
              {"branch_polynomial", to_json(rep.genus.branch_polynomial.coeffs())},
              {"branch", branch},
              {"pole_contact", rep.genus.pole_contact},
              {"odd_points", rep.genus.odd_points},
              {"genus", rep.genus.genus}};
}

Json run_pencil(const RunConfig& c, std::ostringstream& sum, int& exit_code) {
  auto e = parse_curve(c.curve);
  auto p = parse_point(c.point);
  if (!on_curve(e, p)) throw InvalidArgument("point " + to_string(p) + " is not on the curve");
  int last = c.escalate_n > 0 ? c.escalate_n : c.n;
  Json attempts = Json::array();
  exit_code = kExitNotFound;
  for (int n = c.n; n <= last; n += 2) {
    auto sys = build_pencil(e, p, n);
    auto pr = pencil_rank(sys.forms[0], sys.forms[1]);
    auto res = isotropic_search(sys.forms[0], sys.forms[1], c.height_bound, sys.excluded_hyperplanes());
    Json a{{"n", n},
           {"case", sys.pencil_case == PencilCase::I ? "I" : "II"},
           {"variables", sys.variables},
           {"forms", Json::array({matrix_json(sys.forms[0].matrix()), matrix_json(sys.forms[1].matrix())})},
           {"pencil", Json{{"generic_rank", pr.generic_rank},
                           {"rank_at_infinity", pr.rank_at_infinity},
                           {"min_rank", pr.min_rank}}},
           {"search", Json{{"height_bound", res.height_bound},
                           {"found", res.found},
                           {"vector", res.found ? integers_json(res.vector) : Json(nullptr)},
                           {"prefixes_examined", res.prefixes_examined},
                           {"certificate", res.certificate}}}};
    sum << "n = " << n << ": " << sys.variables.size() << " variables, pencil min rank " << pr.min_rank;
    if (!res.found) {
      sum << ", no common zero up to height " << c.height_bound << " (" << res.prefixes_examined << " prefixes)\n";
      attempts.push_back(a);
      continue;
    }
    auto rep = verify_construction(sys, res.vector);
    a["construction"] = construction_json(rep);
    sum << ", common zero";
    for (const auto& x : res.vector) sum << " " << x.get_str();
    sum << "\n  D(f) = l h^2 exact; lambda_P = " << to_string(rep.lambda_p) << "; divisor shape";
    for (long m : rep.divisor_shape) sum << " " << m;
    sum << "; genus " << rep.genus.genus << "\n";
    attempts.push_back(a);
    exit_code = kExitOk;
    break;
  }
  return Json{{"attempts", attempts}, {"found", exit_code == kExitOk}};
}

FFElement monodromy_function(const RunConfig& c, const WeierstrassCurve& e) {
  if (!c.solution.empty()) {
    return verify_construction(e, parse_point(c.point), c.n, parse_integers(c.solution)).f;
  }
  std::vector<Rational> u = c.u.empty() ? std::vector<Rational>{0, 1} : parse_rationals(c.u);
  std::vector<Rational> v = c.v.empty() ? std::vector<Rational>{} : parse_rationals(c.v);
  return FFElement(e, QPoly(u), QPoly(v));
}

Json run_monodromy(const RunConfig& c, std::ostringstream& sum) {
  auto e = parse_curve(c.curve);
  FFElement f = monodromy_function(c, e);
  auto r = monodromy_group(f, c.precision);
  Json sheets = Json::array(), branch = Json::array(), gens = Json::array();
  for (const auto& [x, y] : r.sheets) sheets.push_back(Json{{"x", complex_json(x)}, {"y", complex_json(y)}});
  for (const auto& b : r.branch)
    branch.push_back(Json{{"lambda", complex_json(b.lambda)},
                          {"real", b.real},
                          {"factor", to_json(b.factor.coeffs())},
                          {"contact", b.contact},
                          {"multiplicities", b.multiplicities}});
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  Json witness = nullptr;
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    auto t = extract_transposition(r, i);
    if (!t.applicable) continue;
    witness = Json{{"generator", i}, {"power", t.power}, {"transposition", to_json(*t.transposition)}};
    break;
  }
  sum << "n = " << r.n << " sheets over base " << to_string(r.base) << ", " << r.branch.size()
      << " finite branch points\n";
  for (std::size_t i = 0; i < r.branch.size(); ++i) {
    sum << "  " << r.branch[i].lambda.re.to_string(8) << " + " << r.branch[i].lambda.im.to_string(8) << "i  type";
    for (int m : r.branch[i].multiplicities) sum << " " << m;
    sum << "  loop " << r.generators[i].to_string() << "\n";
  }
  sum << "  infinity  loop " << r.at_infinity.to_string() << "\n";
  sum << "group order " << (r.order ? r.order->get_str() : std::string("unknown")) << ", "
      << (r.transitive ? "transitive" : "not transitive") << ", " << (r.primitive ? "primitive" : "imprimitive")
      << "\n";
  return Json{{"function", to_json(f)},
              {"n", r.n},
              {"base", to_json(r.base)},
              {"precision", r.precision},
              {"sheets", sheets},
              {"branch", branch},
              {"generators", gens},
              {"at_infinity", to_json(r.at_infinity)},
              {"loop_product_identity", r.loop_product().is_identity()},
              {"hurwitz_sum", r.hurwitz_sum()},
              {"transitive", r.transitive},
              {"primitive", r.primitive},
              {"order", r.order ? Json(r.order->get_str()) : Json(nullptr)},
              {"group_closed", r.group.has_value()},
              {"transposition", witness}};
}

Json run_symmetrize(const RunConfig& c, std::ostringstream& sum) {
  auto e = parse_curve(c.curve);
  auto pts = parse_points(c.points);
  auto f = function_with_divisor(e, pts);
  auto s = symmetrize(e, pts);
  sum << "f = " << to_string(f.u()) << " + (" << to_string(f.v()) << ") y\nphi = (";
  for (std::size_t i = 0; i < s.coords.size(); ++i) sum << (i ? " : " : "") << to_string(s.coords[i]);
  sum << ")\n";
  return Json{{"n", pts.size()}, {"function", to_json(f)}, {"sympoint", to_json(s)}};
}

}  // namespace

void validate(const RunConfig& c) {
  static const std::vector<std::string> commands{"points", "group", "pencil", "monodromy", "symmetrize", "verify"};
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
    throw InvalidArgument("unknown command \"" + c.command + "\"");
  if (c.precision < 64 || c.precision > 4096) throw InvalidArgument("--precision must be in [64, 4096]");
  if (c.command == "verify") {
    if (c.report.empty()) throw InvalidArgument("verify needs a report path");
    return;
  }
  if (c.command != "group" && c.curve.empty()) throw InvalidArgument(c.command + " needs --curve a=..,b=..");
  if (c.command == "points") {
    if (c.count < 1 || c.count > 10000) throw InvalidArgument("--count must be in [1, 10000]");
    if (c.torsion_bound < 1 || c.torsion_bound > 1000) throw InvalidArgument("--torsion-bound must be in [1, 1000]");
    if (sgn(parse_rational(c.stride)) <= 0) throw InvalidArgument("--stride must be positive");
  }
  if (c.command == "group" && (c.n < 2 || c.n > 6)) throw InvalidArgument("group: --n must be in [2, 6]");
  if (c.command == "pencil") {
    if (c.point.empty()) throw InvalidArgument("pencil needs --point x,y");
    if (c.n < 8 || c.n % 2 != 0 || c.n > 40) throw InvalidArgument("pencil: --n must be even in [8, 40]");
    if (c.escalate_n != 0 && (c.escalate_n < c.n || c.escalate_n > 40))
      throw InvalidArgument("--escalate-n must be in [n, 40]");
    if (c.height_bound < 1 || c.height_bound > 100000) throw InvalidArgument("--height-bound must be in [1, 100000]");
  }
  if (c.command == "monodromy" && !c.solution.empty() && c.point.empty())
    throw InvalidArgument("monodromy with --solution needs --point and --n");
  if (c.command == "symmetrize" && c.points.empty()) throw InvalidArgument("symmetrize needs --points x,y;x,y;...");
}

Report run(const RunConfig& config) {
  Report rep;
  rep.body = Json{{"schema", kReportSchema}, {"tool", "ecrank"}, {"version", kToolVersion}, {"command", config.command}};
  std::ostringstream sum;
  try {
    validate(config);
    if (config.command == "verify") {
      auto v = verify_file(config.report);
      rep.body["report"] = config.report;
      rep.body["pass"] = v.pass;
      rep.body["layer"] = v.layer;
      rep.body["detail"] = v.detail;
      rep.exit_code = v.pass ? kExitOk : kExitError;
      rep.summary = v.pass ? "pass\n" : "fail(" + v.layer + "): " + v.detail + "\n";
      return rep;
    }
    rep.body["config"] = config_echo(config);
    if (config.command == "points") {
      rep.body["result"] = run_points(config, sum);
    } else if (config.command == "group") {
      rep.body["result"] = run_group(config, sum);
    } else if (config.command == "pencil") {
      rep.body["result"] = run_pencil(config, sum, rep.exit_code);
    } else if (config.command == "monodromy") {
      rep.body["result"] = run_monodromy(config, sum);
    } else {
      rep.body["result"] = run_symmetrize(config, sum);
    }
  } catch (const VerificationError& e) {
    rep.body["error"] = Json{{"type", "verification"}, {"layer", e.layer()}, {"message", e.what()}};
    rep.exit_code = kExitError;
    sum << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    rep.body["error"] = Json{{"type", "invalid"}, {"message", e.what()}};
    rep.exit_code = kExitError;
    sum << "error: " << e.what() << "\n";
  }
  rep.summary = sum.str();
  return rep;
}

}  // namespace ecrank
