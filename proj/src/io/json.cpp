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

#include "ecrank/io/json.hpp"

namespace ecrank {

namespace {

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw InvalidArgument("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw InvalidArgument("expected an integer");
}

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidArgument("expected a rational string, got " + j.dump());
}

Json to_json(const QuadExt& q) {
  if (q.is_rational()) return to_json(q.u());
  return Json{{"d", integer_json(q.d())}, {"u", to_json(q.u())}, {"v", to_json(q.v())}};
}

QuadExt quad_from_json(const Json& j) {
  if (!j.is_object()) return QuadExt(rational_from_json(j));
  return QuadExt(integer_from_json(field(j, "d")), rational_from_json(field(j, "u")), rational_from_json(field(j, "v")));
}

Json to_json(const WeierstrassCurve& e) { return Json{{"a", to_json(e.a())}, {"b", to_json(e.b())}}; }

WeierstrassCurve curve_from_json(const Json& j) {
  return WeierstrassCurve(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")));
}

Json to_json(const RationalPoint& p) {
  if (p.infinity) return "O";
  return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

Json to_json(const QuadPoint& p) {
  if (p.infinity) return "O";
  return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}};
}

QuadPoint point_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "O") return QuadPoint::O();
  return QuadPoint::affine(quad_from_json(field(j, "x")), quad_from_json(field(j, "y")));
}

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of rationals");
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const FFElement& f) { return Json{{"u", to_json(f.u().coeffs())}, {"v", to_json(f.v().coeffs())}}; }

FFElement ff_from_json(const WeierstrassCurve& e, const Json& j) {
  return FFElement(e, QPoly(rationals_from_json(field(j, "u"))), QPoly(rationals_from_json(field(j, "v"))));
}

Json to_json(const Permutation& p) { return Json(p.one_based()); }

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a permutation image array");
  return Permutation::from_one_based(j.get<std::vector<int>>());
}

Json to_json(const SymPoint& s) { return to_json(s.coords); }

Json to_json(const IndependenceCertificate& c) {
  Json pts = Json::array(), classes = Json::array(), screen = Json::array();
  for (const auto& p : c.points) pts.push_back(to_json(p));
  for (const auto& d : c.classes) classes.push_back(integer_json(d));
  for (const auto& t : c.torsion_screen)
    screen.push_back(Json{{"order_bound", t.order_bound},
                          {"height", t.height.to_string(20)},
                          {"height_error", t.height_error.to_string(3)}});
  Json j{{"curve", to_json(c.curve)}, {"points", pts}, {"classes", classes}, {"torsion_screen", screen}};
  if (c.regulator) {
    j["regulator"] = c.regulator->value.to_string(20);
    j["regulator_points"] = c.regulator->points_used;
    j["regulator_error"] = c.regulator->error.to_string(3);
  } else {
    j["regulator"] = nullptr;
  }
  j["lemma_basis"] = kEvidenceLayers;
  j["conclusion"] = c.conclusion;
  return j;
}

}  // namespace ecrank
