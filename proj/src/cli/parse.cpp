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

#include "ecrank/cli/parse.hpp"

#include <optional>

namespace ecrank {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

WeierstrassCurve parse_curve(const std::string& text) {
  std::optional<Rational> a, b;
  for (const auto& part : split(text, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw InvalidArgument("curve: expected a=..,b=.., got \"" + text + "\"");
    std::string key = part.substr(0, eq);
    Rational val = parse_rational(part.substr(eq + 1));
    if (key == "a" && !a) {
      a = val;
    } else if (key == "b" && !b) {
      b = val;
    } else {
      throw InvalidArgument("curve: unexpected key \"" + key + "\"");
    }
  }
  if (!a || !b) throw InvalidArgument("curve: both a and b are required");
  return WeierstrassCurve(*a, *b);
}

RationalPoint parse_point(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw InvalidArgument("point: expected x,y, got \"" + text + "\"");
  return RationalPoint::affine(parse_rational(parts[0]), parse_rational(parts[1]));
}

std::vector<RationalPoint> parse_points(const std::string& text) {
  std::vector<RationalPoint> pts;
  for (const auto& p : split(text, ';'))
    if (!p.empty()) pts.push_back(parse_point(p));
  return pts;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& p : split(text, ',')) out.push_back(parse_rational(p));
  return out;
}

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& q : parse_rationals(text)) {
    if (q.get_den() != 1) throw InvalidArgument("expected integers, got " + to_string(q));
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace ecrank
