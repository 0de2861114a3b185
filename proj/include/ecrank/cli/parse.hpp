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

#include <string>
#include <vector>

#include "ecrank/elliptic/curve.hpp"

namespace ecrank {

/// "a=<p/q>,b=<p/q>" in either order.
WeierstrassCurve parse_curve(const std::string& text);
/// "x,y" with rational coordinates.
RationalPoint parse_point(const std::string& text);
/// "x1,y1;x2,y2;...".
std::vector<RationalPoint> parse_points(const std::string& text);
/// Comma-separated rationals; empty text gives an empty list.
std::vector<Rational> parse_rationals(const std::string& text);
std::vector<Integer> parse_integers(const std::string& text);

}  // namespace ecrank
