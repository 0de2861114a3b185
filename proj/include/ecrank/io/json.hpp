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

#include <json.hpp>

#include "ecrank/arith/quadext.hpp"
#include "ecrank/elliptic/curve.hpp"
#include "ecrank/ff/element.hpp"
#include "ecrank/ff/miller.hpp"
#include "ecrank/perm/permutation.hpp"
#include "ecrank/rank/builder.hpp"

namespace ecrank {

using Json = nlohmann::ordered_json;

/// Rationals are canonical "p/q" strings; parsing also accepts JSON integers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// A rational as "p/q"; an irrational element as {"d": int, "u": "p/q", "v": "p/q"}.
Json to_json(const QuadExt& q);
QuadExt quad_from_json(const Json& j);

Json to_json(const WeierstrassCurve& e);
WeierstrassCurve curve_from_json(const Json& j);

/// {"x": ..., "y": ...} or "O".
Json to_json(const RationalPoint& p);
Json to_json(const QuadPoint& p);
QuadPoint point_from_json(const Json& j);

/// {"u": [coefficients, low degree first], "v": [...]}.
Json to_json(const FFElement& f);
FFElement ff_from_json(const WeierstrassCurve& e, const Json& j);

Json to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const Json& j);

/// 1-based image array.
Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

Json to_json(const SymPoint& s);

/// Certificate object: curve, points, classes, torsion_screen, regulator,
/// lemma_basis, conclusion. Heights are decimal strings.
Json to_json(const IndependenceCertificate& c);

}  // namespace ecrank
