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
#include "ecrank/arith/poly.hpp"

namespace ecrank {

/// A complex root together with a disk radius such that the disk contains
/// exactly one root of the polynomial and no other computed disk meets it.
struct IsolatedRoot {
  Complex z;
  BigFloat radius;
  bool real = false;      // the root is known to be real
  unsigned multiplicity = 1;
};

/// Roots of a squarefree polynomial with rational coefficients.
///
/// Aberth-Ehrlich iteration, then certification by Weierstrass disks
/// D(z_i, deg*|W_i|), which isolate the roots when pairwise disjoint. Real
/// roots are identified with a Sturm count and snapped to the real axis.
/// Precision is doubled up to three times before PrecisionError is raised.
std::vector<IsolatedRoot> isolate_roots(const QPoly& squarefree, long prec = kDefaultPrecision);

/// All roots with multiplicities, via squarefree decomposition.
std::vector<IsolatedRoot> isolate_roots_with_multiplicity(const QPoly& p, long prec = kDefaultPrecision);

/// Evaluates p at a complex point (coefficients rounded to the point's precision).
Complex eval_complex(const QPoly& p, const Complex& z);

/// True iff p is irreducible over Q. Exact for degree <= 3; for degree <= 16
/// a numeric search over root subsets proposes factors that are confirmed or
/// refuted by exact division. Higher degrees are rejected.
bool is_irreducible(const QPoly& p);

/// Absolute logarithmic Weil height of a root of min_poly:
/// log(Mahler measure) / deg(min_poly). degree_of_field must be a positive
/// multiple of deg(min_poly); the result does not depend on it. Error is at
/// most 2^(-prec/2).
BigFloat mahler_height(const ZPoly& min_poly, int degree_of_field, long prec = kDefaultPrecision);

}  // namespace ecrank
