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

#include "ecrank/ff/element.hpp"
#include "ecrank/pencil/forms.hpp"

namespace ecrank {

/// Basis of the functionals on L((n+1)O) vanishing exactly on D(L(nO)),
/// as coordinate vectors against rr_basis(n + 1), scaled to integers.
/// An element g of L((n+1)O) is a derivative of some f in L(nO) iff both
/// functionals vanish on g. Requires n >= 4 even.
std::vector<std::vector<Rational>> exactness_functionals(const WeierstrassCurve& e, int n);

/// y - y_P - s (x - x_P), s the tangent slope at P; divisor 2(P) + (-2P) - 3(O).
FFElement tangent_line(const WeierstrassCurve& e, const RationalPoint& p);

enum class PencilCase { I, II };

/// The two quadratic conditions on h for l h^2 to be a derivative.
///
/// Case I (n = 4m):  h = a_0 + ... + a_{m-1} x^{m-1} + y (b_0 + ... + b_{m-3} x^{m-3} + t x^{m-2})
/// Case II (n = 4m+2): h = a_0 + ... + a_{m-1} x^{m-1} + t x^m + y (b_0 + ... + b_{m-2} x^{m-2})
///
/// t homogenizes the fixed top term and is the last variable, so forms live
/// in (n - 4)/2 + 1 variables. forms[i](v) = functionals[i](l h_v^2).
struct PencilSystem {
  WeierstrassCurve curve;
  int n = 0;
  int m = 0;
  PencilCase pencil_case = PencilCase::I;
  RationalPoint p;
  FFElement l;
  /// Monomial multiplying each variable; the last is the homogenized top term.
  std::vector<FFElement> monomials;
  std::vector<std::string> variables;
  std::vector<std::vector<Rational>> functionals;
  QuadraticForm forms[2];

  /// h for a coefficient vector (not rescaled).
  FFElement h_of(const std::vector<Rational>& v) const;
  /// Linear forms t = 0 (hyperplane at infinity) and h(-2P) = 0.
  std::vector<std::vector<Rational>> excluded_hyperplanes() const;
};

/// Requires n >= 8 even, P affine with 2P != O and 3P != O.
PencilSystem build_pencil(const WeierstrassCurve& e, const RationalPoint& p, int n);

/// A critical value of f: the roots of `factor`, each with contact order
/// `contact` (the sum of m - 1 over the zeros of f - lambda).
struct BranchFactor {
  QPoly factor;
  int contact = 0;
  bool odd() const { return contact % 2 != 0; }
};

struct GenusReport {
  /// prod over affine zeros Z of D(f) of (lambda - f(Z)), with multiplicity;
  /// degree pole_order(f) + 1.
  QPoly branch_polynomial;
  std::vector<BranchFactor> branch;
  /// Contact at the pole, n - 1.
  int pole_contact = 0;
  /// Number of points of odd contact, including the pole.
  int odd_points = 0;
  int genus = 0;
};

/// Genus of a double cover of P^1 branched at b points (b even): b/2 - 1.
int double_cover_genus(int branch_points);

/// Genus of the double cover of the lambda-line branched at the points of
/// odd contact of f: B/2 - 1. The branch polynomial is the characteristic
/// polynomial of multiplication by f on Q[E]/(D f), exact.
GenusReport genus_of_preimage(const FFElement& f);

struct ConstructionReport {
  FFElement f;
  FFElement h;
  Rational lambda_p;
  /// Multiplicities of the zeros of f - lambda_p, descending.
  std::vector<long> divisor_shape;
  GenusReport genus;
};

/// Rebuilds h from a common zero (t != 0, h(-2P) != 0), solves D f = l h^2
/// exactly with f having no constant term, and checks the divisor of
/// f - f(-2P): a double zero at -2P, every other zero of odd order.
/// Failures raise VerificationError naming the layer.
ConstructionReport verify_construction(const PencilSystem& sys, const std::vector<Integer>& solution);
ConstructionReport verify_construction(const WeierstrassCurve& e, const RationalPoint& p, int n,
                                       const std::vector<Integer>& solution);

}  // namespace ecrank
