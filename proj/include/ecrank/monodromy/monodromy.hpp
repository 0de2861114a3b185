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
#include "ecrank/arith/poly.hpp"
#include "ecrank/ff/element.hpp"
#include "ecrank/perm/group.hpp"

namespace ecrank {

/// A critical value of f: a finite lambda where f - lambda has a multiple
/// zero.
struct BranchPoint {
  Complex lambda;
  /// Isolating radius of lambda as a root of `factor`.
  BigFloat radius;
  bool real = false;
  /// Squarefree factor of the branch polynomial having lambda as a root.
  QPoly factor;
  /// Sum of (m - 1) over the zeros of f - lambda.
  int contact = 0;
  /// Zero multiplicities of f - lambda, descending, summing to n.
  std::vector<int> multiplicities;
};

/// Finite critical values with local multiplicity profiles, ordered by
/// (real part, imaginary part). Multiplicities come from the zero orders of
/// D(f) (a zero of order e gives a zero of order e + 1 of f - f(Z)) and are
/// checked against the exact contact orders of the branch polynomial.
std::vector<BranchPoint> critical_values(const FFElement& f, long prec = kDefaultPrecision);

struct MonodromyResult {
  int n = 0;
  Rational base;
  /// The zeros (x, y) of f - base, indexed as sheets 0..n-1.
  std::vector<std::pair<Complex, Complex>> sheets;
  /// Branch points in loop order: increasing argument seen from the base,
  /// farther first on ties.
  std::vector<BranchPoint> branch;
  /// generators[i]: sheet permutation of the counterclockwise loop around
  /// branch[i].
  std::vector<Permutation> generators;
  /// Permutation of the loop around infinity (a clockwise circle enclosing
  /// every finite critical value).
  Permutation at_infinity;
  /// Closed group, when its order is at most PermGroup::kMaxOrder.
  std::optional<PermGroup> group;
  bool transitive = false;
  bool primitive = false;
  /// Some generator has an odd-lcm power that is a transposition.
  bool has_transposition = false;
  /// Group order: from the closure, or n! for a primitive group containing a
  /// transposition (Jordan); empty when neither applies.
  std::optional<Integer> order;
  long precision = 0;

  /// at_infinity * generators[k-1] * ... * generators[0], which is the
  /// identity for a consistent result.
  Permutation loop_product() const;
  /// Sum over all branch points, infinity included, of n - cycle count.
  int hurwitz_sum() const;
};

/// Numerical monodromy of the n-sheeted cover E -> P^1 given by f.
///
/// Sheets are tracked with an Euler predictor and Newton corrector in (x, y)
/// along spoke-and-circle loops; a step is accepted only if every sheet moves
/// less than a third of the minimum sheet distance. Precision is doubled up
/// to three times on tracking failure. The result is checked: generator cycle
/// types equal the local multiplicities, the loop around infinity is an
/// n-cycle, and the loop product is the identity (VerificationError layer
/// "monodromy" otherwise).
MonodromyResult monodromy_group(const FFElement& f, long prec = kDefaultPrecision);

struct TranspositionResult {
  bool applicable = false;
  std::optional<Permutation> transposition;
  /// Odd lcm c with loop^c a transposition.
  unsigned long power = 0;
  std::string reason;
};

/// For a loop whose cycle type has exactly one 2 and otherwise odd parts,
/// loop^c with c the lcm of the odd parts is the 2-cycle. Other profiles are
/// reported as not applicable.
TranspositionResult extract_transposition(const Permutation& loop);
/// Same, for generator `index` of a computed result; the transposition is
/// also checked to lie in the group.
TranspositionResult extract_transposition(const MonodromyResult& result, std::size_t index);

}  // namespace ecrank
