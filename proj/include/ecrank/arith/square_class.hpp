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

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ecrank/arith/rational.hpp"

namespace ecrank {

/// Class of a nonzero rational in Q*/Q*^2, stored as its squarefree kernel
/// together with the F2 exponent vector (sign bit plus odd-exponent primes).
class SquareClass {
 public:
  /// Class of a nonzero integer. Throws InvalidArgument on zero.
  static SquareClass of(const Integer& n);
  /// Class of a nonzero rational p/q (same as the class of p*q).
  static SquareClass of(const Rational& q);

  /// The unique squarefree k with n = k*m^2; the sign is preserved.
  const Integer& kernel() const noexcept { return kernel_; }
  bool negative() const noexcept { return negative_; }
  /// Primes dividing the kernel, ascending.
  const std::vector<Integer>& primes() const noexcept { return primes_; }
  bool is_square() const noexcept { return kernel_ == 1; }

  /// F2 coordinates: -1 for the sign bit, then the odd-exponent primes.
  std::set<Integer> coordinates() const;

  friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.kernel_ == b.kernel_; }

 private:
  Integer kernel_ = 1;
  bool negative_ = false;
  std::vector<Integer> primes_;
};

/// Squarefree kernel of a nonzero integer.
SquareClass squarefree_kernel(const Integer& n);

/// F2-span of accepted square classes, kept in echelon form keyed by the
/// largest coordinate of each row.
class SquareClassBasis {
 public:
  /// Accepts iff the candidate is not in the span (in particular not a square).
  bool try_extend(const SquareClass& candidate);
  bool is_independent(const SquareClass& candidate) const;

  const std::vector<SquareClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }

 private:
  std::set<Integer> reduce(std::set<Integer> v) const;

  std::map<Integer, std::set<Integer>> rows_;
  std::vector<SquareClass> classes_;
};

/// Functional form: the extended basis on acceptance, nullopt on rejection.
std::optional<std::vector<SquareClass>> square_class_extend(const std::vector<SquareClass>& basis,
                                                            const SquareClass& candidate);

}  // namespace ecrank
