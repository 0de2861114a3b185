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

#include <cstdint>
#include <string>
#include <vector>

#include "ecrank/arith/linalg.hpp"

namespace ecrank {

/// v -> v^T M v with M symmetric rational.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  /// Throws unless the matrix is square and symmetric.
  explicit QuadraticForm(QMatrix m);

  std::size_t dim() const noexcept { return m_.rows(); }
  const QMatrix& matrix() const noexcept { return m_; }
  Rational operator()(const std::vector<Rational>& v) const;
  Rational operator()(const std::vector<Integer>& v) const;
  /// Codimension of the radical.
  std::size_t rank() const { return m_.rank(); }

 private:
  QMatrix m_;
};

/// Rank of A + t B over the pencil, computed exactly.
///
/// The rank drops below its generic value r only at the common roots of the
/// r x r minors. Their gcd divides det(U (A + t B) V) for every r x n U and
/// n x r V; a few integer choices give a polynomial G whose roots contain every
/// drop. The rank at the roots of G is then computed over Q[t]/(G) by
/// elimination that splits the modulus whenever a pivot is a zero divisor.
struct PencilRank {
  std::size_t generic_rank = 0;
  /// Rank of B, the member r = 0 of r A + s B.
  std::size_t rank_at_infinity = 0;
  /// Squarefree polynomial in t whose roots contain every rank drop of A + t B.
  QPoly drop_polynomial;
  /// Factors of drop_polynomial paired with the rank of A + t B at their roots.
  std::vector<std::pair<QPoly, std::size_t>> drops;
  std::size_t min_rank = 0;
};

PencilRank pencil_rank(const QuadraticForm& a, const QuadraticForm& b);

/// Minimum rank of r A + s B over (r : s) in P^1 of the algebraic closure.
std::size_t pencil_min_rank(const QuadraticForm& a, const QuadraticForm& b);

/// Outcome of a bounded isotropic search. "Not found" is a value: the
/// certificate states exactly what was excluded.
struct IsotropicResult {
  bool found = false;
  std::vector<Integer> vector;
  int height_bound = 0;
  /// Integer vectors with max-norm <= height_bound whose last coordinate was
  /// solved for (one per prefix).
  std::uint64_t prefixes_examined = 0;
  std::string certificate;
};

/// Common zero of both forms among primitive integer vectors of max-norm at
/// most height_bound, off every excluded hyperplane L(v) = 0.
///
/// The hit returned is the least one in the order: max-norm, then
/// coordinatewise by (|c|, positive before negative). Vectors are normalized
/// so the first nonzero coordinate is positive. The last coordinate is solved
/// from the first form as an integer quadratic, so the work is
/// (2B + 1)^(dim - 1) prefixes.
IsotropicResult isotropic_search(const QuadraticForm& f1, const QuadraticForm& f2, int height_bound,
                                 const std::vector<std::vector<Rational>>& excluded = {});

}  // namespace ecrank
