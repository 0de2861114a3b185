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

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ecrank {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws InvalidArgument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form (reduced, positive denominator; integers print as "p").
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// n/d in canonical form. mpq_class(n, d) alone does not reduce.
inline Rational make_rational(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

bool is_perfect_square(const Integer& n);

/// Prime factorization of |n| (n != 0). Trial division, then Pollard-Brent.
std::map<Integer, unsigned> factor_integer(const Integer& n);

bool is_probable_prime(const Integer& n);

/// Positive divisors of |n|, n != 0.
std::vector<Integer> positive_divisors(const Integer& n);

/// p-adic valuation of a nonzero integer.
long valuation(const Integer& n, const Integer& p);

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& q, const Integer& p);

}  // namespace ecrank
