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

#include "ecrank/arith/rational.hpp"

#include <algorithm>
#include <cctype>

#include "ecrank/errors.hpp"

namespace ecrank {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw InvalidArgument("malformed integer '" + std::string(s) + "'");
  std::string buf(s[0] == '+' ? s.substr(1) : s);
  return Integer(buf, 10);
}

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd_int(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && r < (1ul << 26));
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_int(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  auto slash = s.find('/');
  Integer num = parse_integer(trim(s.substr(0, slash)));
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

bool is_probable_prime(const Integer& n) {
  return sgn(n) > 0 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::map<Integer, unsigned> factor_integer(const Integer& n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  std::map<Integer, unsigned> out;
  Integer m = abs(n);
  for (unsigned long p = 2; p < 1u << 14 && m > 1; ++p) {
    if (p * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      ++out[Integer(p)];
      m /= p;
    }
  }
  if (m > 1) factor_into(m, out);
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    std::size_t current = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < current; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw InvalidArgument("valuation of zero");
  Integer m = n;
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
    m /= p;
    ++v;
  }
  return v;
}

long valuation(const Rational& q, const Integer& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

}  // namespace ecrank
