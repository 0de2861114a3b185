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

#include "ecrank/arith/square_class.hpp"

#include "ecrank/errors.hpp"

namespace ecrank {

SquareClass SquareClass::of(const Integer& n) {
  if (n == 0) throw InvalidArgument("square class of zero");
  SquareClass c;
  c.negative_ = sgn(n) < 0;
  Integer k = 1;
  for (const auto& [p, e] : factor_integer(n)) {
    if (e % 2 == 1) {
      k *= p;
      c.primes_.push_back(p);
    }
  }
  c.kernel_ = c.negative_ ? Integer(-k) : k;
  return c;
}

SquareClass SquareClass::of(const Rational& q) {
  if (sgn(q) == 0) throw InvalidArgument("square class of zero");
  return of(Integer(q.get_num() * q.get_den()));
}

std::set<Integer> SquareClass::coordinates() const {
  std::set<Integer> v(primes_.begin(), primes_.end());
  if (negative_) v.insert(Integer(-1));
  return v;
}

SquareClass squarefree_kernel(const Integer& n) { return SquareClass::of(n); }

std::set<Integer> SquareClassBasis::reduce(std::set<Integer> v) const {
  while (!v.empty()) {
    auto it = rows_.find(*v.rbegin());
    if (it == rows_.end()) break;
    for (const auto& c : it->second) {
      if (!v.erase(c)) v.insert(c);
    }
  }
  return v;
}

bool SquareClassBasis::is_independent(const SquareClass& candidate) const {
  return !reduce(candidate.coordinates()).empty();
}

bool SquareClassBasis::try_extend(const SquareClass& candidate) {
  auto v = reduce(candidate.coordinates());
  if (v.empty()) return false;
  Integer pivot = *v.rbegin();
  rows_.emplace(std::move(pivot), std::move(v));
  classes_.push_back(candidate);
  return true;
}

std::optional<std::vector<SquareClass>> square_class_extend(const std::vector<SquareClass>& basis,
                                                            const SquareClass& candidate) {
  SquareClassBasis b;
  for (const auto& c : basis) b.try_extend(c);
  if (!b.try_extend(candidate)) return std::nullopt;
  auto out = basis;
  out.push_back(candidate);
  return out;
}

}  // namespace ecrank
