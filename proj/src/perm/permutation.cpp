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

#include "ecrank/perm/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace ecrank {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  if (n > kMaxDegree) throw InvalidArgument("permutation degree exceeds 16");
  std::vector<bool> hit(n, false);
  for (int v : img_) {
    if (v < 0 || v >= n || hit[v]) throw InvalidArgument("not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i] - 1, b = c[(i + 1) % c.size()] - 1;
      if (a < 0 || a >= n || b < 0 || b >= n || used[a]) throw InvalidArgument("bad cycle notation");
      used[a] = true;
      img[a] = b;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> v;
  for (int i : images) v.push_back(i - 1);
  return Permutation(std::move(v));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> v;
  for (int i : img_) v.push_back(i + 1);
  return v;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int Permutation::sign() const { return (degree() - cycle_count()) % 2 == 0 ? 1 : -1; }

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) ++moved;
  return moved == 2;
}

unsigned long Permutation::order() const {
  unsigned long l = 1;
  for (const auto& c : cycles()) l = std::lcm(l, static_cast<unsigned long>(c.size()));
  return l;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(degree());
  for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
  return Permutation(std::move(v));
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (int v : img_) k = (k << 4) | static_cast<std::uint64_t>(v);
  return k;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("permutation degree mismatch");
  std::vector<int> v(a.degree());
  for (int i = 0; i < a.degree(); ++i) v[i] = a.img_[b.img_[i]];
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

std::string Permutation::to_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation transposition(int n, int x, int y) {
  if (x == y) throw InvalidArgument("transposition needs two distinct letters");
  return Permutation::from_cycles(n, {{x, y}});
}

}  // namespace ecrank
