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

#include "ecrank/errors.hpp"

namespace ecrank {

/// Bijection of {1..n}, n <= 16. Stored 0-based: image(i) = sigma(i+1) - 1.
class Permutation {
 public:
  static constexpr int kMaxDegree = 16;

  Permutation() = default;
  /// 0-based images; throws unless a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Product of 1-based cycles, e.g. {{1,2},{3,4}}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// 1-based images, the serialized form.
  static Permutation from_one_based(const std::vector<int>& images);

  int degree() const noexcept { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const noexcept { return img_; }
  std::vector<int> one_based() const;

  /// 0-based cycles, fixed points included, each starting at its least
  /// element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  /// Cycle lengths sorted descending.
  std::vector<int> cycle_type() const;
  int sign() const;
  bool is_identity() const;
  bool is_transposition() const;
  unsigned long order() const;

  Permutation inverse() const;
  /// 4 bits per image; injective for a fixed degree.
  std::uint64_t key() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  /// 1-based cycle notation without fixed points, "()" for the identity.
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

/// (x y) on n letters, 1-based.
Permutation transposition(int n, int x, int y);

}  // namespace ecrank
