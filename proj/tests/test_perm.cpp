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

#include <numeric>
#include <random>

#include "doctest.h"
#include "ecrank/arith/linalg.hpp"
#include "ecrank/perm/group.hpp"

using namespace ecrank;

namespace {

Permutation cyc(int n, std::vector<std::vector<int>> c) { return Permutation::from_cycles(n, c); }

unsigned long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("permutation basics") {
  auto p = cyc(5, {{1, 2, 3}, {4, 5}});
  CHECK(p.to_string() == "(1 2 3)(4 5)");
  CHECK(p.cycle_type() == std::vector<int>{3, 2});
  CHECK(p.order() == 6);
  CHECK(p.sign() == -1);
  CHECK((p * p.inverse()).is_identity());
  CHECK(Permutation::from_one_based(p.one_based()) == p);
  // (a * b)(i) = a(b(i))
  auto a = cyc(3, {{1, 2}}), b = cyc(3, {{2, 3}});
  CHECK((a * b)(1) == 2);
  CHECK_THROWS_AS(Permutation({0, 0}), InvalidArgument);
  CHECK(Permutation::identity(4).to_string() == "()");
}

TEST_CASE("group closure") {
  CHECK(PermGroup::symmetric(5).order() == 120);
  CHECK(PermGroup::alternating(5).order() == 60);
  CHECK(PermGroup::symmetric(6).even_part().order() == 360);
  auto d4 = PermGroup(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})});
  CHECK(d4.order() == 8);
  CHECK(d4.contains(cyc(4, {{2, 4}})));
  CHECK(!d4.contains(cyc(4, {{1, 2}})));
  CHECK(PermGroup::symmetric(9).order() == 362880);
  CHECK_THROWS_AS(PermGroup::from_elements(3, {Permutation::identity(3), cyc(3, {{1, 2, 3}})}), InvalidArgument);
}

TEST_CASE("block decomposition examples") {
  auto s4 = block_decomposition(PermGroup::symmetric(4));
  CHECK(s4.k == 1);
  CHECK(s4.m == 4);
  CHECK(s4.M_order == 24);
  CHECK(s4.K_image.order() == 1);

  auto h = PermGroup(4, {cyc(4, {{1, 2}}), cyc(4, {{3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
  REQUIRE(h.order() == 8);
  auto bd = block_decomposition(h);
  CHECK(bd.m == 2);
  CHECK(bd.k == 2);
  CHECK(bd.M_order == 4);
  CHECK(bd.K_image.order() == 2);
  CHECK(bd.classes == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  CHECK_THROWS_AS(block_decomposition(PermGroup(4, {cyc(4, {{1, 2}})})), InvalidArgument);
  CHECK_THROWS_AS(block_decomposition(PermGroup(4, {cyc(4, {{1, 2, 3, 4}})})), InvalidArgument);
}

TEST_CASE("transitive groups with a transposition") {
  const std::vector<std::size_t> classes{1, 1, 2, 1, 4};  // n = 2..6
  for (int n = 2; n <= 6; ++n) {
    auto reps = transitive_groups_with_transposition(n, true);
    CHECK(reps.size() == classes[n - 2]);
    for (const auto& h : transitive_groups_with_transposition(n, false)) {
      CHECK(h.is_transitive());
      auto bd = block_decomposition(h);
      CHECK(bd.m * bd.k == n);
      CHECK(bd.m > 1);
      CHECK(bd.K_image.is_transitive());
      unsigned long mk = 1;
      for (int i = 0; i < bd.k; ++i) mk *= factorial(bd.m);
      CHECK(bd.M_order == mk);
      if (n >= 3) {
        CHECK(bd.even_part_transitive);
        CHECK(fixed_space_dimension(h.even_part()) == 1);
      } else {
        // A_2 is trivial: the even part fixes both letters
        CHECK(!bd.even_part_transitive);
        CHECK(fixed_space_dimension(h.even_part()) == 2);
      }
      if (n == 5) CHECK(h.order() == 120);
    }
  }
  auto six = transitive_groups_with_transposition(6, true);
  std::vector<std::size_t> orders;
  for (const auto& h : six) orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{24, 48, 72, 720});
}

TEST_CASE("random generator sets") {
  std::mt19937_64 rng(9);
  for (int n = 3; n <= 6; ++n) {
    std::vector<int> a(n);
    std::iota(a.begin(), a.end(), 0);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Permutation> gens{transposition(n, 2 + static_cast<int>(rng() % (n - 1)), 1)};
      for (int j = 0; j < 2; ++j) {
        std::shuffle(a.begin(), a.end(), rng);
        gens.emplace_back(a);
      }
      PermGroup h(n, gens);
      if (!h.is_transitive()) continue;
      auto bd = block_decomposition(h);
      CHECK(bd.K_image.is_transitive());
      CHECK(h.even_part().is_transitive());
    }
  }
}

TEST_CASE("fixed space dimension") {
  CHECK(fixed_space_dimension(PermGroup::symmetric(5)) == 1);
  CHECK(fixed_space_dimension(PermGroup(4, {cyc(4, {{1, 2}})})) == 3);
  CHECK(fixed_space_dimension(PermGroup(6, {})) == 6);
}

TEST_CASE("fixed vectors") {
  auto v = fixed_vectors_of(cyc(4, {{1, 2}, {3, 4}}));
  CHECK(v == std::vector<std::vector<int>>{{1, 1, 0, 0}, {0, 0, 1, 1}});
  CHECK(fixed_vectors_of(Permutation::identity(3)).size() == 3);
  CHECK(fixed_vectors_of(cyc(5, {{1, 2, 3, 4, 5}})) == std::vector<std::vector<int>>{{1, 1, 1, 1, 1}});

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> a(n);
    std::iota(a.begin(), a.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    Permutation s(a);
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      m(s(i), i) += 1;
      m(i, i) -= 1;
    }
    CHECK(n - static_cast<int>(m.rank()) == s.cycle_count());
    CHECK(static_cast<int>(fixed_vectors_of(s).size()) == s.cycle_count());
  }
}

TEST_CASE("transposition conjugation identity") {
  for (int n = 3; n <= 8; ++n)
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        for (int z = 1; z <= n; ++z) {
          if (x == y || y == z || x == z) continue;
          auto xy = transposition(n, x, y);
          CHECK(transposition(n, x, z) == xy * transposition(n, y, z) * xy);
        }
}

TEST_CASE("cycles in the alternating group") {
  auto four = alternating_min_cycles(4);
  CHECK(four.cycles == 2);
  CHECK(four.witness.sign() == 1);
  CHECK(four.witness.cycle_count() == 2);
  CHECK(alternating_min_cycles(2).cycles == 2);
  for (int n = 6; n <= 10; n += 2) CHECK(alternating_min_cycles(n).cycles == 2);
  CHECK_THROWS_AS(alternating_min_cycles(3), InvalidArgument);
  CHECK(cyc(3, {{1, 2, 3}}).sign() == 1);
  CHECK(cyc(3, {{1, 2, 3}}).cycle_count() == 1);
  CHECK_THROWS_AS(alternating_min_cycles(12), InvalidArgument);
}

TEST_CASE("sign homomorphisms") {
  CHECK(sign_hom_kernel_witness(SignHom{2, {1}}) == 1);
  SignHom all3{3, {1, 2, 3}};
  for (int j = 1; j <= 3; ++j) {
    std::vector<int> v(3, -1);
    v[j - 1] = 1;
    CHECK(all3(v) == 1);
  }
  CHECK_THROWS_AS(sign_hom_kernel_witness(SignHom{2, {1, 2}}), InvalidArgument);
  for (int r = 1; r <= 10; ++r) {
    int valid = 0;
    for (const auto& h : all_sign_homs(r)) {
      CHECK(h(std::vector<int>(r, 1)) == 1);
      if (h(std::vector<int>(r, -1)) != -1) continue;
      ++valid;
      int j = sign_hom_kernel_witness(h);
      std::vector<int> v(r, -1);
      v[j - 1] = 1;
      CHECK(h(v) == 1);
    }
    CHECK(valid == (1 << (r - 1)));
  }
}
