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

#include <cstddef>
#include <optional>
#include <vector>

#include "ecrank/perm/permutation.hpp"

namespace ecrank {

/// Subgroup of S_n given by generators, closed eagerly by breadth-first
/// multiplication. Closure aborts with InvalidArgument past kMaxOrder.
class PermGroup {
 public:
  static constexpr std::size_t kMaxOrder = 1000000;

  PermGroup(int n, std::vector<Permutation> generators);

  static PermGroup symmetric(int n);
  static PermGroup alternating(int n);
  /// Group with exactly the given elements; throws unless they form a group.
  static PermGroup from_elements(int n, std::vector<Permutation> elements);

  int degree() const noexcept { return n_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  /// Sorted.
  const std::vector<Permutation>& elements() const noexcept { return elems_; }
  std::size_t order() const noexcept { return elems_.size(); }
  bool contains(const Permutation& p) const;

  /// Orbits on {0..n-1}, each sorted, ordered by least element.
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const { return orbits().size() == 1; }
  std::vector<Permutation> transpositions() const;
  /// H intersected with A_n.
  PermGroup even_part() const;

 private:
  PermGroup() = default;
  void close();

  int n_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
};

/// Orbits of the group generated by `gens` on {0..n-1}, without closing it.
std::vector<std::vector<int>> orbits_of(int n, const std::vector<Permutation>& gens);
/// True iff the generated group is transitive and preserves no nontrivial
/// block system (finest system containing {0, j}, for every j).
bool is_primitive(int n, const std::vector<Permutation>& gens);

/// Classes of x ~ y iff x = y or (x y) in H, and the induced structure.
struct BlockDecomposition {
  /// 0-based classes, each sorted, ordered by least element.
  std::vector<std::vector<int>> classes;
  int m = 0;
  int k = 0;
  /// Transpositions of H; they generate the kernel M of the action on classes.
  std::vector<Permutation> M_generators;
  std::size_t M_order = 0;
  /// Action of H on the k classes.
  PermGroup K_image = PermGroup::symmetric(1);
  /// Always true for n >= 3; false for n = 2, where H meet A_2 is trivial.
  bool even_part_transitive = false;
};

/// Requires H transitive with a transposition. Verifies |M| = (m!)^k, that M
/// is generated by the transpositions of H, that K is transitive, that
/// H meet A_n is transitive when n >= 3, and H = S_n for prime n; a failed
/// check raises VerificationError.
BlockDecomposition block_decomposition(const PermGroup& h);

/// Dimension of the H-fixed subspace of Q^n: the orbit count, cross-checked
/// against n - rank of the stacked matrices g - I over the generators.
int fixed_space_dimension(const PermGroup& h);

/// Indicator vector of each cycle of sigma (fixed points included).
std::vector<std::vector<int>> fixed_vectors_of(const Permutation& sigma);

struct MinCycles {
  int cycles = 0;
  Permutation witness;
};

/// Minimum cycle count over A_n by exhaustion; n even, 2 <= n <= bound.
MinCycles alternating_min_cycles(int n, int bound = 10);

/// h(v) = prod_{i in subset} v_i on {+1,-1}^r.
struct SignHom {
  int r = 0;
  /// 1-based coordinates, sorted.
  std::vector<int> subset;

  int operator()(const std::vector<int>& v) const;
  /// h(1,...,1) = 1 always; h(-1,...,-1) = -1 iff |subset| is odd.
  bool sends_minus_one_to_minus_one() const { return subset.size() % 2 == 1; }
};

/// All 2^r homomorphisms {+1,-1}^r -> {+1,-1}.
std::vector<SignHom> all_sign_homs(int r);

/// Least j (1-based) with h(v_j) = 1, v_j = (-1,...,-1) with +1 in slot j.
/// Requires h(-1,...,-1) = -1.
int sign_hom_kernel_witness(const SignHom& h);

/// Transitive subgroups of S_n (n <= 6) containing a transposition.
/// All such subgroups containing (1 2) are found by an upward search through
/// the subgroup lattice above <(1 2)>; every transitive group with a
/// transposition is conjugate to one of them. With up_to_conjugacy, one
/// representative per S_n-conjugacy class is kept.
std::vector<PermGroup> transitive_groups_with_transposition(int n, bool up_to_conjugacy);

}  // namespace ecrank
