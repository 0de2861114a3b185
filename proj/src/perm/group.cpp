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

#include "ecrank/perm/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ecrank/arith/linalg.hpp"

namespace ecrank {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }

  std::vector<std::vector<int>> classes() {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [r, c] : by_root) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
  }
};

unsigned long factorial(int n) {
  unsigned long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
  return s + "}";
}

}  // namespace

PermGroup::PermGroup(int n, std::vector<Permutation> generators) : n_(n), gens_(std::move(generators)) {
  if (n < 1 || n > Permutation::kMaxDegree) throw InvalidArgument("group degree must be in 1..16");
  for (const auto& g : gens_)
    if (g.degree() != n) throw InvalidArgument("generator degree mismatch");
  close();
}

void PermGroup::close() {
  std::unordered_set<std::uint64_t> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(n_);
  seen.insert(id.key());
  queue.push_back(id);
  elems_.clear();
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens_) {
      Permutation y = g * x;
      if (seen.insert(y.key()).second) {
        if (seen.size() > kMaxOrder) throw InvalidArgument("group closure exceeds 10^6 elements");
        queue.push_back(y);
      }
    }
    elems_.push_back(std::move(x));
  }
  std::sort(elems_.begin(), elems_.end());
}

PermGroup PermGroup::symmetric(int n) {
  std::vector<Permutation> g;
  if (n >= 2) g.push_back(transposition(n, 1, 2));
  if (n >= 3) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 1);
    g.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(g));
}

PermGroup PermGroup::alternating(int n) {
  std::vector<Permutation> g;
  for (int i = 3; i <= n; ++i) g.push_back(Permutation::from_cycles(n, {{1, 2, i}}));
  return PermGroup(n, std::move(g));
}

PermGroup PermGroup::from_elements(int n, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g(n, {});
  for (const auto& e : elements) {
    if (g.contains(e)) continue;
    g.gens_.push_back(e);
    g.close();
    if (g.order() > elements.size()) break;
  }
  if (g.elems_ != elements) throw InvalidArgument("elements do not form a group");
  return g;
}

bool PermGroup::contains(const Permutation& p) const { return std::binary_search(elems_.begin(), elems_.end(), p); }

std::vector<std::vector<int>> PermGroup::orbits() const { return orbits_of(n_, gens_); }

std::vector<Permutation> PermGroup::transpositions() const {
  std::vector<Permutation> t;
  for (const auto& e : elems_)
    if (e.is_transposition()) t.push_back(e);
  return t;
}

PermGroup PermGroup::even_part() const {
  std::vector<Permutation> ev;
  for (const auto& e : elems_)
    if (e.sign() == 1) ev.push_back(e);
  return from_elements(n_, std::move(ev));
}

std::vector<std::vector<int>> orbits_of(int n, const std::vector<Permutation>& gens) {
  UnionFind uf(n);
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i) uf.unite(i, g(i));
  return uf.classes();
}

bool is_primitive(int n, const std::vector<Permutation>& gens) {
  if (orbits_of(n, gens).size() != 1) return false;
  for (int j = 1; j < n; ++j) {
    UnionFind uf(n);
    uf.unite(0, j);
    std::vector<std::pair<int, int>> queue{{0, j}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        int ga = uf.find(g(a)), gb = uf.find(g(b));
        if (ga == gb) continue;
        uf.unite(ga, gb);
        queue.emplace_back(g(a), g(b));
      }
    }
    if (uf.classes().size() != 1) return false;
  }
  return true;
}

BlockDecomposition block_decomposition(const PermGroup& h) {
  const int n = h.degree();
  auto orbits = h.orbits();
  if (orbits.size() != 1) throw InvalidArgument("group is not transitive; orbit " + join(orbits[0]));
  auto ts = h.transpositions();
  if (ts.empty()) throw InvalidArgument("group of order " + std::to_string(h.order()) + " has no transposition");

  UnionFind uf(n);
  for (const auto& t : ts) {
    auto c = t.cycles();
    for (const auto& cyc : c)
      if (cyc.size() == 2) uf.unite(cyc[0], cyc[1]);
  }
  BlockDecomposition bd;
  bd.classes = uf.classes();
  bd.k = static_cast<int>(bd.classes.size());
  bd.m = static_cast<int>(bd.classes[0].size());
  for (const auto& c : bd.classes)
    if (static_cast<int>(c.size()) != bd.m) throw VerificationError("block decomposition", "classes of unequal size");

  std::vector<int> class_of(n);
  for (int c = 0; c < bd.k; ++c)
    for (int i : bd.classes[c]) class_of[i] = c;

  std::size_t kernel = 0;
  for (const auto& g : h.elements()) {
    bool fixes = true;
    for (int i = 0; i < n && fixes; ++i) fixes = class_of[g(i)] == class_of[i];
    if (fixes) ++kernel;
  }
  unsigned long expected = 1;
  for (int i = 0; i < bd.k; ++i) expected *= factorial(bd.m);
  if (kernel != expected)
    throw VerificationError("block decomposition", "kernel order " + std::to_string(kernel) + " != (m!)^k");
  bd.M_generators = ts;
  bd.M_order = PermGroup(n, ts).order();
  if (bd.M_order != kernel)
    throw VerificationError("block decomposition", "transpositions do not generate the kernel");

  std::vector<Permutation> kgens;
  for (const auto& g : h.generators()) {
    std::vector<int> img(bd.k);
    for (int c = 0; c < bd.k; ++c) {
      img[c] = class_of[g(bd.classes[c][0])];
      for (int i : bd.classes[c])
        if (class_of[g(i)] != img[c]) throw VerificationError("block decomposition", "classes are not blocks");
    }
    kgens.emplace_back(std::move(img));
  }
  bd.K_image = PermGroup(bd.k, std::move(kgens));
  if (!bd.K_image.is_transitive()) throw VerificationError("block decomposition", "class action is not transitive");
  // A_2 is trivial, so the even part can only be transitive from n = 3 on.
  bd.even_part_transitive = h.even_part().is_transitive();
  if (n >= 3 && !bd.even_part_transitive)
    throw VerificationError("block decomposition", "even part is not transitive");

  bool prime = n >= 2;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) prime = false;
  if (prime && h.order() != factorial(n))
    throw VerificationError("block decomposition", "prime degree but group is not symmetric");
  return bd;
}

int fixed_space_dimension(const PermGroup& h) {
  const int n = h.degree();
  const int by_orbits = static_cast<int>(h.orbits().size());
  const auto& gens = h.generators();
  QMatrix a(std::max<std::size_t>(1, gens.size() * n), n);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int i = 0; i < n; ++i) {
      a(g * n + gens[g](i), i) += 1;
      a(g * n + i, i) -= 1;
    }
  const int by_rank = n - static_cast<int>(a.rank());
  if (by_rank != by_orbits) throw VerificationError("fixed space", "orbit count and rank disagree");
  return by_orbits;
}

std::vector<std::vector<int>> fixed_vectors_of(const Permutation& sigma) {
  std::vector<std::vector<int>> out;
  for (const auto& c : sigma.cycles()) {
    std::vector<int> v(sigma.degree(), 0);
    for (int i : c) v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

MinCycles alternating_min_cycles(int n, int bound) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("alternating_min_cycles: n must be even and >= 2");
  if (n > bound || n > 12) throw InvalidArgument("alternating_min_cycles: n exceeds the exhaustion bound");
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 0);
  MinCycles best{n + 1, Permutation::identity(n)};
  do {
    unsigned seen = 0;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen >> i & 1U) continue;
      ++cycles;
      for (int j = i; !(seen >> j & 1U); j = a[j]) seen |= 1U << j;
    }
    if ((n - cycles) % 2 == 0 && cycles < best.cycles) best = {cycles, Permutation(a)};
  } while (std::next_permutation(a.begin(), a.end()));
  return best;
}

int SignHom::operator()(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != r) throw InvalidArgument("sign vector has wrong length");
  int s = 1;
  for (int i : subset) s *= v[i - 1];
  return s;
}

std::vector<SignHom> all_sign_homs(int r) {
  if (r < 1 || r > 20) throw InvalidArgument("sign homomorphism arity must be in 1..20");
  std::vector<SignHom> out;
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    SignHom h{r, {}};
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1UL) h.subset.push_back(i + 1);
    out.push_back(std::move(h));
  }
  return out;
}

int sign_hom_kernel_witness(const SignHom& h) {
  if (!h.sends_minus_one_to_minus_one()) throw InvalidArgument("h(-1,...,-1) must be -1");
  for (int j = 1; j <= h.r; ++j) {
    std::vector<int> v(h.r, -1);
    v[j - 1] = 1;
    if (h(v) == 1) return j;
  }
  throw VerificationError("sign homomorphism", "no coordinate vector in the kernel");
}

namespace {

// Groups in S_n, n <= 6, as bitsets over the indices of a multiplication table.
class SmallSymmetric {
 public:
  explicit SmallSymmetric(int n) : n_(n) {
    std::vector<int> a(n);
    std::iota(a.begin(), a.end(), 0);
    do {
      index_[Permutation(a).key()] = static_cast<int>(perms_.size());
      perms_.emplace_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
    size_ = static_cast<int>(perms_.size());
    mul_.resize(static_cast<std::size_t>(size_) * size_);
    inv_.resize(size_);
    for (int i = 0; i < size_; ++i) {
      inv_[i] = index(perms_[i].inverse());
      for (int j = 0; j < size_; ++j) mul_[i * size_ + j] = index(perms_[i] * perms_[j]);
    }
  }

  using Bits = std::vector<bool>;

  int size() const { return size_; }
  int index(const Permutation& p) const { return index_.at(p.key()); }
  const Permutation& perm(int i) const { return perms_[i]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }

  // Closure of `base` (already a group, possibly empty) with extra generators.
  Bits close(const Bits& base, const std::vector<int>& gens) const {
    Bits in = base;
    std::vector<int> queue;
    if (base.empty()) {
      in.assign(size_, false);
      in[0] = true;  // lexicographically first: the identity
    }
    for (int i = 0; i < size_; ++i)
      if (in[i]) queue.push_back(i);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int g : gens) {
        int y = mul(g, queue[q]);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    return in;
  }

  bool transitive(const std::vector<int>& gens) const {
    UnionFind uf(n_);
    for (int g : gens)
      for (int i = 0; i < n_; ++i) uf.unite(i, perms_[g](i));
    return uf.classes().size() == 1;
  }

  Bits conjugate(const Bits& g, int c) const {
    Bits out(size_, false);
    for (int i = 0; i < size_; ++i)
      if (g[i]) out[mul(mul(c, i), inv_[c])] = true;
    return out;
  }

 private:
  int n_;
  int size_ = 0;
  std::vector<Permutation> perms_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> mul_, inv_;
};

}  // namespace

std::vector<PermGroup> transitive_groups_with_transposition(int n, bool up_to_conjugacy) {
  if (n < 2 || n > 6) throw InvalidArgument("subgroup search supports 2 <= n <= 6");
  SmallSymmetric s(n);
  using Bits = SmallSymmetric::Bits;
  struct Node {
    Bits bits;
    std::vector<int> gens;
  };
  std::set<Bits> seen;
  std::vector<Node> nodes;
  const int t = s.index(transposition(n, 1, 2));
  nodes.push_back({s.close({}, {t}), {t}});
  seen.insert(nodes[0].bits);
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    // <G, g> depends only on the double coset G g G.
    Bits done = nodes[q].bits;
    for (int g = 0; g < s.size(); ++g) {
      if (done[g]) continue;
      for (int a = 0; a < s.size(); ++a) {
        if (!nodes[q].bits[a]) continue;
        int ag = s.mul(a, g);
        for (int b = 0; b < s.size(); ++b)
          if (nodes[q].bits[b]) done[s.mul(ag, b)] = true;
      }
      auto gens = nodes[q].gens;
      gens.push_back(g);
      Bits h = s.close(nodes[q].bits, gens);
      if (seen.insert(h).second) nodes.push_back({std::move(h), std::move(gens)});
    }
  }

  std::vector<PermGroup> out;
  std::set<Bits> classes;
  for (const auto& node : nodes) {
    if (!s.transitive(node.gens)) continue;
    if (up_to_conjugacy) {
      Bits canon = node.bits;
      for (int c = 1; c < s.size(); ++c) canon = std::min(canon, s.conjugate(node.bits, c));
      if (!classes.insert(canon).second) continue;
    }
    std::vector<Permutation> gens;
    for (int g : node.gens) gens.push_back(s.perm(g));
    out.emplace_back(n, std::move(gens));
  }
  std::stable_sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return out;
}

}  // namespace ecrank
