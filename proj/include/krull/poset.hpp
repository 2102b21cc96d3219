#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "krull/bits.hpp"
#include "krull/errors.hpp"

namespace krull {

// Finite poset on points 0..n-1. below_[i] is the principal downset of i,
// reflexive, so leq(a,b) is a single bit test.
class Poset {
 public:
  Poset() = default;

  static Poset antichain(int n) {
    Poset p;
    p.n_ = n;
    p.below_.assign(n, Bits(n));
    for (int i = 0; i < n; ++i) p.below_[i].set(i);
    return p;
  }

  // 0 < 1 < ... < n-1.
  static Poset chain(int n) {
    Poset p = antichain(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) p.below_[i].set(j);
    return p;
  }

  // pairs are (a, b) meaning a <= b. Transitive closure is taken; a cycle
  // between distinct points violates antisymmetry and is rejected.
  static Poset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Poset p = antichain(n);
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw input_error("poset: point index out of range");
      p.below_[b].set(a);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i)
        for (int j = p.below_[i].next(0); j >= 0; j = p.below_[i].next(j + 1)) {
          Bits merged = p.below_[i] | p.below_[j];
          if (merged != p.below_[i]) {
            p.below_[i] = merged;
            changed = true;
          }
        }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p.below_[i].get(j) && p.below_[j].get(i))
          throw input_error("poset: antisymmetry violated");
    return p;
  }

  int size() const { return n_; }
  bool leq(int a, int b) const { return below_[b].get(a); }
  const Bits& below(int i) const { return below_[i]; }

  // Longest chain measured in edges; -1 for the empty poset.
  int height() const {
    if (n_ == 0) return -1;
    std::vector<int> h(n_, -1);
    int best = 0;
    for (int i = 0; i < n_; ++i) best = std::max(best, height_of(i, h));
    return best;
  }

  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int q = 0; q < n_; ++q)
      for (int p = below_[q].next(0); p >= 0; p = below_[q].next(p + 1)) {
        if (p == q) continue;
        bool cover = true;
        for (int r = below_[q].next(0); r >= 0 && cover;
             r = below_[q].next(r + 1))
          if (r != p && r != q && below_[r].get(p)) cover = false;
        if (cover) out.emplace_back(p, q);
      }
    return out;
  }

 private:
  int height_of(int i, std::vector<int>& h) const {
    if (h[i] >= 0) return h[i];
    int best = 0;
    for (int j = below_[i].next(0); j >= 0; j = below_[i].next(j + 1))
      if (j != i) best = std::max(best, height_of(j, h) + 1);
    return h[i] = best;
  }

  int n_ = 0;
  std::vector<Bits> below_;
};

// Seeded random poset: each pair i < j gets i <= j with the given density,
// then the transitive closure is taken. Every finite poset arises up to
// relabeling, which is all the property-test corpus needs.
inline Poset random_poset(std::mt19937_64& rng, int n, double density = 0.4) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(i, j);
  return Poset::from_pairs(n, pairs);
}

// Order isomorphism by backtracking; intended for the small posets the
// test corpus produces. Candidates are pruned by up/down degree.
inline bool poset_isomorphic(const Poset& a, const Poset& b) {
  const int n = a.size();
  if (n != b.size()) return false;
  auto profile = [](const Poset& p, int i) {
    int below = 0, above = 0;
    for (int j = 0; j < p.size(); ++j) {
      if (p.leq(j, i)) ++below;
      if (p.leq(i, j)) ++above;
    }
    return std::pair<int, int>{below, above};
  };
  std::vector<int> match(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || profile(a, i) != profile(b, j)) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        if (a.leq(i, k) != b.leq(j, match[k])) ok = false;
        if (a.leq(k, i) != b.leq(match[k], j)) ok = false;
      }
      if (!ok) continue;
      match[i] = j;
      used[j] = 1;
      if (self(self, i + 1)) return true;
      used[j] = 0;
      match[i] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace krull
