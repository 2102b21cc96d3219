#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "krull/chains.hpp"
#include "krull/lattice.hpp"

namespace krull {

// ((  ; x0), (x0; x1), ..., (xl;  )) with implicit 0 on the first left
// side and implicit 1 on the last right side (empty J / empty U).
inline IdealisticChain elementary_chain(const std::vector<int>& xs) {
  if (xs.empty()) throw contract_error("elementary_chain: empty tuple");
  IdealisticChain C;
  C.levels.resize(xs.size() + 1);
  C.levels[0].U = {xs[0]};
  for (size_t i = 1; i < xs.size(); ++i) {
    C.levels[i].J = {xs[i - 1]};
    C.levels[i].U = {xs[i]};
  }
  C.levels.back().J = {xs.back()};
  return C;
}

// Complementary sequence ladder:
//   1 <= yl \/ xl;  yi /\ xi <= y(i-1) \/ x(i-1);  y0 /\ x0 <= 0.
struct ComplementaryPair {
  std::vector<int> xs, ys;
};

inline bool verify_complementary(const FinLattice& L,
                                 const std::vector<int>& xs,
                                 const std::vector<int>& ys) {
  const int n = (int)xs.size();
  if ((int)ys.size() != n || n == 0) return false;
  if (!L.leq(L.top(), L.join(ys[n - 1], xs[n - 1]))) return false;
  for (int i = n - 1; i >= 1; --i)
    if (!L.leq(L.meet(ys[i], xs[i]), L.join(ys[i - 1], xs[i - 1])))
      return false;
  return L.leq(L.meet(ys[0], xs[0]), L.bot());
}

// Greedy complementary sequence for a tuple, least choices first.
inline std::optional<std::vector<int>> complementary_for(
    const FinLattice& L, const std::vector<int>& xs) {
  const int n = (int)xs.size();
  std::vector<int> ys(n);
  ys[n - 1] = L.coheyting_diff(L.top(), xs[n - 1]);
  for (int i = n - 1; i >= 1; --i)
    ys[i - 1] = L.coheyting_diff(L.meet(ys[i], xs[i]), xs[i - 1]);
  if (!L.leq(L.meet(ys[0], xs[0]), L.bot())) return std::nullopt;
  return ys;
}

struct DimOptions {
  bool all_elements = false;     // enumerate tuples over every element
  bool increasing_only = false;  // restrict to weakly increasing tuples
  bool collect_witnesses = false;
  size_t witness_cap = 1024;
};

struct DimCheck {
  bool holds = false;
  std::optional<std::vector<int>> failing_tuple;
  std::vector<ComplementaryPair> witnesses;  // one per tuple when collected
  bool witnesses_truncated = false;
};

// dim(L) <= l iff every (l+1)-tuple of join-irreducibles admits a
// complementary sequence. Restriction to irreducibles is sound because
// they generate; the all_elements flag re-checks that on demand.
inline DimCheck dim_leq(const FinLattice& L, int ell,
                        const DimOptions& opt = {}) {
  if (ell < -1) throw contract_error("dim_leq: level below -1");
  DimCheck out;
  if (ell == -1) {
    out.holds = L.is_trivial();
    if (!out.holds) out.failing_tuple = std::vector<int>{};
    return out;
  }
  std::vector<int> pool = opt.all_elements ? std::vector<int>{}
                                           : L.irreducible_elements();
  if (opt.all_elements)
    for (int e = 0; e < L.size(); ++e) pool.push_back(e);
  const int n = ell + 1;
  out.holds = true;
  if (pool.empty()) return out;  // trivial lattice: nothing to refute

  std::vector<int> idx(n, 0);
  while (true) {
    bool admissible = true;
    if (opt.increasing_only)
      for (int i = 0; i + 1 < n && admissible; ++i)
        if (!L.leq(pool[idx[i]], pool[idx[i + 1]])) admissible = false;
    if (admissible) {
      std::vector<int> tuple(n);
      for (int i = 0; i < n; ++i) tuple[i] = pool[idx[i]];
      auto ys = complementary_for(L, tuple);
      if (!ys) {
        out.holds = false;
        out.failing_tuple = tuple;
        return out;
      }
      if (opt.collect_witnesses) {
        if (out.witnesses.size() < opt.witness_cap)
          out.witnesses.push_back({tuple, *ys});
        else
          out.witnesses_truncated = true;
      }
    }
    int i = 0;
    while (i < n && ++idx[i] == (int)pool.size()) idx[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline int dim(const FinLattice& L, const DimOptions& opt = {}) {
  for (int l = -1;; ++l) {
    if (dim_leq(L, l, opt).holds) return l;
    if (l > L.base().size())
      throw error("dim: exceeded the irreducible-count bound");
  }
}

// Given xs increasing and (xs, as) complementary, the suffix meets
// b_i = a_i /\ ... /\ a_l form an increasing sequence that is again
// complementary to xs. Both properties are verified.
inline std::vector<int> complementary_monotone(const FinLattice& L,
                                               const std::vector<int>& xs,
                                               const std::vector<int>& as) {
  const int n = (int)xs.size();
  for (int i = 0; i + 1 < n; ++i)
    if (!L.leq(xs[i], xs[i + 1]))
      throw contract_error("complementary_monotone: xs not increasing");
  if (!verify_complementary(L, xs, as))
    throw contract_error("complementary_monotone: input not complementary");
  std::vector<int> bs(n);
  int acc = L.top();
  for (int i = n - 1; i >= 0; --i) {
    acc = L.meet(acc, as[i]);
    bs[i] = acc;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!L.leq(bs[i], bs[i + 1]))
      throw error("complementary_monotone: output not increasing");
  if (!verify_complementary(L, xs, bs))
    throw error("complementary_monotone: output not complementary");
  return bs;
}

// Boolean envelope: the powerset of the join-irreducibles. The embedding
// reads an element's downset as a plain subset; it preserves 0, 1, meet
// and join, and is injective.
struct BooleanEnvelope {
  FinLattice env;
  std::vector<int> embed;  // element of L -> element of env
};

inline BooleanEnvelope boolean_envelope(const FinLattice& L,
                                        int cap = kDefaultElementCap) {
  const int n = L.base().size();
  if (n > 20 || (int64_t(1) << n) > cap)
    throw resource_error("boolean envelope exceeds element budget");
  BooleanEnvelope out{FinLattice::boolean(n), {}};
  out.embed.resize(L.size());
  for (int e = 0; e < L.size(); ++e)
    out.embed[e] = out.env.element_of(L.downset(e));
  return out;
}

// Difference normal form (a1 - a2) \/ (a3 - a4) \/ ... with a1 >= a2 >= ...
// drawn from L; an odd tail contributes a bare embed(ak).
struct DifferenceChain {
  std::vector<int> as;  // elements of L, weakly decreasing
};

inline int eval_difference_chain(const BooleanEnvelope& B,
                                 const DifferenceChain& dc) {
  const FinLattice& env = B.env;
  int acc = env.bot();
  for (size_t i = 0; i < dc.as.size(); i += 2) {
    int a = B.embed[dc.as[i]];
    int b = (i + 1 < dc.as.size()) ? B.embed[dc.as[i + 1]] : env.bot();
    acc = env.join(acc, env.coheyting_diff(a, b));
  }
  return acc;
}

namespace detail {

// reach[k][b] = set of envelope elements expressible by a decreasing chain
// of length exactly k whose head is <= b. Lengths are padded by zeros, so
// expressibility is monotone in k.
class EspanolTable {
 public:
  explicit EspanolTable(const BooleanEnvelope& B, const FinLattice& L)
      : B_(B), L_(L) {}

  const Bits& reach(int k, int b) {
    auto it = memo_.find(pack(k, b));
    if (it != memo_.end()) return it->second;
    Bits r(B_.env.size());
    if (k == 0) {
      r.set(B_.env.bot());
    } else if (k == 1) {
      for (int a = 0; a < L_.size(); ++a)
        if (L_.leq(a, b)) r.set(B_.embed[a]);
    } else {
      for (int a1 = 0; a1 < L_.size(); ++a1) {
        if (!L_.leq(a1, b)) continue;
        for (int a2 = 0; a2 < L_.size(); ++a2) {
          if (!L_.leq(a2, a1)) continue;
          int d = B_.env.coheyting_diff(B_.embed[a1], B_.embed[a2]);
          const Bits& rest = reach(k - 2, a2);
          for (int v = rest.next(0); v >= 0; v = rest.next(v + 1))
            r.set(B_.env.join(d, v));
        }
      }
    }
    return memo_.emplace(pack(k, b), std::move(r)).first->second;
  }

 private:
  static int64_t pack(int k, int b) { return (int64_t)k << 32 | (uint32_t)b; }
  const BooleanEnvelope& B_;
  const FinLattice& L_;
  std::unordered_map<int64_t, Bits> memo_;
};

}  // namespace detail

// Minimal-length difference normal form of an envelope element, by
// iterative deepening; minimality is exhaustive by construction.
inline DifferenceChain espanol_normal_form(const BooleanEnvelope& B,
                                           const FinLattice& L, int e) {
  detail::EspanolTable tab(B, L);
  int k = 0;
  while (!tab.reach(k, L.top()).get(e)) {
    if (++k > 2 * B.env.base().size() + 2)
      throw error("espanol_normal_form: no representation found");
  }
  // Extract a chain of length k by walking the table back down.
  DifferenceChain dc;
  std::vector<int> chain;
  int bound = L.top(), target = e, kk = k;
  while (kk > 0) {
    if (kk == 1) {
      bool found = false;
      for (int a = 0; a < L.size() && !found; ++a)
        if (L.leq(a, bound) && B.embed[a] == target) {
          chain.push_back(a);
          found = true;
        }
      if (!found) throw error("espanol_normal_form: extraction failed");
      break;
    }
    bool found = false;
    for (int a1 = 0; a1 < L.size() && !found; ++a1) {
      if (!L.leq(a1, bound)) continue;
      for (int a2 = 0; a2 < L.size() && !found; ++a2) {
        if (!L.leq(a2, a1)) continue;
        int d = B.env.coheyting_diff(B.embed[a1], B.embed[a2]);
        if (!B.env.leq(d, target)) continue;
        const Bits& rest = tab.reach(kk - 2, a2);
        for (int v = rest.next(0); v >= 0; v = rest.next(v + 1))
          if (B.env.join(d, v) == target) {
            chain.push_back(a1);
            chain.push_back(a2);
            bound = a2;
            target = v;
            kk -= 2;
            found = true;
            break;
          }
      }
    }
    if (!found) throw error("espanol_normal_form: extraction failed");
  }
  dc.as = std::move(chain);
  if (eval_difference_chain(B, dc) != e)
    throw error("espanol_normal_form: result does not evaluate back");
  return dc;
}

// Largest minimal normal-form length over the envelope, minus one.
inline int dim_espanol(const FinLattice& L, int cap = 1 << 12) {
  BooleanEnvelope B = boolean_envelope(L, cap);
  detail::EspanolTable tab(B, L);
  Bits done(B.env.size());
  int k = 0;
  int worst = -1;
  while (done.count() < B.env.size()) {
    const Bits& r = tab.reach(k, L.top());
    for (int e = r.next(0); e >= 0; e = r.next(e + 1))
      if (!done.get(e)) {
        done.set(e);
        worst = std::max(worst, k - 1);
      }
    if (++k > 2 * B.env.base().size() + 2)
      throw error("dim_espanol: envelope not exhausted");
  }
  return worst;
}

}  // namespace krull
