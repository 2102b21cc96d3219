#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "krull/chains.hpp"
#include "krull/dimension.hpp"
#include "krull/lattice.hpp"

namespace krull {

// Bounded lattice morphism stored as its full element map. Constructors
// verify preservation of 0, 1, meet and join over all pairs.
struct LatticeMorphism {
  const FinLattice* dom = nullptr;
  const FinLattice* cod = nullptr;
  std::vector<int> map;

  int operator()(int e) const { return map[e]; }
};

inline void validate_morphism(const LatticeMorphism& m) {
  const FinLattice& D = *m.dom;
  const FinLattice& C = *m.cod;
  if ((int)m.map.size() != D.size())
    throw input_error("morphism: map size mismatch");
  if (m.map[D.bot()] != C.bot()) throw input_error("morphism: 0 not preserved");
  if (m.map[D.top()] != C.top()) throw input_error("morphism: 1 not preserved");
  for (int a = 0; a < D.size(); ++a)
    for (int b = a + 1; b < D.size(); ++b) {
      if (m.map[D.meet(a, b)] != C.meet(m.map[a], m.map[b]))
        throw input_error("morphism: meet not preserved at (" +
                          D.element_label(a) + ", " + D.element_label(b) + ")");
      if (m.map[D.join(a, b)] != C.join(m.map[a], m.map[b]))
        throw input_error("morphism: join not preserved at (" +
                          D.element_label(a) + ", " + D.element_label(b) + ")");
    }
}

inline LatticeMorphism identity_morphism(const FinLattice& L) {
  LatticeMorphism m{&L, &L, {}};
  m.map.resize(L.size());
  for (int e = 0; e < L.size(); ++e) m.map[e] = e;
  return m;
}

// Extends generator images to the whole lattice. Every join-irreducible p
// of a generated lattice equals the meet of the generators above it, so
// h(e) = join over p in e of ( meet over generators g >= p of img(g) ).
// The candidate map is then validated; failure means the images do not
// satisfy the presentation's relations.
inline LatticeMorphism morphism_from_generators(const FinLattice& dom,
                                                const FinLattice& cod,
                                                const std::vector<int>& gens,
                                                const std::vector<int>& imgs) {
  if (gens.size() != imgs.size())
    throw contract_error("morphism_from_generators: length mismatch");
  const int n = dom.base().size();
  std::vector<int> irr_img(n);
  for (int p = 0; p < n; ++p) {
    int pe = dom.principal(p);
    int acc = cod.top();
    for (size_t g = 0; g < gens.size(); ++g)
      if (dom.leq(pe, gens[g])) acc = cod.meet(acc, imgs[g]);
    irr_img[p] = acc;
  }
  LatticeMorphism m{&dom, &cod, {}};
  m.map.resize(dom.size());
  for (int e = 0; e < dom.size(); ++e) {
    int acc = cod.bot();
    const Bits& d = dom.downset(e);
    for (int p = d.next(0); p >= 0; p = d.next(p + 1))
      acc = cod.join(acc, irr_img[p]);
    m.map[e] = acc;
  }
  validate_morphism(m);
  for (size_t g = 0; g < gens.size(); ++g)
    if (m.map[gens[g]] != imgs[g])
      throw input_error("morphism: generator images violate the relations");
  return m;
}

// Morphisms dom -> cod correspond exactly to monotone maps between the
// irreducible posets in the opposite direction: given monotone
// g : irr(cod) -> irr(dom), the preimage map on downsets is a morphism,
// and every morphism arises this way. Drives the random corpus.
inline LatticeMorphism morphism_from_spec_map(const FinLattice& dom,
                                              const FinLattice& cod,
                                              const std::vector<int>& g) {
  const int nc = cod.base().size();
  if ((int)g.size() != nc)
    throw contract_error("morphism_from_spec_map: size mismatch");
  for (int p = 0; p < nc; ++p)
    for (int q = 0; q < nc; ++q)
      if (cod.base().leq(p, q) && !dom.base().leq(g[p], g[q]))
        throw contract_error("morphism_from_spec_map: map not monotone");
  LatticeMorphism m{&dom, &cod, {}};
  m.map.resize(dom.size());
  for (int e = 0; e < dom.size(); ++e) {
    Bits img(nc);
    for (int p = 0; p < nc; ++p)
      if (dom.downset(e).get(g[p])) img.set(p);
    m.map[e] = cod.element_of(img);
  }
  validate_morphism(m);
  return m;
}

inline LatticeMorphism random_morphism(std::mt19937_64& rng,
                                       const FinLattice& dom,
                                       const FinLattice& cod) {
  const int nc = cod.base().size(), nd = dom.base().size();
  if (nd == 0) {
    if (!cod.is_trivial() || nc != 0)
      throw contract_error("random_morphism: trivial dom needs trivial cod");
    return identity_morphism(dom);
  }
  std::uniform_int_distribution<int> pick(0, nd - 1);
  while (true) {
    std::vector<int> g(nc);
    for (int p = 0; p < nc; ++p) g[p] = pick(rng);
    bool mono = true;
    for (int p = 0; p < nc && mono; ++p)
      for (int q = 0; q < nc && mono; ++q)
        if (cod.base().leq(p, q) && !dom.base().leq(g[p], g[q])) mono = false;
    if (mono) return morphism_from_spec_map(dom, cod, g);
  }
}

inline bool is_injective(const LatticeMorphism& m) {
  std::vector<char> seen(m.cod->size(), 0);
  for (int v : m.map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Lying over: the morphism reflects <=; equivalent to injectivity.
struct LyoResult {
  bool holds = false;
  std::optional<std::pair<int, int>> counterexample;  // a,b with failure
};

inline LyoResult is_lying_over(const LatticeMorphism& m) {
  const FinLattice& D = *m.dom;
  for (int a = 0; a < D.size(); ++a)
    for (int b = 0; b < D.size(); ++b)
      if (m.cod->leq(m.map[a], m.map[b]) && !D.leq(a, b))
        return {false, std::make_pair(a, b)};
  return {true, std::nullopt};
}

// Going up: alpha(a) <= alpha(b) \/ y implies some x has a <= b \/ x and
// alpha(x) <= y. The least candidate x* = a - b works whenever any x does,
// because a <= b \/ x forces x* <= x and alpha is monotone; so only x*
// is tested.
struct GugdResult {
  bool holds = false;
  std::optional<std::array<int, 3>> counterexample;  // (a, b, y)
};

inline GugdResult is_going_up(const LatticeMorphism& m) {
  const FinLattice& D = *m.dom;
  const FinLattice& C = *m.cod;
  for (int a = 0; a < D.size(); ++a)
    for (int b = 0; b < D.size(); ++b) {
      int xstar = D.coheyting_diff(a, b);
      for (int y = 0; y < C.size(); ++y)
        if (C.leq(m.map[a], C.join(m.map[b], y)) && !C.leq(m.map[xstar], y))
          return {false, std::array<int, 3>{a, b, y}};
    }
  return {true, std::nullopt};
}

// Going down, the order dual: alpha(a) /\ y <= alpha(b) implies some x has
// a /\ x <= b and alpha(x) >= y; the greatest candidate is a -> b.
inline GugdResult is_going_down(const LatticeMorphism& m) {
  const FinLattice& D = *m.dom;
  const FinLattice& C = *m.cod;
  for (int a = 0; a < D.size(); ++a)
    for (int b = 0; b < D.size(); ++b) {
      int xstar = D.heyting_impl(a, b);
      for (int y = 0; y < C.size(); ++y)
        if (C.leq(C.meet(m.map[a], y), m.map[b]) && !C.leq(y, m.map[xstar]))
          return {false, std::array<int, 3>{a, b, y}};
    }
  return {true, std::nullopt};
}

// Brute-force forms, for the test suite only.
inline bool going_up_brute(const LatticeMorphism& m) {
  const FinLattice& D = *m.dom;
  const FinLattice& C = *m.cod;
  for (int a = 0; a < D.size(); ++a)
    for (int b = 0; b < D.size(); ++b)
      for (int y = 0; y < C.size(); ++y) {
        if (!C.leq(m.map[a], C.join(m.map[b], y))) continue;
        bool any = false;
        for (int x = 0; x < D.size() && !any; ++x)
          if (D.leq(a, D.join(b, x)) && C.leq(m.map[x], y)) any = true;
        if (!any) return false;
      }
  return true;
}

inline bool going_down_brute(const LatticeMorphism& m) {
  const FinLattice& D = *m.dom;
  const FinLattice& C = *m.cod;
  for (int a = 0; a < D.size(); ++a)
    for (int b = 0; b < D.size(); ++b)
      for (int y = 0; y < C.size(); ++y) {
        if (!C.leq(C.meet(m.map[a], y), m.map[b])) continue;
        bool any = false;
        for (int x = 0; x < D.size() && !any; ++x)
          if (D.leq(D.meet(a, x), b) && C.leq(y, m.map[x])) any = true;
        if (!any) return false;
      }
  return true;
}

// ---- Relative collapse ----------------------------------------------------

// A chain over cod collapses over dom when some list a1..ak of image
// elements makes every (H,H') split collapse: (a_h, h in H) joins J0 and
// (a_h, h in H') joins Ul. Adding to J0 / Ul only ever helps, so the
// decision may always use the full image pool; the split tree below shares
// work through the (index, j, u) state.
struct RelativeWitness {
  std::vector<int> as;  // cod elements
  // mask bit h set: a_h joined J0; clear: a_h joined Ul.
  std::vector<std::pair<uint32_t, ChainWitness>> per_split;
};

namespace detail {

inline std::vector<int> image_pool(const LatticeMorphism& alpha) {
  std::vector<int> pool(alpha.map);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

class RelativeDecider {
 public:
  RelativeDecider(const FinLattice& L, const IdealisticChain& C,
                  std::vector<int> pool)
      : L_(L), C_(C), pool_(std::move(pool)) {}

  bool decide() { return go(0, L_.bot(), L_.top()); }

 private:
  bool go(size_t i, int j, int u) {
    if (i == pool_.size())
      return chain_collapses(L_, C_, j, u).has_value();
    int64_t key = ((int64_t)i * L_.size() + j) * L_.size() + u;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool r = go(i + 1, L_.join(j, pool_[i]), u) &&
             go(i + 1, j, L_.meet(u, pool_[i]));
    return memo_[key] = r;
  }

  const FinLattice& L_;
  const IdealisticChain& C_;
  std::vector<int> pool_;
  std::unordered_map<int64_t, bool> memo_;
};

}  // namespace detail

// Exact decision using the full image pool.
inline bool relative_chain_collapses_decide(const LatticeMorphism& alpha,
                                            const IdealisticChain& C) {
  if (!is_injective(alpha))
    throw contract_error("relative collapse requires an injective morphism");
  detail::RelativeDecider d(*alpha.cod, C, detail::image_pool(alpha));
  return d.decide();
}

struct RelativeSearch {
  std::optional<RelativeWitness> witness;
  bool definitive_no = false;  // only when k_max covered the whole pool
};

// Witness search over subsets of the image pool of size <= k_max, smallest
// first. Failure below the full pool size is merely "not found"; at the
// full pool the decision procedure settles the question.
inline RelativeSearch relative_chain_collapses(const LatticeMorphism& alpha,
                                               const IdealisticChain& C,
                                               int k_max) {
  if (!is_injective(alpha))
    throw contract_error("relative collapse requires an injective morphism");
  const FinLattice& L = *alpha.cod;
  std::vector<int> pool = detail::image_pool(alpha);

  // Heuristic order: elements showing up in the chain's saturation first.
  IdealisticChain sat = saturate_chain(L, C);
  Bits hot(L.size());
  for (const auto& lev : sat.levels) {
    for (int x : lev.J) hot.set(x);
    for (int x : lev.U) hot.set(x);
  }
  std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) {
    return hot.get(a) > hot.get(b);
  });

  const int kp = (int)pool.size();
  const int kcap = std::min(k_max, kp);
  for (int k = 0; k <= kcap; ++k) {
    if (k > 20) throw resource_error("relative witness subsets exceed cap");
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      std::vector<int> as(k);
      for (int i = 0; i < k; ++i) as[i] = pool[comb[i]];
      std::vector<std::pair<uint32_t, ChainWitness>> splits;
      bool all = true;
      for (uint32_t mask = 0; mask < (uint32_t(1) << k) && all; ++mask) {
        int j = L.bot(), u = L.top();
        for (int i = 0; i < k; ++i) {
          if (mask & (uint32_t(1) << i))
            j = L.join(j, as[i]);
          else
            u = L.meet(u, as[i]);
        }
        auto w = chain_collapses(L, C, j, u);
        if (!w)
          all = false;
        else
          splits.emplace_back(mask, std::move(*w));
      }
      if (all) {
        RelativeSearch r;
        r.witness = RelativeWitness{std::move(as), std::move(splits)};
        return r;
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && comb[i] == kp - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int t = i + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
    }
  }
  RelativeSearch r;
  r.definitive_no = k_max >= kp;
  return r;
}

// Relative dimension: <= n iff every elementary chain on an (n+1)-tuple of
// cod irreducibles collapses over dom. k_max < 0 means the full pool
// (exact); otherwise the bounded witness search is used.
inline bool relative_dim_leq(const LatticeMorphism& alpha, int n,
                             int k_max = -1) {
  const FinLattice& C = *alpha.cod;
  if (n < -1) throw contract_error("relative_dim_leq: level below -1");
  if (n == -1) return C.is_trivial();
  std::vector<int> irr = C.irreducible_elements();
  if (irr.empty()) return true;
  std::vector<int> idx(n + 1, 0);
  while (true) {
    std::vector<int> tuple(n + 1);
    for (int i = 0; i <= n; ++i) tuple[i] = irr[idx[i]];
    IdealisticChain ch = elementary_chain(tuple);
    bool ok = k_max < 0 ? relative_chain_collapses_decide(alpha, ch)
                        : relative_chain_collapses(alpha, ch, k_max)
                              .witness.has_value();
    if (!ok) return false;
    int i = 0;
    while (i <= n && ++idx[i] == (int)irr.size()) idx[i++] = 0;
    if (i == n + 1) break;
  }
  return true;
}

inline int relative_dim(const LatticeMorphism& alpha, int k_max = -1) {
  for (int n = -1;; ++n) {
    if (relative_dim_leq(alpha, n, k_max)) return n;
    if (n > alpha.cod->base().size())
      throw error("relative_dim: exceeded the irreducible bound");
  }
}

}  // namespace krull
