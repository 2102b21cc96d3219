#pragma once

#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

#include "krull/poly.hpp"

namespace krull {

inline constexpr int kDefaultPairCap = 20000;

// Remainder of p under multivariate division by the basis, leading
// reducers first. The result has no term divisible by any basis lead.
template <class K>
Poly<K> normal_form(Poly<K> p, const std::vector<Poly<K>>& basis) {
  Poly<K> rem(p.nvars(), p.order());
  while (!p.zero()) {
    bool reduced = false;
    for (const Poly<K>& g : basis) {
      if (g.zero()) continue;
      if (!mono_divides(g.lead_mono(), p.lead_mono())) continue;
      Mono q = mono_div(p.lead_mono(), g.lead_mono());
      K c = p.lead_coeff() / g.lead_coeff();
      p = p - g.mul_term(q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      // Move the irreducible leading term to the remainder.
      Poly<K> lt = Poly<K>::term(p.nvars(), p.order(), p.lead_mono(),
                                 p.lead_coeff());
      rem = rem + lt;
      p = p - lt;
    }
  }
  return rem;
}

template <class K>
Poly<K> s_poly(const Poly<K>& f, const Poly<K>& g) {
  Mono l = mono_lcm(f.lead_mono(), g.lead_mono());
  Poly<K> a = f.mul_term(mono_div(l, f.lead_mono()), inv(f.lead_coeff()));
  Poly<K> b = g.mul_term(mono_div(l, g.lead_mono()), inv(g.lead_coeff()));
  return a - b;
}

// Buchberger's algorithm with the coprime-lead criterion, followed by
// autoreduction to the unique reduced monic basis.
template <class K>
std::vector<Poly<K>> groebner_basis(std::vector<Poly<K>> gens,
                                    int pair_cap = kDefaultPairCap) {
  std::vector<Poly<K>> basis;
  for (Poly<K>& g : gens)
    if (!g.zero()) basis.push_back(g.monic());
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  int handled = 0;
  while (!pairs.empty()) {
    if (++handled > pair_cap)
      throw resource_error("groebner basis pair cap exceeded");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Poly<K>&f = basis[i], &g = basis[j];
    Mono l = mono_lcm(f.lead_mono(), g.lead_mono());
    if (mono_deg(l) ==
        mono_deg(f.lead_mono()) + mono_deg(g.lead_mono())) {
      bool coprime = true;
      for (size_t v = 0; v < l.size() && coprime; ++v)
        if (f.lead_mono()[v] && g.lead_mono()[v]) coprime = false;
      if (coprime) continue;
    }
    Poly<K> r = normal_form(s_poly(f, g), basis);
    if (r.zero()) continue;
    r = r.monic();
    for (size_t t = 0; t < basis.size(); ++t) pairs.emplace_back(t, basis.size());
    basis.push_back(std::move(r));
  }

  // Autoreduce: drop members whose lead is divisible by another lead,
  // then reduce tails.
  std::vector<Poly<K>> keep;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j)
      if (i != j && !basis[j].zero() &&
          mono_divides(basis[j].lead_mono(), basis[i].lead_mono())) {
        // Keep the earlier one on equal leads.
        if (mono_cmp(basis[i].order(), basis[j].lead_mono(),
                     basis[i].lead_mono()) != 0 ||
            j < i)
          redundant = true;
      }
    if (!redundant) keep.push_back(basis[i]);
  }
  for (size_t i = 0; i < keep.size(); ++i) {
    std::vector<Poly<K>> others;
    for (size_t j = 0; j < keep.size(); ++j)
      if (j != i) others.push_back(keep[j]);
    keep[i] = normal_form(keep[i], others).monic();
  }
  keep.erase(std::remove_if(keep.begin(), keep.end(),
                            [](const Poly<K>& p) { return p.zero(); }),
             keep.end());
  std::sort(keep.begin(), keep.end(), [](const Poly<K>& a, const Poly<K>& b) {
    return mono_cmp(a.order(), a.lead_mono(), b.lead_mono()) > 0;
  });
  return keep;
}

template <class K>
bool ideal_member(const Poly<K>& f, const std::vector<Poly<K>>& gb) {
  return normal_form(f, gb).zero();
}

template <class K>
bool ideal_is_one(const std::vector<Poly<K>>& gb) {
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].zero();
}

// For a Block1 basis: the members not involving variable 0, rewritten in
// one variable fewer. Under an elimination order these generate the
// contraction of the ideal.
template <class K>
std::vector<Poly<K>> eliminate_var0(const std::vector<Poly<K>>& gb,
                                    MonoOrder target_order) {
  std::vector<Poly<K>> out;
  for (const Poly<K>& g : gb) {
    bool has_t = false;
    for (const auto& t : g.terms())
      if (t.m[0] != 0) {
        has_t = true;
        break;
      }
    if (has_t) continue;
    Poly<K> h(g.nvars() - 1, target_order);
    for (const auto& t : g.terms()) {
      Mono m(t.m.begin() + 1, t.m.end());
      h = h + Poly<K>::term(g.nvars() - 1, target_order, std::move(m), t.c);
    }
    out.push_back(h);
  }
  return out;
}

}  // namespace krull
