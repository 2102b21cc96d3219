#pragma once

#include <algorithm>
#include <deque>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "krull/bits.hpp"
#include "krull/entail.hpp"
#include "krull/errors.hpp"
#include "krull/poset.hpp"

namespace krull {

inline constexpr int kDefaultElementCap = 1 << 20;

// Finite distributive lattice in Birkhoff form: elements are exactly the
// downsets of a poset of join-irreducibles. meet = intersection,
// join = union, 0 = empty set, 1 = everything. Elements are referred to by
// dense integer ids; id order is canonical (popcount, then word order), so
// id 0 is bottom and the last id is top.
class FinLattice {
 public:
  FinLattice() : FinLattice(Poset::antichain(0), kDefaultElementCap) {}

  explicit FinLattice(const Poset& base, int cap = kDefaultElementCap)
      : base_(base) {
    enumerate_downsets(cap);
    index_elements();
    build_tables();
  }

  static FinLattice trivial() { return FinLattice(Poset::antichain(0)); }
  static FinLattice boolean(int atoms) {
    return FinLattice(Poset::antichain(atoms));
  }
  // Total order with k elements (k >= 1), the downsets of a (k-1)-chain.
  static FinLattice chain_lattice(int k) {
    if (k < 1) throw contract_error("chain_lattice: k must be >= 1");
    return FinLattice(Poset::chain(k - 1));
  }

  const Poset& base() const { return base_; }
  int size() const { return (int)elems_.size(); }
  int bot() const { return 0; }
  int top() const { return size() - 1; }
  bool is_trivial() const { return size() == 1; }

  const Bits& downset(int e) const { return elems_[e]; }

  int element_of(const Bits& d) const {
    auto it = index_.find(d);
    if (it == index_.end())
      throw contract_error("element_of: not a downset of the base poset");
    return it->second;
  }

  bool leq(int a, int b) const { return elems_[a].subset_of(elems_[b]); }

  int meet(int a, int b) const {
    if (!table_.empty()) return table_[a * size() + b] >> 16;
    return element_of(elems_[a] & elems_[b]);
  }

  int join(int a, int b) const {
    if (!table_.empty()) return table_[a * size() + b] & 0xffff;
    return element_of(elems_[a] | elems_[b]);
  }

  // Empty meet is 1, empty join is 0.
  int meet_all(const std::vector<int>& xs) const {
    int r = top();
    for (int x : xs) r = meet(r, x);
    return r;
  }
  int join_all(const std::vector<int>& xs) const {
    int r = bot();
    for (int x : xs) r = join(r, x);
    return r;
  }

  // Least x with a <= b \/ x: the downward closure of a minus b.
  int coheyting_diff(int a, int b) const {
    Bits d = elems_[a].minus(elems_[b]);
    Bits out(base_.size());
    for (int p = d.next(0); p >= 0; p = d.next(p + 1)) out |= base_.below(p);
    return element_of(out);
  }

  // Greatest x with a /\ x <= b.
  int heyting_impl(int a, int b) const {
    Bits out(base_.size());
    for (int p = 0; p < base_.size(); ++p)
      if ((base_.below(p) & elems_[a]).subset_of(elems_[b])) out.set(p);
    return element_of(out);
  }

  // Principal downset of base point p, always join-irreducible.
  int principal(int p) const { return element_of(base_.below(p)); }

  // Element ids of the join-irreducibles, in base-point order.
  std::vector<int> irreducible_elements() const {
    std::vector<int> out;
    out.reserve(base_.size());
    for (int p = 0; p < base_.size(); ++p) out.push_back(principal(p));
    return out;
  }

  // The induced order on join-irreducible elements, as a standalone poset.
  // Coincides with base() up to the identity relabeling.
  Poset join_irreducibles() const { return base_; }

  // Prime ideal attached to base point p: every element not containing p.
  // I_p is contained in I_q exactly when p <= q in base.
  Bits prime_ideal(int p) const {
    Bits out(size());
    for (int e = 0; e < size(); ++e)
      if (!elems_[e].get(p)) out.set(e);
    return out;
  }

  int classical_dim() const { return base_.height(); }

  // Present when the lattice was built from a presentation.
  const std::vector<std::string>& generator_names() const { return gnames_; }
  const std::vector<int>& generator_elements() const { return gelems_; }
  int generator_element(const std::string& name) const {
    for (size_t i = 0; i < gnames_.size(); ++i)
      if (gnames_[i] == name) return gelems_[i];
    throw input_error("unknown generator: " + name);
  }

  std::string element_label(int e) const {
    if (e == bot()) return "0";
    if (e == top() && gnames_.empty()) return "1";
    if (e == top()) {
      // A presented lattice's top may coincide with a generator; prefer "1".
      return "1";
    }
    // Join of the maximal irreducibles of the downset, named by matching
    // generators where possible.
    std::vector<int> parts;
    const Bits& d = elems_[e];
    for (int p = d.next(0); p >= 0; p = d.next(p + 1)) {
      bool maximal = true;
      for (int q = d.next(0); q >= 0 && maximal; q = d.next(q + 1))
        if (q != p && base_.leq(p, q)) maximal = false;
      if (maximal) parts.push_back(p);
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += " |v| ";
      out += irreducible_label(parts[i]);
    }
    return out;
  }

  std::string irreducible_label(int p) const {
    int pe = principal(p);
    for (size_t g = 0; g < gelems_.size(); ++g)
      if (gelems_[g] == pe) return gnames_[g];
    return "p" + std::to_string(p);
  }

  friend FinLattice build_from_presentation(const EntailmentPresentation&,
                                            int, int);

 private:
  void enumerate_downsets(int cap) {
    const int n = base_.size();
    Bits empty(n);
    std::unordered_map<Bits, int, BitsHash> seen;
    seen.emplace(empty, 0);
    std::deque<Bits> work{empty};
    elems_.push_back(empty);
    while (!work.empty()) {
      Bits d = std::move(work.front());
      work.pop_front();
      for (int p = 0; p < n; ++p) {
        if (d.get(p)) continue;
        Bits strict = base_.below(p);
        strict.reset(p);
        if (!strict.subset_of(d)) continue;
        Bits next = d;
        next.set(p);
        if (seen.emplace(next, 0).second) {
          if ((int)elems_.size() >= cap)
            throw resource_error("lattice element budget exceeded");
          elems_.push_back(next);
          work.push_back(std::move(next));
        }
      }
    }
  }

  void index_elements() {
    std::sort(elems_.begin(), elems_.end(), [](const Bits& a, const Bits& b) {
      if (a.count() != b.count()) return a.count() < b.count();
      return a.word_less(b);
    });
    for (size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = (int)i;
  }

  void build_tables() {
    size_t n = elems_.size();
    if (n > 1024 || n * n > (size_t)1 << 22) return;
    table_.resize(n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        int m = index_.at(elems_[a] & elems_[b]);
        int j = index_.at(elems_[a] | elems_[b]);
        table_[a * n + b] = (uint32_t(m) << 16) | uint32_t(j);
      }
  }

  Poset base_;
  std::vector<Bits> elems_;
  std::unordered_map<Bits, int, BitsHash> index_;
  std::vector<uint32_t> table_;  // meet in high half, join in low half
  std::vector<std::string> gnames_;
  std::vector<int> gelems_;
};

// Materializes the distributive lattice generated by a presentation.
//
// Each generator becomes its truth column over the satisfying two-valued
// valuations; the columns are closed under intersection and union together
// with the constant columns; the closure is then re-expressed in Birkhoff
// form. The join-irreducibles of the closure are recovered as the columns
// that are not the union of the strictly smaller closure columns.
inline FinLattice build_from_presentation(const EntailmentPresentation& pres,
                                          int cap = kDefaultElementCap,
                                          int gen_cap = kDefaultGeneratorCap) {
  ValuationTable vt(pres, gen_cap);
  const auto& sat = vt.satisfying();
  const int nv = (int)sat.size();
  const int ng = (int)pres.generators.size();

  std::vector<Bits> cols;
  std::unordered_map<Bits, int, BitsHash> seen;
  auto push = [&](const Bits& c) {
    if (seen.emplace(c, (int)cols.size()).second) {
      if ((int)cols.size() >= cap)
        throw resource_error("lattice element budget exceeded");
      cols.push_back(c);
      return true;
    }
    return false;
  };

  push(Bits(nv));
  push(Bits::full(nv));
  std::vector<int> gen_col(ng);
  for (int g = 0; g < ng; ++g) {
    Bits c(nv);
    for (int v = 0; v < nv; ++v)
      if (sat[v] & (uint32_t(1) << g)) c.set(v);
    push(c);
    gen_col[g] = seen[c];
  }
  for (size_t i = 0; i < cols.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      push(cols[i] & cols[j]);
      push(cols[i] | cols[j]);
    }

  // Irreducible columns and their induced order.
  std::vector<int> irr;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].none()) continue;
    Bits u((int)nv);
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != i && cols[j].subset_of(cols[i])) u |= cols[j];
    if (u != cols[i]) irr.push_back((int)i);
  }
  std::vector<std::pair<int, int>> pairs;
  for (size_t a = 0; a < irr.size(); ++a)
    for (size_t b = 0; b < irr.size(); ++b)
      if (a != b && cols[irr[a]].subset_of(cols[irr[b]]))
        pairs.emplace_back((int)a, (int)b);

  FinLattice L(Poset::from_pairs((int)irr.size(), pairs), cap);
  if (L.size() != (int)cols.size())
    throw error("presentation closure does not match its Birkhoff form");

  // Map a column to the set of irreducible columns below it.
  auto elem_of_col = [&](const Bits& c) {
    Bits d((int)irr.size());
    for (size_t a = 0; a < irr.size(); ++a)
      if (cols[irr[a]].subset_of(c)) d.set((int)a);
    return L.element_of(d);
  };
  L.gnames_ = pres.generators;
  L.gelems_.resize(ng);
  for (int g = 0; g < ng; ++g) L.gelems_[g] = elem_of_col(cols[gen_col[g]]);
  return L;
}

inline FinLattice random_lattice(std::mt19937_64& rng, int max_irr,
                                 double density = 0.4) {
  std::uniform_int_distribution<int> nd(0, max_irr);
  return FinLattice(random_poset(rng, nd(rng), density));
}

// Law check for the entailment relation induced by a lattice:
// rel(A, B) iff meet(A) <= join(B) over subsets of the whole carrier.
// Covers R, M, T and both distributivity rules.
inline LawReport check_entailment_laws(const FinLattice& L, int cap = 8) {
  const int n = L.size();
  if (n > cap) throw resource_error("law check carrier exceeds cap");
  const uint32_t full = uint32_t(1) << n;
  std::vector<int> meets(full), joins(full);
  meets[0] = L.top();
  joins[0] = L.bot();
  for (uint32_t m = 1; m < full; ++m) {
    int x = __builtin_ctz(m);
    meets[m] = L.meet(x, meets[m & (m - 1)]);
    joins[m] = L.join(x, joins[m & (m - 1)]);
  }
  auto rel = [&](uint32_t a, uint32_t b) {
    return L.leq(meets[a], joins[b]);
  };

  LawReport rep;
  for (int x = 0; x < n; ++x)
    if (!rel(uint32_t(1) << x, uint32_t(1) << x))
      detail::record(rep, {"R", Sequent::make({x}, {x}), {}});
  for (uint32_t a = 0; a < full; ++a)
    for (uint32_t b = 0; b < full; ++b) {
      bool r = rel(a, b);
      if (!r) {
        // M: some smaller pair already entailed.
        for (uint32_t a2 = a;; a2 = (a2 - 1) & a) {
          bool done = false;
          for (uint32_t b2 = b;; b2 = (b2 - 1) & b) {
            if ((a2 != a || b2 != b) && rel(a2, b2)) {
              detail::record(rep, {"M",
                                   Sequent::make(detail::mask_members(a),
                                                 detail::mask_members(b)),
                                   {}});
              done = true;
              break;
            }
            if (b2 == 0) break;
          }
          if (done || a2 == 0) break;
        }
        // T.
        for (int x = 0; x < n; ++x) {
          uint32_t bx = uint32_t(1) << x;
          if (rel(a | bx, b) && rel(a, b | bx))
            detail::record(rep, {"T",
                                 Sequent::make(detail::mask_members(a),
                                               detail::mask_members(b)),
                                 {x}});
        }
      }
      // Distributivity, both directions of both rules.
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          uint32_t ax = a | (uint32_t(1) << x), ay = a | (uint32_t(1) << y);
          bool both = rel(ax, b) && rel(ay, b);
          bool joined = L.leq(L.meet(meets[a], L.join(x, y)), joins[b]);
          if (both != joined)
            detail::record(rep, {"D1",
                                 Sequent::make(detail::mask_members(a),
                                               detail::mask_members(b)),
                                 {x, y}});
          uint32_t bsx = b | (uint32_t(1) << x), bsy = b | (uint32_t(1) << y);
          bool both2 = rel(a, bsx) && rel(a, bsy);
          bool met = L.leq(meets[a], L.join(joins[b], L.meet(x, y)));
          if (both2 != met)
            detail::record(rep, {"D2",
                                 Sequent::make(detail::mask_members(a),
                                               detail::mask_members(b)),
                                 {x, y}});
        }
    }
  return rep;
}

}  // namespace krull
