#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "krull/errors.hpp"

namespace krull {

// A sequent lhs |- rhs over generator indices, meaning /\lhs <= \/rhs.
// Empty lhs denotes 1, empty rhs denotes 0. Sides are kept sorted and
// deduplicated so equality is syntactic.
struct Sequent {
  std::vector<int> lhs, rhs;

  static Sequent make(std::vector<int> l, std::vector<int> r) {
    auto norm = [](std::vector<int>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    norm(l);
    norm(r);
    return Sequent{std::move(l), std::move(r)};
  }

  bool operator==(const Sequent& o) const {
    return lhs == o.lhs && rhs == o.rhs;
  }
};

struct EntailmentPresentation {
  std::vector<std::string> generators;
  std::vector<Sequent> axioms;

  int add_generator(const std::string& name) {
    if (find_generator(name) >= 0)
      throw input_error("duplicate generator: " + name);
    generators.push_back(name);
    return (int)generators.size() - 1;
  }

  int find_generator(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == name) return (int)i;
    return -1;
  }

  void add_axiom(Sequent s) {
    check_sequent(s);
    for (const Sequent& a : axioms)
      if (a == s) return;
    axioms.push_back(std::move(s));
  }

  void check_sequent(const Sequent& s) const {
    for (int g : s.lhs) check_gen(g);
    for (int g : s.rhs) check_gen(g);
  }

 private:
  void check_gen(int g) const {
    if (g < 0 || g >= (int)generators.size())
      throw input_error("sequent mentions unknown generator index");
  }
};

inline constexpr int kDefaultGeneratorCap = 20;

namespace detail {

inline uint32_t mask_of(const std::vector<int>& xs) {
  uint32_t m = 0;
  for (int x : xs) m |= uint32_t(1) << x;
  return m;
}

}  // namespace detail

// All two-valued generator assignments satisfying the axioms, as bitmasks.
// An assignment m satisfies (L |- R) when L inside m forces R to meet m.
class ValuationTable {
 public:
  ValuationTable(const EntailmentPresentation& pres,
                 int cap = kDefaultGeneratorCap) {
    n_ = (int)pres.generators.size();
    if (n_ > cap || n_ > 30)
      throw resource_error("presentation exceeds the generator cap");
    std::vector<std::pair<uint32_t, uint32_t>> ax;
    ax.reserve(pres.axioms.size());
    for (const Sequent& a : pres.axioms)
      ax.emplace_back(detail::mask_of(a.lhs), detail::mask_of(a.rhs));
    for (uint32_t m = 0; m < (uint32_t(1) << n_); ++m) {
      bool ok = true;
      for (auto [l, r] : ax)
        if ((l & ~m) == 0 && (r & m) == 0) {
          ok = false;
          break;
        }
      if (ok) sat_.push_back(m);
    }
  }

  int generator_count() const { return n_; }
  const std::vector<uint32_t>& satisfying() const { return sat_; }

  bool entails(const Sequent& q) const {
    uint32_t l = detail::mask_of(q.lhs), r = detail::mask_of(q.rhs);
    for (uint32_t m : sat_)
      if ((l & ~m) == 0 && (r & m) == 0) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<uint32_t> sat_;
};

// Valuation path. Sound and complete for finite presentations.
inline bool entails_free(const EntailmentPresentation& pres, const Sequent& q,
                         int cap = kDefaultGeneratorCap) {
  pres.check_sequent(q);
  return ValuationTable(pres, cap).entails(q);
}

inline bool is_consistent(const EntailmentPresentation& pres,
                          int cap = kDefaultGeneratorCap) {
  return !entails_free(pres, Sequent{}, cap);
}

// Derivational path, used as an independent secondary decision procedure.
//
// The derivable judgments A < Y (Y a family of singletons, encoded as a
// mask) form the least relation closed under
//   (i)  some member of Y lies inside A;
//   (ii) an axiom (L |- R) with L inside A has A,y < Y for every y in R.
// Premises in (ii) strictly enlarge A: an application whose premise equals
// the conclusion is redundant in a minimal derivation, so such axiom uses
// are skipped and the recursion runs over a DAG of strictly growing masks.
class DerivationEngine {
 public:
  DerivationEngine(const EntailmentPresentation& pres,
                   int cap = kDefaultGeneratorCap) {
    n_ = (int)pres.generators.size();
    if (n_ > cap || n_ > 30)
      throw resource_error("presentation exceeds the generator cap");
    for (const Sequent& a : pres.axioms)
      axioms_.emplace_back(detail::mask_of(a.lhs), a.rhs);
  }

  bool derives(const Sequent& q) {
    goal_ = detail::mask_of(q.rhs);
    memo_.clear();
    return prec(detail::mask_of(q.lhs));
  }

 private:
  bool prec(uint32_t a) {
    if (a & goal_) return true;
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    bool ok = false;
    for (const auto& [lhs, rhs] : axioms_) {
      if (lhs & ~a) continue;
      bool all = true;
      for (int y : rhs) {
        uint32_t next = a | (uint32_t(1) << y);
        if (next == a || !prec(next)) {
          all = false;
          break;
        }
      }
      if (all) {  // vacuous when rhs is empty: a collapse axiom applies
        ok = true;
        break;
      }
    }
    return memo_[a] = ok;
  }

  int n_ = 0;
  uint32_t goal_ = 0;
  std::vector<std::pair<uint32_t, std::vector<int>>> axioms_;
  std::unordered_map<uint32_t, bool> memo_;
};

inline bool entails_free_derivation(const EntailmentPresentation& pres,
                                    const Sequent& q,
                                    int cap = kDefaultGeneratorCap) {
  pres.check_sequent(q);
  return DerivationEngine(pres, cap).derives(q);
}

// Law checking for an explicitly tabulated relation.

struct LawViolation {
  std::string law;  // "R", "M", "T", "D1", "D2"
  Sequent at;       // the sequent that should be present / is inconsistent
  std::vector<int> extra;  // cut element or the x,y of a distributivity law
};

struct LawReport {
  std::vector<LawViolation> violations;
  size_t total_violations = 0;  // may exceed violations.size() when capped
  bool ok() const { return total_violations == 0; }
};

inline constexpr int kLawCarrierCap = 10;
inline constexpr size_t kLawReportCap = 64;

namespace detail {

inline void record(LawReport& rep, LawViolation v) {
  ++rep.total_violations;
  if (rep.violations.size() < kLawReportCap)
    rep.violations.push_back(std::move(v));
}

inline std::vector<int> mask_members(uint32_t m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

}  // namespace detail

// Checks reflexivity, monotonicity and cut for a relation given as an
// explicit table of sequents over a carrier of n named points.
inline LawReport check_entailment_laws(int carrier_size,
                                       const std::vector<Sequent>& table,
                                       int cap = kLawCarrierCap) {
  if (carrier_size > cap)
    throw resource_error("law check carrier exceeds cap");
  const uint32_t full = uint32_t(1) << carrier_size;
  std::vector<std::vector<char>> rel(full, std::vector<char>(full, 0));
  for (const Sequent& s : table) {
    for (int g : s.lhs)
      if (g < 0 || g >= carrier_size)
        throw input_error("sequent outside carrier");
    for (int g : s.rhs)
      if (g < 0 || g >= carrier_size)
        throw input_error("sequent outside carrier");
    rel[detail::mask_of(s.lhs)][detail::mask_of(s.rhs)] = 1;
  }

  LawReport rep;
  for (int x = 0; x < carrier_size; ++x) {
    uint32_t m = uint32_t(1) << x;
    if (!rel[m][m])
      detail::record(rep, {"R", Sequent::make({x}, {x}), {}});
  }

  // Superset closure along both coordinates: cl[A][B] holds when some
  // (A',B') with A' within A, B' within B is in the table.
  std::vector<std::vector<char>> cl = rel;
  for (int bit = 0; bit < carrier_size; ++bit)
    for (uint32_t a = 0; a < full; ++a)
      if (a & (uint32_t(1) << bit))
        for (uint32_t b = 0; b < full; ++b)
          if (cl[a ^ (uint32_t(1) << bit)][b]) cl[a][b] = 1;
  for (int bit = 0; bit < carrier_size; ++bit)
    for (uint32_t a = 0; a < full; ++a)
      for (uint32_t b = 0; b < full; ++b)
        if (b & (uint32_t(1) << bit))
          if (cl[a][b ^ (uint32_t(1) << bit)]) cl[a][b] = 1;
  for (uint32_t a = 0; a < full; ++a)
    for (uint32_t b = 0; b < full; ++b)
      if (cl[a][b] && !rel[a][b])
        detail::record(rep, {"M",
                             Sequent::make(detail::mask_members(a),
                                           detail::mask_members(b)),
                             {}});

  for (uint32_t a = 0; a < full; ++a)
    for (uint32_t b = 0; b < full; ++b) {
      if (rel[a][b]) continue;
      for (int x = 0; x < carrier_size; ++x) {
        uint32_t bx = uint32_t(1) << x;
        if (rel[a | bx][b] && rel[a][b | bx])
          detail::record(rep, {"T",
                               Sequent::make(detail::mask_members(a),
                                             detail::mask_members(b)),
                               {x}});
      }
    }
  return rep;
}

}  // namespace krull
