#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "krull/errors.hpp"
#include "krull/numeric.hpp"

namespace krull {

// Exponent vector; index 0 is the first variable.
using Mono = std::vector<uint32_t>;

enum class MonoOrder {
  Lex,      // plain lexicographic
  GrevLex,  // graded reverse lexicographic
  Block1,   // variable 0 eliminated first, grevlex on the rest
};

inline uint32_t mono_deg(const Mono& m) {
  uint32_t d = 0;
  for (uint32_t e : m) d += e;
  return d;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) {  // b / a
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) throw contract_error("monomial division underflow");
    r[i] = b[i] - a[i];
  }
  return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

namespace detail {

inline int grevlex_cmp(const Mono& a, const Mono& b, size_t from) {
  uint32_t da = 0, db = 0;
  for (size_t i = from; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.size(); i-- > from;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

}  // namespace detail

// Three-way comparison, negative when a is the smaller monomial.
inline int mono_cmp(MonoOrder ord, const Mono& a, const Mono& b) {
  switch (ord) {
    case MonoOrder::Lex:
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case MonoOrder::GrevLex:
      return detail::grevlex_cmp(a, b, 0);
    case MonoOrder::Block1:
      if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
      return detail::grevlex_cmp(a, b, 1);
  }
  return 0;
}

// Sparse polynomial over a field K, terms sorted descending in the given
// order, zero coefficients never stored.
template <class K>
class Poly {
 public:
  struct Term {
    Mono m;
    K c;
  };

  Poly() = default;
  Poly(int nvars, MonoOrder ord) : nvars_(nvars), ord_(ord) {}

  static Poly constant(int nvars, MonoOrder ord, const K& c) {
    Poly p(nvars, ord);
    if (!is_zero(c)) p.terms_.push_back({Mono(nvars, 0), c});
    return p;
  }

  static Poly variable(int nvars, MonoOrder ord, int i, const K& one) {
    Poly p(nvars, ord);
    Mono m(nvars, 0);
    m[i] = 1;
    p.terms_.push_back({m, one});
    return p;
  }

  static Poly term(int nvars, MonoOrder ord, Mono m, const K& c) {
    Poly p(nvars, ord);
    if (!is_zero(c)) p.terms_.push_back({std::move(m), c});
    return p;
  }

  int nvars() const { return nvars_; }
  MonoOrder order() const { return ord_; }
  bool zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Mono& lead_mono() const {
    if (zero()) throw contract_error("leading term of zero");
    return terms_.front().m;
  }
  const K& lead_coeff() const {
    if (zero()) throw contract_error("leading term of zero");
    return terms_.front().c;
  }

  uint32_t total_degree() const {
    uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, mono_deg(t.m));
    return d;
  }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && mono_deg(terms_[0].m) == 0);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.same_space(b);
    Poly r(a.nvars_, a.ord_);
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() &&
           mono_cmp(a.ord_, a.terms_[i].m, b.terms_[j].m) > 0)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() ||
                 mono_cmp(a.ord_, a.terms_[i].m, b.terms_[j].m) < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        K c = a.terms_[i].c + b.terms_[j].c;
        if (!is_zero(c)) r.terms_.push_back({a.terms_[i].m, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly mul_term(const Mono& m, const K& c) const {
    Poly r(nvars_, ord_);
    if (is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      K cc = t.c * c;
      if (!is_zero(cc)) r.terms_.push_back({mono_mul(t.m, m), cc});
    }
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.same_space(b);
    Poly r(a.nvars_, a.ord_);
    for (const Term& t : b.terms_) r = r + a.mul_term(t.m, t.c);
    return r;
  }

  Poly scaled(const K& c) const { return mul_term(Mono(nvars_, 0), c); }

  Poly monic() const {
    if (zero()) return *this;
    return scaled(inv(lead_coeff()));
  }

  Poly pow(uint32_t e) const {
    if (zero() && e == 0)
      throw contract_error("0^0 of a polynomial without a known one");
    Poly r = e == 0 ? constant(nvars_, ord_, one_like(terms_[0].c)) : *this;
    for (uint32_t k = 1; k < e; ++k) r = r * *this;
    return r;
  }

  // Substitution: variable i becomes values[i]. Values must share one
  // polynomial space, which also becomes the result's space.
  Poly compose(const std::vector<Poly>& values, const Poly& one) const {
    Poly r(one.nvars(), one.order());
    for (const Term& t : terms_) {
      Poly acc = one.scaled(t.c);
      for (size_t i = 0; i < t.m.size(); ++i)
        for (uint32_t e = 0; e < t.m[i]; ++e) acc = acc * values[i];
      r = r + acc;
    }
    return r;
  }

  bool operator==(const Poly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != o.terms_[i].m || !(terms_[i].c == o.terms_[i].c))
        return false;
    return true;
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (zero()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += " + ";
      std::string cs = coeff_str(terms_[i].c);
      std::string ms;
      for (size_t v = 0; v < terms_[i].m.size(); ++v) {
        uint32_t e = terms_[i].m[v];
        if (!e) continue;
        if (!ms.empty()) ms += "*";
        ms += vars[v];
        if (e > 1) ms += "^" + std::to_string(e);
      }
      if (ms.empty())
        out += cs;
      else if (cs == "1")
        out += ms;
      else
        out += cs + "*" + ms;
    }
    return out;
  }

 private:
  void same_space(const Poly& o) const {
    if (nvars_ != o.nvars_ || ord_ != o.ord_)
      throw contract_error("polynomial spaces differ");
  }

  int nvars_ = 0;
  MonoOrder ord_ = MonoOrder::GrevLex;
  std::vector<Term> terms_;
};

template <class K>
inline bool is_zero(const Poly<K>& p) {
  return p.zero();
}

}  // namespace krull
