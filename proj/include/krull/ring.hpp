#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "krull/groebner.hpp"
#include "krull/numeric.hpp"
#include "krull/poly.hpp"

namespace krull {

// Ring elements are plain values; the ring descriptor supplies every
// operation. Integer residues are kept reduced, quotient elements are
// kept in normal form under the quotient's basis.
using RingElem = std::variant<Int, Poly<Rat>, Poly<Fp>>;

class CompRing {
 public:
  enum class Kind { Integers, IntegersMod, PolyRat, PolyFp, Quotient };

  static CompRing integers() { return CompRing(Kind::Integers); }

  static CompRing integers_mod(Int n) {
    if (n < 2) throw input_error("modulus must be at least 2");
    CompRing r(Kind::IntegersMod);
    r.mod_ = std::move(n);
    return r;
  }

  static CompRing poly_rat(std::vector<std::string> vars) {
    CompRing r(Kind::PolyRat);
    r.set_vars(std::move(vars));
    return r;
  }

  static CompRing poly_fp(int64_t p, std::vector<std::string> vars) {
    if (p < 2 || p >= (int64_t(1) << 31) || !is_prime_u32(p))
      throw input_error("field characteristic must be a prime below 2^31");
    CompRing r(Kind::PolyFp);
    r.p_ = p;
    r.set_vars(std::move(vars));
    return r;
  }

  static CompRing quotient(const CompRing& base, std::vector<RingElem> gens) {
    if (base.kind_ != Kind::PolyRat && base.kind_ != Kind::PolyFp)
      throw input_error("quotient base must be a polynomial ring");
    CompRing r(Kind::Quotient);
    r.p_ = base.p_;
    r.vars_ = base.vars_;
    r.base_kind_ = base.kind_;
    r.quot_gens_ = std::move(gens);
    for (const RingElem& g : r.quot_gens_) base.check_elem(g);
    if (r.base_kind_ == Kind::PolyRat)
      r.quot_gb_rat_ = groebner_basis(r.raw_polys<Rat>(r.quot_gens_));
    else
      r.quot_gb_fp_ = groebner_basis(r.raw_polys<Fp>(r.quot_gens_));
    return r;
  }

  Kind kind() const { return kind_; }
  const Int& modulus() const { return mod_; }
  int64_t characteristic() const { return p_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return (int)vars_.size(); }
  bool poly_like() const {
    return kind_ == Kind::PolyRat || kind_ == Kind::PolyFp ||
           kind_ == Kind::Quotient;
  }
  bool rat_coeffs() const {
    return kind_ == Kind::PolyRat ||
           (kind_ == Kind::Quotient && base_kind_ == Kind::PolyRat);
  }

  // ---- element construction -----------------------------------------------

  RingElem zero() const { return from_int(0); }
  RingElem one() const { return from_int(1); }

  RingElem from_int(Int v) const {
    switch (kind_) {
      case Kind::Integers:
        return v;
      case Kind::IntegersMod: {
        Int r = v % mod_;
        if (r < 0) r += mod_;
        return r;
      }
      default:
        if (rat_coeffs())
          return canon(Poly<Rat>::constant(nvars(), MonoOrder::GrevLex,
                                           Rat(std::move(v))));
        return canon(Poly<Fp>::constant(
            nvars(), MonoOrder::GrevLex,
            Fp::make((int64_t)(v % p_), p_)));
    }
  }

  RingElem var(int i) const {
    if (!poly_like() || i < 0 || i >= nvars())
      throw contract_error("variable outside this ring");
    if (rat_coeffs())
      return canon(
          Poly<Rat>::variable(nvars(), MonoOrder::GrevLex, i, Rat(1)));
    return canon(
        Poly<Fp>::variable(nvars(), MonoOrder::GrevLex, i, Fp::make(1, p_)));
  }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars_[i] == name) return i;
    return -1;
  }

  // ---- arithmetic -----------------------------------------------------------

  RingElem add(const RingElem& a, const RingElem& b) const {
    check_elem(a);
    check_elem(b);
    return std::visit(
        [&](const auto& x, const auto& y) -> RingElem {
          if constexpr (std::is_same_v<decltype(x), decltype(y)>)
            return canon(x + y);
          else
            throw contract_error("mixed ring elements");
        },
        a, b);
  }

  RingElem sub(const RingElem& a, const RingElem& b) const {
    return add(a, neg(b));
  }

  RingElem neg(const RingElem& a) const {
    check_elem(a);
    return std::visit([&](const auto& x) -> RingElem { return canon(-x); },
                      a);
  }

  RingElem mul(const RingElem& a, const RingElem& b) const {
    check_elem(a);
    check_elem(b);
    return std::visit(
        [&](const auto& x, const auto& y) -> RingElem {
          if constexpr (std::is_same_v<decltype(x), decltype(y)>)
            return canon(x * y);
          else
            throw contract_error("mixed ring elements");
        },
        a, b);
  }

  RingElem pow(const RingElem& a, uint32_t e) const {
    RingElem r = one();
    for (uint32_t k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }

  bool is_zero_elem(const RingElem& a) const {
    check_elem(a);
    return std::visit(
        [&](const auto& x) {
          auto c = canon(x);
          using T = std::decay_t<decltype(x)>;
          return is_zero(std::get<T>(c));
        },
        a);
  }

  bool eq(const RingElem& a, const RingElem& b) const {
    return is_zero_elem(sub(a, b));
  }

  std::string str(const RingElem& a) const {
    check_elem(a);
    return std::visit(
        [&](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Int>)
            return x.str();
          else
            return x.str(vars_);
        },
        a);
  }

  void check_elem(const RingElem& a) const {
    bool ok = false;
    switch (kind_) {
      case Kind::Integers:
      case Kind::IntegersMod:
        ok = std::holds_alternative<Int>(a);
        break;
      default:
        if (rat_coeffs())
          ok = std::holds_alternative<Poly<Rat>>(a) &&
               std::get<Poly<Rat>>(a).nvars() == nvars();
        else
          ok = std::holds_alternative<Poly<Fp>>(a) &&
               std::get<Poly<Fp>>(a).nvars() == nvars();
    }
    if (!ok) throw contract_error("element does not belong to this ring");
  }

  // ---- normalization --------------------------------------------------------

  RingElem canon(Int v) const {
    if (kind_ == Kind::IntegersMod) {
      v %= mod_;
      if (v < 0) v += mod_;
    }
    return v;
  }

  RingElem canon(Poly<Rat> p) const {
    if (kind_ == Kind::Quotient) return normal_form(std::move(p), quot_gb_rat_);
    return p;
  }

  RingElem canon(Poly<Fp> p) const {
    if (kind_ == Kind::Quotient) return normal_form(std::move(p), quot_gb_fp_);
    return p;
  }

  template <class K>
  std::vector<Poly<K>> raw_polys(const std::vector<RingElem>& es) const {
    std::vector<Poly<K>> out;
    out.reserve(es.size());
    for (const RingElem& e : es) out.push_back(std::get<Poly<K>>(e));
    return out;
  }

  const std::vector<RingElem>& quotient_gens() const { return quot_gens_; }

  template <class K>
  const std::vector<Poly<K>>& quotient_gb() const {
    if constexpr (std::is_same_v<K, Rat>)
      return quot_gb_rat_;
    else
      return quot_gb_fp_;
  }

 private:
  explicit CompRing(Kind k) : kind_(k) {}

  void set_vars(std::vector<std::string> vars) {
    if (vars.empty()) throw input_error("polynomial ring needs variables");
    for (size_t i = 0; i < vars.size(); ++i)
      for (size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j]) throw input_error("duplicate variable name");
    vars_ = std::move(vars);
  }

  Kind kind_;
  Int mod_;               // IntegersMod
  int64_t p_ = 0;         // PolyFp / quotient of it
  std::vector<std::string> vars_;
  Kind base_kind_ = Kind::PolyRat;  // Quotient only
  std::vector<RingElem> quot_gens_;
  std::vector<Poly<Rat>> quot_gb_rat_;
  std::vector<Poly<Fp>> quot_gb_fp_;
};

// ---- finitely generated ideals ---------------------------------------------

// The running ideal inside the boundary iteration: a single nonnegative
// integer for the arithmetic kinds, a reduced basis for the others.
struct FGIdeal {
  Int g;  // Integers / IntegersMod
  std::vector<Poly<Rat>> gb_rat;
  std::vector<Poly<Fp>> gb_fp;
};

struct CertificateSearch;

template <class K>
K one_like_of(const CompRing& R);
template <class K>
std::vector<Poly<K>> detail_saturate_polys(const CompRing& R,
                                           const std::vector<Poly<K>>& gb,
                                           const Poly<K>& f);
template <class K>
bool detail_radical_polys(const CompRing& R, const std::vector<Poly<K>>& gens,
                          const Poly<K>& f);
template <class K>
bool detail_find_cert_poly(const CompRing& R, const std::vector<RingElem>& xs,
                           const std::vector<uint32_t>& m, const RingElem& c0,
                           const std::vector<RingElem>& ci, uint32_t d,
                           CertificateSearch& out);

namespace detail {

inline Int int_of(const RingElem& e) { return std::get<Int>(e); }

// Removes from b every prime it shares with s; the result is coprime to
// s. With s = 0 the loop strips b down to 1, matching the conventions
// gcd(b, 0) = |b| and "0 has every prime": both the radical and the
// saturation read the right answers off that.
inline Int strip_factors(Int b, const Int& s) {
  if (b == 0) return b;
  while (true) {
    Int d = gcd(b, s);
    if (d < 0) d = -d;
    if (d <= 1) return b < 0 ? -b : b;
    b /= d;
  }
}

}  // namespace detail

inline FGIdeal ideal_from_gens(const CompRing& R,
                               const std::vector<RingElem>& gens) {
  for (const RingElem& e : gens) R.check_elem(e);
  FGIdeal I;
  switch (R.kind()) {
    case CompRing::Kind::Integers:
    case CompRing::Kind::IntegersMod: {
      Int g = 0;
      for (const RingElem& e : gens) g = gcd(g, detail::int_of(e));
      if (R.kind() == CompRing::Kind::IntegersMod) g = gcd(g, R.modulus());
      if (g < 0) g = -g;
      I.g = g;
      break;
    }
    default: {
      if (R.rat_coeffs()) {
        auto polys = R.raw_polys<Rat>(gens);
        if (R.kind() == CompRing::Kind::Quotient)
          for (const auto& q : R.quotient_gb<Rat>()) polys.push_back(q);
        I.gb_rat = groebner_basis(polys);
      } else {
        auto polys = R.raw_polys<Fp>(gens);
        if (R.kind() == CompRing::Kind::Quotient)
          for (const auto& q : R.quotient_gb<Fp>()) polys.push_back(q);
        I.gb_fp = groebner_basis(polys);
      }
    }
  }
  return I;
}

inline bool ideal_contains(const CompRing& R, const FGIdeal& I,
                           const RingElem& f) {
  R.check_elem(f);
  switch (R.kind()) {
    case CompRing::Kind::Integers:
    case CompRing::Kind::IntegersMod: {
      Int v = detail::int_of(f);
      if (I.g == 0) {
        if (R.kind() == CompRing::Kind::IntegersMod)
          return v % R.modulus() == 0;
        return v == 0;
      }
      return v % I.g == 0;
    }
    default:
      if (R.rat_coeffs())
        return ideal_member(std::get<Poly<Rat>>(f), I.gb_rat);
      return ideal_member(std::get<Poly<Fp>>(f), I.gb_fp);
  }
}

inline bool ideal_is_whole_ring(const CompRing& R, const FGIdeal& I) {
  return ideal_contains(R, I, R.one());
}

// (I : f^infinity).
inline FGIdeal ideal_saturate(const CompRing& R, const FGIdeal& I,
                              const RingElem& f) {
  R.check_elem(f);
  FGIdeal out;
  switch (R.kind()) {
    case CompRing::Kind::Integers:
    case CompRing::Kind::IntegersMod: {
      Int g = detail::int_of(f);
      if (R.kind() == CompRing::Kind::IntegersMod) g %= R.modulus();
      if (g == 0) {
        // f is nilpotent-or-zero here, so some power is 0, which lies in
        // every ideal: the saturation is everything.
        out.g = 1;
        return out;
      }
      if (I.g == 0) {
        out.g = (R.kind() == CompRing::Kind::IntegersMod)
                    ? detail::strip_factors(R.modulus(), g)
                    : Int(0);
        return out;
      }
      out.g = detail::strip_factors(I.g, g);
      return out;
    }
    default:
      break;
  }
  // Polynomial kinds: eliminate t from I + (1 - t*f) under a block order
  // with t first.
  if (R.rat_coeffs()) {
    out.gb_rat = detail_saturate_polys<Rat>(R, I.gb_rat,
                                            std::get<Poly<Rat>>(f));
  } else {
    out.gb_fp =
        detail_saturate_polys<Fp>(R, I.gb_fp, std::get<Poly<Fp>>(f));
  }
  return out;
}

template <class K>
std::vector<Poly<K>> detail_saturate_polys(const CompRing& R,
                                           const std::vector<Poly<K>>& gb,
                                           const Poly<K>& f) {
  const int n = R.nvars();
  auto lift = [&](const Poly<K>& p) {
    Poly<K> q(n + 1, MonoOrder::Block1);
    for (const auto& t : p.terms()) {
      Mono m(n + 1, 0);
      for (int i = 0; i < n; ++i) m[i + 1] = t.m[i];
      q = q + Poly<K>::term(n + 1, MonoOrder::Block1, std::move(m), t.c);
    }
    return q;
  };
  std::vector<Poly<K>> big;
  for (const Poly<K>& g : gb) big.push_back(lift(g));
  if (f.zero()) {
    // (I : 0^infinity) is the whole ring.
    return {Poly<K>::constant(n, MonoOrder::GrevLex,
                              one_like_of<K>(R))};
  }
  Poly<K> one = Poly<K>::constant(n + 1, MonoOrder::Block1, one_like_of<K>(R));
  Poly<K> t = Poly<K>::variable(n + 1, MonoOrder::Block1, 0, one_like_of<K>(R));
  big.push_back(one - t * lift(f));
  auto g1 = groebner_basis(big);
  auto low = eliminate_var0(g1, MonoOrder::GrevLex);
  return groebner_basis(low);
}

template <class K>
K one_like_of(const CompRing& R) {
  if constexpr (std::is_same_v<K, Rat>)
    return Rat(1);
  else
    return Fp::make(1, R.characteristic());
}

// f in the radical of <gens>.
inline bool radical_member(const CompRing& R, const RingElem& f,
                           const std::vector<RingElem>& gens) {
  R.check_elem(f);
  switch (R.kind()) {
    case CompRing::Kind::Integers:
    case CompRing::Kind::IntegersMod: {
      FGIdeal I = ideal_from_gens(R, gens);
      Int v = detail::int_of(f);
      if (R.kind() == CompRing::Kind::IntegersMod) v %= R.modulus();
      if (I.g == 0) return v == 0;
      // Every prime of I.g must divide f.
      return detail::strip_factors(I.g, v) == 1;
    }
    default:
      break;
  }
  // Rabinowitsch: 1 in <gens, quotient relations, 1 - t*f>.
  if (R.rat_coeffs()) {
    std::vector<Poly<Rat>> base = R.raw_polys<Rat>(gens);
    if (R.kind() == CompRing::Kind::Quotient)
      for (const auto& q : R.quotient_gb<Rat>()) base.push_back(q);
    return detail_radical_polys<Rat>(R, base, std::get<Poly<Rat>>(f));
  }
  std::vector<Poly<Fp>> base = R.raw_polys<Fp>(gens);
  if (R.kind() == CompRing::Kind::Quotient)
    for (const auto& q : R.quotient_gb<Fp>()) base.push_back(q);
  return detail_radical_polys<Fp>(R, base, std::get<Poly<Fp>>(f));
}

template <class K>
bool detail_radical_polys(const CompRing& R, const std::vector<Poly<K>>& gens,
                          const Poly<K>& f) {
  const int n = R.nvars();
  auto lift = [&](const Poly<K>& p) {
    Poly<K> q(n + 1, MonoOrder::Block1);
    for (const auto& t : p.terms()) {
      Mono m(n + 1, 0);
      for (int i = 0; i < n; ++i) m[i + 1] = t.m[i];
      q = q + Poly<K>::term(n + 1, MonoOrder::Block1, std::move(m), t.c);
    }
    return q;
  };
  std::vector<Poly<K>> big;
  for (const Poly<K>& g : gens) big.push_back(lift(g));
  Poly<K> one = Poly<K>::constant(n + 1, MonoOrder::Block1, one_like_of<K>(R));
  Poly<K> t = Poly<K>::variable(n + 1, MonoOrder::Block1, 0, one_like_of<K>(R));
  big.push_back(one - t * lift(f));
  return ideal_is_one(groebner_basis(big));
}

// Zariski entailment: the product of U lies in the radical of <J>.
inline bool zar_entails(const CompRing& R, const std::vector<RingElem>& U,
                        const std::vector<RingElem>& J) {
  RingElem u = R.one();
  for (const RingElem& e : U) u = R.mul(u, e);
  return radical_member(R, u, J);
}

// ---- idealistic chains over a ring -----------------------------------------

struct RingLevel {
  std::vector<RingElem> J, U;
};

struct RingChain {
  std::vector<RingLevel> levels;
  int ell() const { return (int)levels.size() - 1; }
};

inline RingChain elementary_ring_chain(const std::vector<RingElem>& xs) {
  if (xs.empty()) throw contract_error("elementary chain: empty tuple");
  RingChain C;
  C.levels.resize(xs.size() + 1);
  C.levels[0].U = {xs[0]};
  for (size_t i = 1; i < xs.size(); ++i) {
    C.levels[i].J = {xs[i - 1]};
    C.levels[i].U = {xs[i]};
  }
  C.levels.back().J = {xs.back()};
  return C;
}

// Boundary iteration: C_0 = (<J_0> : u_0^inf), C_i = ((C_{i-1} + <J_i>) :
// u_i^inf) with u_i the product of level i's U; the chain collapses when
// the last ideal is everything.
inline bool chain_collapses_ring(const CompRing& R, const RingChain& C) {
  if (C.levels.empty()) throw contract_error("empty ring chain");
  FGIdeal cur;
  bool first = true;
  for (const RingLevel& lvl : C.levels) {
    std::vector<RingElem> acc;
    if (!first) {
      switch (R.kind()) {
        case CompRing::Kind::Integers:
        case CompRing::Kind::IntegersMod:
          acc.push_back(RingElem(cur.g));
          break;
        default:
          if (R.rat_coeffs())
            for (const auto& p : cur.gb_rat) acc.push_back(RingElem(p));
          else
            for (const auto& p : cur.gb_fp) acc.push_back(RingElem(p));
      }
    }
    for (const RingElem& j : lvl.J) acc.push_back(j);
    FGIdeal I = ideal_from_gens(R, acc);
    RingElem u = R.one();
    for (const RingElem& e : lvl.U) u = R.mul(u, e);
    cur = ideal_saturate(R, I, u);
    first = false;
  }
  return ideal_is_whole_ring(R, cur);
}

inline bool is_singular(const CompRing& R, const std::vector<RingElem>& xs) {
  return chain_collapses_ring(R, elementary_ring_chain(xs));
}

// ---- singular sequence certificates ----------------------------------------

// F := 1; for i = l..1: F := x_i^{m_i} (F + a_i x_i); valid iff F == 0.
struct SingularCertificate {
  std::vector<uint32_t> m;
  std::vector<RingElem> a;
};

inline bool verify_singular_certificate(const CompRing& R,
                                        const std::vector<RingElem>& xs,
                                        const SingularCertificate& cert) {
  const size_t l = xs.size();
  if (cert.m.size() != l || cert.a.size() != l) return false;
  RingElem F = R.one();
  for (size_t i = l; i-- > 0;) {
    F = R.add(F, R.mul(cert.a[i], xs[i]));
    F = R.mul(R.pow(xs[i], cert.m[i]), F);
  }
  return R.is_zero_elem(F);
}

namespace detail {

// Coefficients of the certificate identity read as a linear form in the
// unknown cofactors: F_1 = prod x_j^{m_j} + sum_i (prod_{j<i} x_j^{m_j})
// x_i^{m_i+1} a_i.
inline void certificate_linear_form(const CompRing& R,
                                    const std::vector<RingElem>& xs,
                                    const std::vector<uint32_t>& m,
                                    RingElem& c0,
                                    std::vector<RingElem>& ci) {
  const size_t l = xs.size();
  c0 = R.one();
  ci.assign(l, R.one());
  RingElem prefix = R.one();
  for (size_t i = 0; i < l; ++i) {
    ci[i] = R.mul(prefix, R.pow(xs[i], m[i] + 1));
    prefix = R.mul(prefix, R.pow(xs[i], m[i]));
  }
  c0 = prefix;
}

// All monomials in nv variables of total degree <= d, ascending degree.
inline std::vector<Mono> monomials_up_to(int nv, uint32_t d) {
  std::vector<Mono> out;
  Mono cur(nv, 0);
  auto rec = [&](auto&& self, int i, uint32_t left) -> void {
    if (i == nv) {
      out.push_back(cur);
      return;
    }
    for (uint32_t e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
    uint32_t da = mono_deg(a), db = mono_deg(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

// Exact solver for A t = rhs over a field; returns any solution.
template <class K>
std::optional<std::vector<K>> solve_linear(std::vector<std::vector<K>> A,
                                           std::vector<K> rhs,
                                           const K& one) {
  const size_t rows = A.size();
  const size_t cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && is_zero(A[p][c])) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(rhs[p], rhs[r]);
    K d = inv(A[r][c]);
    for (size_t cc = c; cc < cols; ++cc) A[r][cc] = A[r][cc] * d;
    rhs[r] = rhs[r] * d;
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || is_zero(A[rr][c])) continue;
      K f = A[rr][c];
      for (size_t cc = c; cc < cols; ++cc)
        A[rr][cc] = A[rr][cc] - f * A[r][cc];
      rhs[rr] = rhs[rr] - f * rhs[r];
    }
    pivot_col[r] = (int)c;
    ++r;
  }
  for (size_t rr = r; rr < rows; ++rr)
    if (!is_zero(rhs[rr])) return std::nullopt;
  std::vector<K> t(cols, one - one);  // zero of K
  for (size_t rr = 0; rr < r; ++rr) t[pivot_col[rr]] = rhs[rr];
  return t;
}

}  // namespace detail

struct CertificateSearch {
  std::optional<SingularCertificate> cert;
  uint32_t m_bound = 0, d_bound = 0;  // bounds that were exhausted
};

// Deterministic search: m-tuples by total sum then lexicographic order,
// cofactor degree from 0 upward for the polynomial kinds. The first
// solvable linear system wins; exhausted bounds report a plain miss.
inline CertificateSearch find_singular_certificate(
    const CompRing& R, const std::vector<RingElem>& xs, uint32_t m_bound = 6,
    uint32_t d_bound = 4) {
  const size_t l = xs.size();
  if (l == 0) throw contract_error("certificate for an empty tuple");
  CertificateSearch out;
  out.m_bound = m_bound;
  out.d_bound = d_bound;

  std::vector<std::vector<uint32_t>> mts;
  {
    std::vector<uint32_t> cur(l, 0);
    auto rec = [&](auto&& self, size_t i, uint32_t left) -> void {
      if (i == l) {
        mts.push_back(cur);
        return;
      }
      for (uint32_t e = 0; e <= left; ++e) {
        cur[i] = e;
        self(self, i + 1, left - e);
      }
      cur[i] = 0;
    };
    rec(rec, 0, m_bound);
    std::sort(mts.begin(), mts.end(),
              [](const std::vector<uint32_t>& a,
                 const std::vector<uint32_t>& b) {
                uint32_t da = 0, db = 0;
                for (uint32_t e : a) da += e;
                for (uint32_t e : b) db += e;
                if (da != db) return da < db;
                return a < b;
              });
  }

  for (const auto& m : mts) {
    RingElem c0;
    std::vector<RingElem> ci;
    detail::certificate_linear_form(R, xs, m, c0, ci);

    switch (R.kind()) {
      case CompRing::Kind::Integers:
      case CompRing::Kind::IntegersMod: {
        // Solve sum ci * ai = -c0 (modulo n when applicable) by folding
        // extended gcds.
        std::vector<Int> c;
        for (const RingElem& e : ci) c.push_back(detail::int_of(e));
        Int target = -detail::int_of(c0);
        Int g = 0;
        std::vector<Int> coef(l, 0);
        // gcd of all ci with Bezout bookkeeping
        std::vector<Int> bez(l, 0);
        for (size_t i = 0; i < l; ++i) {
          Egcd e = egcd(g, c[i]);
          for (size_t j = 0; j < i; ++j) bez[j] *= e.x;
          bez[i] = e.y;
          g = e.g;
        }
        bool solvable;
        Int q = 0;
        if (R.kind() == CompRing::Kind::IntegersMod) {
          Egcd e = egcd(g, R.modulus());
          solvable = e.g != 0 && target % e.g == 0;
          if (solvable) q = e.x * (target / e.g);
        } else {
          solvable = (g == 0) ? target == 0 : target % g == 0;
          if (solvable && g != 0) q = target / g;
        }
        if (!solvable) break;
        SingularCertificate cert;
        cert.m = m;
        for (size_t i = 0; i < l; ++i)
          cert.a.push_back(R.from_int(bez[i] * q));
        if (verify_singular_certificate(R, xs, cert)) {
          out.cert = std::move(cert);
          return out;
        }
        break;
      }
      default: {
        for (uint32_t d = 0; d <= d_bound; ++d) {
          bool found = R.rat_coeffs()
                           ? detail_find_cert_poly<Rat>(R, xs, m, c0, ci, d,
                                                        out)
                           : detail_find_cert_poly<Fp>(R, xs, m, c0, ci, d,
                                                       out);
          if (found) return out;
        }
      }
    }
  }
  return out;
}

template <class K>
bool detail_find_cert_poly(const CompRing& R, const std::vector<RingElem>& xs,
                           const std::vector<uint32_t>& m, const RingElem& c0,
                           const std::vector<RingElem>& ci, uint32_t d,
                           CertificateSearch& out) {
  const size_t l = xs.size();
  const int nv = R.nvars();
  const K one = one_like_of<K>(R);
  std::vector<Mono> mons = detail::monomials_up_to(nv, d);

  // Columns: (i, mono); their value is canon(ci * mono).
  std::vector<Poly<K>> colv;
  std::vector<std::pair<size_t, Mono>> colid;
  for (size_t i = 0; i < l; ++i) {
    const Poly<K>& cip = std::get<Poly<K>>(ci[i]);
    for (const Mono& mo : mons) {
      RingElem prod = R.canon(cip.mul_term(mo, one));
      colv.push_back(std::get<Poly<K>>(prod));
      colid.emplace_back(i, mo);
    }
  }
  const Poly<K>& c0p = std::get<Poly<K>>(c0);

  // Rows: every monomial appearing anywhere.
  std::map<Mono, size_t> rowix;
  auto note = [&](const Poly<K>& p) {
    for (const auto& t : p.terms())
      rowix.emplace(t.m, rowix.size());
  };
  note(c0p);
  for (const auto& p : colv) note(p);
  std::vector<std::vector<K>> A(rowix.size(),
                                std::vector<K>(colv.size(), one - one));
  std::vector<K> rhs(rowix.size(), one - one);
  for (size_t c = 0; c < colv.size(); ++c)
    for (const auto& t : colv[c].terms()) A[rowix[t.m]][c] = t.c;
  for (const auto& t : c0p.terms()) rhs[rowix[t.m]] = -t.c;

  auto sol = detail::solve_linear<K>(A, rhs, one);
  if (!sol) return false;
  SingularCertificate cert;
  cert.m = m;
  std::vector<Poly<K>> as(l, Poly<K>(nv, MonoOrder::GrevLex));
  for (size_t c = 0; c < colv.size(); ++c) {
    if (is_zero((*sol)[c])) continue;
    auto [i, mo] = colid[c];
    as[i] = as[i] + Poly<K>::term(nv, MonoOrder::GrevLex, mo, (*sol)[c]);
  }
  for (size_t i = 0; i < l; ++i) cert.a.push_back(R.canon(as[i]));
  if (!verify_singular_certificate(R, xs, cert)) return false;
  out.cert = std::move(cert);
  return true;
}

// ---- algebraic dependence ----------------------------------------------------

namespace detail {

// A nonzero kernel vector of the homogeneous system A t = 0, or nothing
// when the columns are independent. Deterministic: the first linearly
// dependent column gets coefficient one.
template <class K>
std::optional<std::vector<K>> kernel_vector(std::vector<std::vector<K>> A,
                                            size_t cols, const K& one) {
  const K zero = one - one;
  const size_t rows = A.size();
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  int free_col = -1;
  for (size_t c = 0; c < cols; ++c) {
    size_t p = r;
    while (p < rows && is_zero(A[p][c])) ++p;
    if (p == rows) {
      free_col = (int)c;
      break;
    }
    std::swap(A[p], A[r]);
    K d = inv(A[r][c]);
    for (size_t cc = c; cc < cols; ++cc) A[r][cc] = A[r][cc] * d;
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || is_zero(A[rr][c])) continue;
      K f = A[rr][c];
      for (size_t cc = c; cc < cols; ++cc)
        A[rr][cc] = A[rr][cc] - f * A[r][cc];
    }
    pivot_of_col[c] = (int)r;
    ++r;
    if (r == rows) {
      if (c + 1 < cols) free_col = (int)(c + 1);
      break;
    }
  }
  if (free_col < 0) return std::nullopt;
  std::vector<K> t(cols, zero);
  t[free_col] = one;
  for (size_t c = 0; c < (size_t)free_col; ++c)
    if (pivot_of_col[c] >= 0) t[c] = zero - A[pivot_of_col[c]][free_col];
  return t;
}

}  // namespace detail

// A nonzero Q with Q(ys) = 0, searched through monomials of total degree
// at most max_deg. The result lives in its own |ys|-variable space.
inline std::optional<RingElem> find_algebraic_dependence(
    const CompRing& R, const std::vector<RingElem>& ys, uint32_t max_deg) {
  if (!R.poly_like()) throw contract_error("dependence needs a polynomial ring");
  if (ys.empty()) throw contract_error("dependence of an empty family");
  for (const RingElem& y : ys) R.check_elem(y);
  const int ny = (int)ys.size();
  std::vector<Mono> mons = detail::monomials_up_to(ny, max_deg);

  auto run = [&](auto one) -> std::optional<RingElem> {
    using K = decltype(one);
    std::vector<Poly<K>> cols;
    cols.reserve(mons.size());
    for (const Mono& mo : mons) {
      RingElem v = R.one();
      for (int i = 0; i < ny; ++i)
        v = R.mul(v, R.pow(ys[i], mo[i]));
      cols.push_back(std::get<Poly<K>>(v));
    }
    std::map<Mono, size_t> rowix;
    for (const auto& p : cols)
      for (const auto& t : p.terms()) rowix.emplace(t.m, rowix.size());
    std::vector<std::vector<K>> A(rowix.size(),
                                  std::vector<K>(cols.size(), one - one));
    for (size_t c = 0; c < cols.size(); ++c)
      for (const auto& t : cols[c].terms()) A[rowix[t.m]][c] = t.c;
    auto ker = detail::kernel_vector<K>(std::move(A), cols.size(), one);
    if (!ker) return std::nullopt;
    Poly<K> q(ny, MonoOrder::Lex);
    for (size_t c = 0; c < cols.size(); ++c)
      if (!is_zero((*ker)[c]))
        q = q + Poly<K>::term(ny, MonoOrder::Lex, mons[c], (*ker)[c]);
    return RingElem(std::move(q));
  };
  if (R.rat_coeffs()) return run(Rat(1));
  return run(Fp::make(1, R.characteristic()));
}

// Turns a vanishing dependence Q(ys) = 0 into a singular sequence
// certificate for ys. The least monomial of Q in lexicographic order
// (first variable most significant) supplies the exponents; every other
// monomial is filed under the first index where it exceeds the least one.
inline SingularCertificate collapse_from_dependence(
    const CompRing& R, const RingElem& q, const std::vector<RingElem>& ys) {
  if (!R.poly_like())
    throw contract_error("dependence collapse needs a polynomial ring");
  const size_t l = ys.size();

  auto run = [&](const auto& qq) -> SingularCertificate {
    using P = std::decay_t<decltype(qq)>;
    if constexpr (std::is_same_v<P, Int>) {
      throw contract_error("dependence must be a polynomial");
    } else {
      if (qq.zero()) throw contract_error("zero dependence");
      if ((size_t)qq.nvars() != l)
        throw contract_error("dependence variable count mismatch");

      // Q must actually vanish on ys.
      RingElem val = R.zero();
      for (const auto& t : qq.terms()) {
        RingElem mv = R.one();
        for (size_t i = 0; i < l; ++i)
          mv = R.mul(mv, R.pow(ys[i], t.m[i]));
        RingElem cv;
        if constexpr (std::is_same_v<P, Poly<Rat>>)
          cv = R.canon(Poly<Rat>::constant(R.nvars(), MonoOrder::GrevLex, t.c));
        else
          cv = R.canon(Poly<Fp>::constant(R.nvars(), MonoOrder::GrevLex, t.c));
        val = R.add(val, R.mul(cv, mv));
      }
      if (!R.is_zero_elem(val))
        throw contract_error("dependence does not vanish on the family");

      size_t least = 0;
      for (size_t i = 1; i < qq.terms().size(); ++i)
        if (mono_cmp(MonoOrder::Lex, qq.terms()[i].m, qq.terms()[least].m) < 0)
          least = i;
      const Mono& m = qq.terms()[least].m;
      auto cm_inv = inv(qq.terms()[least].c);

      SingularCertificate cert;
      cert.m.assign(m.begin(), m.end());
      cert.a.assign(l, R.zero());
      for (size_t i = 0; i < qq.terms().size(); ++i) {
        if (i == least) continue;
        const Mono& al = qq.terms()[i].m;
        size_t j = 0;
        while (j < l && al[j] == m[j]) ++j;
        if (j == l || al[j] < m[j])
          throw contract_error("least monomial was not minimal");
        RingElem res = R.one();
        for (size_t v = j; v < l; ++v) {
          uint32_t e = v == j ? al[v] - m[v] - 1 : al[v];
          res = R.mul(res, R.pow(ys[v], e));
        }
        auto cscaled = qq.terms()[i].c * cm_inv;
        RingElem cv;
        if constexpr (std::is_same_v<P, Poly<Rat>>)
          cv = R.canon(
              Poly<Rat>::constant(R.nvars(), MonoOrder::GrevLex, cscaled));
        else
          cv = R.canon(
              Poly<Fp>::constant(R.nvars(), MonoOrder::GrevLex, cscaled));
        cert.a[j] = R.add(cert.a[j], R.mul(cv, res));
      }
      if (!verify_singular_certificate(R, ys, cert))
        throw contract_error("dependence produced an invalid certificate");
      return cert;
    }
  };
  return std::visit(run, q);
}

// ---- collapse identities -----------------------------------------------------

// Nested witness for a collapsing ring chain:
//   T := lead; for k = l..0: T := prod(U_k)^{u_exp[k]} * T - <j_cofs[k], J_k>
// ends at zero.
struct ChainCollapseIdentity {
  RingElem lead;
  std::vector<uint32_t> u_exp;
  std::vector<std::vector<RingElem>> j_cofs;
};

inline bool verify_collapse_identity(const CompRing& R, const RingChain& C,
                                     const ChainCollapseIdentity& id) {
  const size_t n = C.levels.size();
  if (id.u_exp.size() != n || id.j_cofs.size() != n) return false;
  for (size_t k = 0; k < n; ++k)
    if (id.j_cofs[k].size() != C.levels[k].J.size()) return false;
  RingElem T = id.lead;
  for (size_t k = n; k-- > 0;) {
    RingElem u = R.one();
    for (const RingElem& e : C.levels[k].U) u = R.mul(u, e);
    T = R.mul(R.pow(u, id.u_exp[k]), T);
    for (size_t t = 0; t < C.levels[k].J.size(); ++t)
      T = R.sub(T, R.mul(id.j_cofs[k][t], C.levels[k].J[t]));
  }
  return R.is_zero_elem(T);
}

// The elementary chain on xs collapses exactly as the certificate loop
// does; this rewrites one form into the other.
inline ChainCollapseIdentity certificate_to_identity(
    const CompRing& R, const std::vector<RingElem>& xs,
    const SingularCertificate& cert) {
  const size_t l = xs.size();
  if (cert.m.size() != l || cert.a.size() != l)
    throw contract_error("certificate shape mismatch");
  ChainCollapseIdentity id;
  id.lead = R.one();
  id.u_exp.assign(l + 1, 0);
  id.j_cofs.assign(l + 1, {});
  for (size_t k = 0; k < l; ++k) id.u_exp[k] = cert.m[k];
  for (size_t k = 1; k <= l; ++k) id.j_cofs[k] = {R.neg(cert.a[k - 1])};
  return id;
}

// ---- quadratic extension of the integers -------------------------------------

// Z[t] with t^2 = c1 t + c0.
struct QuadElem {
  Int a, b;  // a + b t
  bool operator==(const QuadElem& o) const = default;
};

struct QuadRing {
  Int c0, c1;

  QuadElem zero() const { return {0, 0}; }
  QuadElem one() const { return {1, 0}; }
  QuadElem from_int(Int v) const { return {std::move(v), 0}; }
  QuadElem t() const { return {0, 1}; }

  QuadElem add(const QuadElem& x, const QuadElem& y) const {
    return {x.a + y.a, x.b + y.b};
  }
  QuadElem sub(const QuadElem& x, const QuadElem& y) const {
    return {x.a - y.a, x.b - y.b};
  }
  QuadElem neg(const QuadElem& x) const { return {-x.a, -x.b}; }
  QuadElem mul(const QuadElem& x, const QuadElem& y) const {
    Int bd = x.b * y.b;
    return {x.a * y.a + bd * c0, x.a * y.b + x.b * y.a + bd * c1};
  }
  QuadElem pow(const QuadElem& x, uint32_t e) const {
    QuadElem r = one();
    for (uint32_t k = 0; k < e; ++k) r = mul(r, x);
    return r;
  }
  bool is_zero(const QuadElem& x) const { return x.a == 0 && x.b == 0; }
  std::string str(const QuadElem& x) const {
    return x.a.str() + " + " + x.b.str() + "*t";
  }
};

// x^k = sum over i != k of a[i] x^i; entry a[k] is ignored.
struct IntegralRelation {
  uint32_t k = 0;
  std::vector<QuadElem> a;
};

inline bool verify_integral_relation(const QuadRing& B, const QuadElem& x,
                                     const IntegralRelation& rel) {
  if (rel.k >= rel.a.size()) return false;
  QuadElem s = B.zero();
  for (size_t i = 0; i < rel.a.size(); ++i) {
    if (i == rel.k) continue;
    s = B.add(s, B.mul(rel.a[i], B.pow(x, (uint32_t)i)));
  }
  return B.is_zero(B.sub(B.pow(x, rel.k), s));
}

// Split witness: gprime * x^m + b * x^{m+1} + sum cof * a_idx = 0, with
// gprime a product over the U side and the listed indices on the J side.
struct IntegralSplitIdentity {
  uint32_t m = 0;
  QuadElem gprime;
  QuadElem b;
  std::vector<std::pair<size_t, QuadElem>> g_terms;
};

inline bool verify_integral_split(const QuadRing& B, const QuadElem& x,
                                  const IntegralRelation& rel,
                                  const std::vector<size_t>& uside,
                                  const IntegralSplitIdentity& id) {
  // gprime must be 1 or a coefficient from the U side.
  bool gp_ok = id.gprime == B.one();
  for (size_t h : uside)
    if (id.gprime == rel.a[h]) gp_ok = true;
  if (!gp_ok) return false;
  for (const auto& [idx, cof] : id.g_terms) {
    (void)cof;
    if (idx == rel.k || idx >= rel.a.size()) return false;
    for (size_t h : uside)
      if (idx == h) return false;
  }
  QuadElem T = B.mul(id.gprime, B.pow(x, id.m));
  T = B.add(T, B.mul(id.b, B.pow(x, id.m + 1)));
  for (const auto& [idx, cof] : id.g_terms)
    T = B.add(T, B.mul(cof, rel.a[idx]));
  return B.is_zero(T);
}

// For any split of the non-leading relation indices, the elementary chain
// on x with the J side joining the bottom and the U side joining the top
// collapses; the identity below witnesses it.
inline IntegralSplitIdentity integral_relative_collapse(
    const QuadRing& B, const QuadElem& x, const IntegralRelation& rel,
    const std::vector<size_t>& uside) {
  if (rel.k >= rel.a.size())
    throw contract_error("relation degree out of range");
  if (!verify_integral_relation(B, x, rel))
    throw contract_error("relation does not hold");
  const size_t n = rel.a.size() - 1;
  for (size_t h : uside)
    if (h == rel.k || h > n)
      throw contract_error("split index out of range");

  size_t h = n + 1;  // least U-side index, if any
  for (size_t v : uside) h = std::min(h, v);

  IntegralSplitIdentity id;
  if (h <= n && h < rel.k) {
    id.m = (uint32_t)h;
    id.gprime = rel.a[h];
    id.b = B.neg(B.pow(x, rel.k - h - 1));
    for (size_t i = h + 1; i <= n; ++i) {
      if (i == rel.k) continue;
      id.b = B.add(id.b, B.mul(rel.a[i], B.pow(x, (uint32_t)(i - h - 1))));
    }
    for (size_t i = 0; i < h; ++i)
      id.g_terms.emplace_back(i, B.pow(x, (uint32_t)i));
  } else {
    id.m = rel.k;
    id.gprime = B.one();
    id.b = B.zero();
    for (size_t i = rel.k + 1; i <= n; ++i)
      id.b = B.sub(id.b, B.mul(rel.a[i], B.pow(x, (uint32_t)(i - rel.k - 1))));
    for (size_t i = 0; i < rel.k; ++i)
      id.g_terms.emplace_back(i, B.neg(B.pow(x, (uint32_t)i)));
  }
  if (!verify_integral_split(B, x, rel, uside, id))
    throw contract_error("integral split identity failed to verify");
  return id;
}

// ---- gluing localized certificates -------------------------------------------

// Bezout coefficients with sum p_i s_i = 1, when the family is comaximal.
inline std::optional<std::vector<Int>> is_comaximal(
    const std::vector<Int>& ss) {
  if (ss.empty()) return std::nullopt;
  Int g = 0;
  std::vector<Int> bez(ss.size(), 0);
  for (size_t i = 0; i < ss.size(); ++i) {
    Egcd e = egcd(g, ss[i]);
    for (size_t j = 0; j < i; ++j) bez[j] *= e.x;
    bez[i] = e.y;
    g = e.g;
  }
  if (g != 1) return std::nullopt;
  return bez;
}

// A certificate over Z[1/s]: cofactors are rationals whose denominators
// only involve primes of s.
struct LocalizedCertificate {
  Int s;
  std::vector<uint32_t> m;
  std::vector<Rat> a;
};

inline bool verify_localized_certificate(const std::vector<Int>& xs,
                                         const LocalizedCertificate& lc) {
  if (lc.m.size() != xs.size() || lc.a.size() != xs.size()) return false;
  if (lc.s == 0) return false;
  for (const Rat& a : lc.a) {
    Int d = boost::multiprecision::denominator(a);
    if (detail::strip_factors(d, lc.s) != 1) return false;
  }
  Rat F = 1;
  for (size_t i = xs.size(); i-- > 0;) {
    F += lc.a[i] * Rat(xs[i]);
    for (uint32_t e = 0; e < lc.m[i]; ++e) F *= Rat(xs[i]);
  }
  return F == 0;
}

struct GlueResult {
  SingularCertificate cert;       // global, integer cofactors
  std::vector<Int> leads;         // s_i^{N_i} cleared denominators
  std::vector<Int> partition;     // Bezout coefficients for the leads
};

// From certificates over Z[1/s_i] with comaximal denominators, a global
// integer certificate for the same tuple: clear denominators, transport
// every local identity to the common exponent tuple, and combine with the
// Bezout coefficients of the cleared powers.
inline GlueResult glue_collapses(const std::vector<Int>& xs,
                                 const std::vector<LocalizedCertificate>& ls) {
  if (ls.empty()) throw input_error("nothing to glue");
  const size_t l = xs.size();
  for (const LocalizedCertificate& lc : ls)
    if (!verify_localized_certificate(xs, lc))
      throw input_error("a localized certificate does not verify");

  // Clear denominators: s^{N_i} times the loop stays integral.
  std::vector<std::vector<uint32_t>> evs(ls.size());
  std::vector<uint32_t> Ns(ls.size(), 0);
  for (size_t i = 0; i < ls.size(); ++i) {
    evs[i].assign(l, 0);
    for (size_t t = 0; t < l; ++t) {
      Int d = boost::multiprecision::denominator(ls[i].a[t]);
      Int pw = 1;
      uint32_t e = 0;
      while (pw % d != 0) {
        pw *= ls[i].s;
        ++e;
      }
      evs[i][t] = e;
      Ns[i] = std::max(Ns[i], e);
    }
  }
  std::vector<Int> leads(ls.size());
  for (size_t i = 0; i < ls.size(); ++i) {
    Int pw = 1;
    for (uint32_t e = 0; e < Ns[i]; ++e) pw *= ls[i].s;
    leads[i] = pw;
  }
  auto part = is_comaximal(leads);
  if (!part) throw input_error("cleared denominators are not comaximal");

  // Common exponents and transported cofactors.
  std::vector<uint32_t> M(l, 0);
  for (size_t i = 0; i < ls.size(); ++i)
    for (size_t t = 0; t < l; ++t) M[t] += ls[i].m[t];

  CompRing Z = CompRing::integers();
  SingularCertificate cert;
  cert.m = M;
  for (size_t t = 0; t < l; ++t) {
    Int acc = 0;
    for (size_t i = 0; i < ls.size(); ++i) {
      // integer cofactor alpha = a * s^{N_i}
      Rat alr = ls[i].a[t];
      for (uint32_t e = 0; e < Ns[i]; ++e) alr *= Rat(ls[i].s);
      Int alpha = boost::multiprecision::numerator(alr);
      if (boost::multiprecision::denominator(alr) != 1)
        throw input_error("denominator clearing failed");
      Int term = (*part)[i] * alpha;
      for (size_t j = t + 1; j < l; ++j) {
        uint32_t e = M[j] - ls[i].m[j];
        for (uint32_t k = 0; k < e; ++k) term *= xs[j];
      }
      acc += term;
    }
    cert.a.push_back(RingElem(acc));
  }
  std::vector<RingElem> xe;
  for (const Int& x : xs) xe.push_back(RingElem(x));
  if (!verify_singular_certificate(Z, xe, cert))
    throw input_error("glued certificate failed to verify");
  GlueResult out;
  out.cert = std::move(cert);
  out.leads = std::move(leads);
  out.partition = std::move(*part);
  return out;
}

// ---- power identities in Z/n ---------------------------------------------------

// The least e >= 1 with x^e = a x^{e+1}; always exists modulo n.
struct PowerIdentity {
  uint32_t e = 0;
  RingElem a;
};

inline PowerIdentity find_power_identity(const CompRing& R,
                                         const RingElem& x) {
  if (R.kind() != CompRing::Kind::IntegersMod)
    throw contract_error("power identities live in Z/n");
  R.check_elem(x);
  const Int& n = R.modulus();
  Int xe = std::get<Int>(R.canon(std::get<Int>(x)));
  Int cur = xe % n;  // x^e mod n, starting at e = 1
  for (uint32_t e = 1;; ++e) {
    Int nxt = (cur * xe) % n;  // x^{e+1}
    Egcd eg = egcd(nxt, n);
    if (cur % eg.g == 0) {
      Int a = (eg.x * (cur / eg.g)) % n;
      PowerIdentity out;
      out.e = e;
      out.a = R.from_int(a);
      // x^e == a x^{e+1} mod n by construction; keep a defensive check.
      if (((a * nxt - cur) % n) == 0) return out;
    }
    cur = nxt;
    // Solvability is guaranteed once e reaches the largest prime
    // multiplicity in n.
    if (e > (uint32_t)boost::multiprecision::msb(n) + 2)
      throw contract_error("power identity search failed to stabilize");
  }
}

}  // namespace krull
