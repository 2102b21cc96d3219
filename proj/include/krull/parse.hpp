#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "krull/chains.hpp"
#include "krull/lattice.hpp"
#include "krull/morphism.hpp"
#include "krull/ring.hpp"

namespace krull {

// ---- tokens -------------------------------------------------------------------

struct Token {
  enum class Kind { Ident, Number, Punct, End } kind = Kind::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string src) : src_(std::move(src)) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  bool at(const std::string& punct) const {
    return tok_.kind == Token::Kind::Punct && tok_.text == punct;
  }

  bool accept(const std::string& punct) {
    if (!at(punct)) return false;
    advance();
    return true;
  }

  void expect(const std::string& punct) {
    if (!accept(punct))
      throw parse_error("expected '" + punct + "'", tok_.line, tok_.col,
                        done() ? "incomplete" : "syntax");
  }

  std::string expect_ident() {
    if (tok_.kind != Token::Kind::Ident)
      throw parse_error("expected an identifier", tok_.line, tok_.col,
                        done() ? "incomplete" : "syntax");
    return next().text;
  }

  std::string expect_number() {
    if (tok_.kind != Token::Kind::Number)
      throw parse_error("expected a number", tok_.line, tok_.col,
                        done() ? "incomplete" : "syntax");
    return next().text;
  }

  bool done() const { return tok_.kind == Token::Kind::End; }

 private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col_;
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text.clear();
      return;
    }
    char c = src_[pos_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t s = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
        take();
      tok_.kind = Token::Kind::Ident;
      tok_.text = src_.substr(s, pos_ - s);
      return;
    }
    if (std::isdigit((unsigned char)c)) {
      size_t s = pos_;
      while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_]))
        take();
      tok_.kind = Token::Kind::Number;
      tok_.text = src_.substr(s, pos_ - s);
      return;
    }
    // multi-character operators first
    if (c == '|' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
      take();
      take();
      tok_.kind = Token::Kind::Punct;
      tok_.text = "|-";
      return;
    }
    if (c == '|' && pos_ + 2 < src_.size() && src_[pos_ + 1] == 'v' &&
        src_[pos_ + 2] == '|') {
      take();
      take();
      take();
      tok_.kind = Token::Kind::Punct;
      tok_.text = "|v|";
      return;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      take();
      take();
      tok_.kind = Token::Kind::Punct;
      tok_.text = "->";
      return;
    }
    static const std::string single = "{}()[],;:|&+-*/^=";
    if (single.find(c) != std::string::npos) {
      take();
      tok_.kind = Token::Kind::Punct;
      tok_.text = std::string(1, c);
      return;
    }
    throw parse_error(std::string("stray character '") + c + "'", line_, col_,
                      "syntax");
  }

  void take() {
    ++pos_;
    ++col_;
  }

  std::string src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

// ---- lattice element expressions ------------------------------------------------

// expr := term ('|v|' term)*   joins ('+' accepted as an alias)
// term := factor ('&' factor)* meets
// factor := '0' | '1' | generator | '(' expr ')'
namespace detail {

inline int parse_elem_expr(Lexer& lx, const FinLattice& L);

inline int parse_elem_factor(Lexer& lx, const FinLattice& L) {
  if (lx.accept("(")) {
    int e = parse_elem_expr(lx, L);
    lx.expect(")");
    return e;
  }
  const Token& t = lx.peek();
  if (t.kind == Token::Kind::Number) {
    std::string n = lx.next().text;
    if (n == "0") return L.bot();
    if (n == "1") return L.top();
    throw parse_error("only 0 and 1 denote lattice constants", t.line, t.col,
                      "syntax");
  }
  if (t.kind == Token::Kind::Ident) {
    std::string name = lx.next().text;
    try {
      return L.generator_element(name);
    } catch (const input_error&) {
      throw parse_error("unknown generator '" + name + "'", t.line, t.col,
                        "unknown-name");
    }
  }
  throw parse_error("expected a lattice element", t.line, t.col, "syntax");
}

inline int parse_elem_term(Lexer& lx, const FinLattice& L) {
  int e = parse_elem_factor(lx, L);
  while (lx.accept("&")) e = L.meet(e, parse_elem_factor(lx, L));
  return e;
}

inline int parse_elem_expr(Lexer& lx, const FinLattice& L) {
  int e = parse_elem_term(lx, L);
  while (lx.accept("|v|") || lx.accept("+"))
    e = L.join(e, parse_elem_term(lx, L));
  return e;
}

}  // namespace detail

inline int parse_element(const FinLattice& L, const std::string& text) {
  Lexer lx(text);
  int e = detail::parse_elem_expr(lx, L);
  if (!lx.done())
    throw parse_error("trailing input after element", lx.peek().line,
                      lx.peek().col, "syntax");
  return e;
}

// Chain text: "{ j1, j2 ; u1 } | { ; u2 }" — brace-wrapped levels separated
// by '|', each level "J ; U" with comma lists of terms, either side possibly
// empty.
inline IdealisticChain parse_chain(const FinLattice& L,
                                   const std::string& text) {
  Lexer lx(text);
  IdealisticChain C;
  while (true) {
    lx.expect("{");
    IdealisticPrime lvl;
    auto side = [&](std::vector<int>& out, const std::string& stop) {
      while (!lx.at(stop)) {
        out.push_back(detail::parse_elem_expr(lx, L));
        if (!lx.accept(",")) break;
      }
    };
    side(lvl.J, ";");
    lx.expect(";");
    side(lvl.U, "}");
    lx.expect("}");
    C.levels.push_back(std::move(lvl));
    if (lx.done()) break;
    lx.expect("|");
  }
  return C;
}

// ---- ring element expressions ---------------------------------------------------

namespace detail {

inline RingElem ring_const_inverse(const CompRing& R, const RingElem& e) {
  switch (R.kind()) {
    case CompRing::Kind::Integers:
      throw input_error("division is not available over the integers");
    case CompRing::Kind::IntegersMod: {
      Int v = std::get<Int>(e);
      Egcd eg = egcd(v, R.modulus());
      if (eg.g != 1) throw input_error("division by a non-unit residue");
      return R.from_int(eg.x);
    }
    default: {
      if (R.rat_coeffs()) {
        const Poly<Rat>& p = std::get<Poly<Rat>>(e);
        if (!p.is_constant() || p.zero())
          throw input_error("division only by nonzero constants");
        return R.canon(Poly<Rat>::constant(R.nvars(), MonoOrder::GrevLex,
                                           inv(p.lead_coeff())));
      }
      const Poly<Fp>& p = std::get<Poly<Fp>>(e);
      if (!p.is_constant() || p.zero())
        throw input_error("division only by nonzero constants");
      return R.canon(Poly<Fp>::constant(R.nvars(), MonoOrder::GrevLex,
                                        inv(p.lead_coeff())));
    }
  }
}

inline RingElem parse_ring_expr(Lexer& lx, const CompRing& R);

inline RingElem parse_ring_atom(Lexer& lx, const CompRing& R) {
  if (lx.accept("(")) {
    RingElem e = parse_ring_expr(lx, R);
    lx.expect(")");
    return e;
  }
  const Token& t = lx.peek();
  if (t.kind == Token::Kind::Number) return R.from_int(Int(lx.next().text));
  if (t.kind == Token::Kind::Ident) {
    std::string name = lx.next().text;
    int i = R.var_index(name);
    if (i < 0)
      throw parse_error("unknown variable '" + name + "'", t.line, t.col,
                        "unknown-name");
    return R.var(i);
  }
  throw parse_error("expected a ring element", t.line, t.col, "syntax");
}

inline RingElem parse_ring_power(Lexer& lx, const CompRing& R) {
  RingElem e = parse_ring_atom(lx, R);
  if (lx.accept("^")) {
    const Token& t = lx.peek();
    std::string n = lx.expect_number();
    long ex = std::stol(n);
    if (ex < 0 || ex > 64)
      throw parse_error("exponent out of range", t.line, t.col, "syntax");
    e = R.pow(e, (uint32_t)ex);
  }
  return e;
}

inline RingElem parse_ring_term(Lexer& lx, const CompRing& R) {
  bool neg = false;
  while (lx.at("-") || lx.at("+")) {
    if (lx.accept("-"))
      neg = !neg;
    else
      lx.accept("+");
  }
  RingElem e = parse_ring_power(lx, R);
  while (true) {
    if (lx.accept("*")) {
      e = R.mul(e, parse_ring_power(lx, R));
    } else if (lx.accept("/")) {
      e = R.mul(e, ring_const_inverse(R, parse_ring_power(lx, R)));
    } else {
      break;
    }
  }
  return neg ? R.neg(e) : e;
}

inline RingElem parse_ring_expr(Lexer& lx, const CompRing& R) {
  RingElem e = parse_ring_term(lx, R);
  while (lx.at("+") || lx.at("-")) {
    bool minus = lx.at("-");
    lx.next();
    RingElem t = parse_ring_term(lx, R);
    e = minus ? R.sub(e, t) : R.add(e, t);
  }
  return e;
}

}  // namespace detail

inline RingElem parse_ring_elem(const CompRing& R, const std::string& text) {
  Lexer lx(text);
  RingElem e = detail::parse_ring_expr(lx, R);
  if (!lx.done())
    throw parse_error("trailing input after ring element", lx.peek().line,
                      lx.peek().col, "syntax");
  return e;
}

inline std::vector<RingElem> parse_ring_elems(const CompRing& R,
                                              const std::string& text) {
  Lexer lx(text);
  std::vector<RingElem> out;
  out.push_back(detail::parse_ring_expr(lx, R));
  while (lx.accept(",")) out.push_back(detail::parse_ring_expr(lx, R));
  if (!lx.done())
    throw parse_error("trailing input after ring elements", lx.peek().line,
                      lx.peek().col, "syntax");
  return out;
}

// "p", "-p", "p/q"
inline Rat parse_rat(const std::string& text) {
  Lexer lx(text);
  bool neg = lx.accept("-");
  Int num(lx.expect_number());
  Int den = 1;
  if (lx.accept("/")) {
    den = Int(lx.expect_number());
    if (den == 0)
      throw parse_error("zero denominator", lx.peek().line, lx.peek().col,
                        "syntax");
  }
  if (!lx.done())
    throw parse_error("trailing input after rational", lx.peek().line,
                      lx.peek().col, "syntax");
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

// ---- session files ---------------------------------------------------------------

// lattice T { gens: a, b; rel: a, b |- c; }
// morphism f : T -> V { a -> x & y; }
// ring A = ZZ | ZZmod(n) | poly(QQ,[x,y]) | poly(GF(p),[x]) | quot(R,[f,..]);
struct Session {
  struct LatticeDecl {
    EntailmentPresentation pres;
    FinLattice L;
  };
  struct MorphismDecl {
    std::string dom, cod;
    std::vector<int> map;
  };
  std::map<std::string, LatticeDecl> lattices;
  std::map<std::string, MorphismDecl> morphisms;
  std::map<std::string, CompRing> rings;

  const FinLattice& lattice(const std::string& name) const {
    auto it = lattices.find(name);
    if (it == lattices.end()) throw input_error("unknown lattice: " + name);
    return it->second.L;
  }

  const CompRing& ring(const std::string& name) const {
    auto it = rings.find(name);
    if (it == rings.end()) throw input_error("unknown ring: " + name);
    return it->second;
  }

  LatticeMorphism morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw input_error("unknown morphism: " + name);
    LatticeMorphism m;
    m.dom = &lattices.at(it->second.dom).L;
    m.cod = &lattices.at(it->second.cod).L;
    m.map = it->second.map;
    return m;
  }
};

namespace detail {

inline void parse_lattice_block(Lexer& lx, Session& s, int elem_cap,
                                int gen_cap) {
  Token name_tok = lx.peek();
  std::string name = lx.expect_ident();
  if (s.lattices.count(name))
    throw parse_error("lattice '" + name + "' already defined", name_tok.line,
                      name_tok.col, "duplicate");
  lx.expect("{");
  EntailmentPresentation pres;
  while (!lx.accept("}")) {
    Token kw_tok = lx.peek();
    std::string kw = lx.expect_ident();
    lx.expect(":");
    if (kw == "gens") {
      while (!lx.at(";")) {
        std::string g = lx.expect_ident();
        if (pres.find_generator(g) >= 0)
          throw parse_error("duplicate generator '" + g + "'", kw_tok.line,
                            kw_tok.col, "duplicate");
        pres.add_generator(g);
        if (!lx.accept(",")) break;
      }
      lx.expect(";");
    } else if (kw == "rel") {
      auto side = [&](std::vector<int>& out) {
        while (lx.peek().kind == Token::Kind::Ident) {
          Token t = lx.peek();
          std::string g = lx.next().text;
          int i = pres.find_generator(g);
          if (i < 0)
            throw parse_error("unknown generator '" + g + "'", t.line, t.col,
                              "unknown-name");
          out.push_back(i);
          if (!lx.accept(",")) break;
        }
      };
      std::vector<int> l, r;
      side(l);
      lx.expect("|-");
      side(r);
      lx.expect(";");
      pres.add_axiom(Sequent::make(std::move(l), std::move(r)));
    } else {
      throw parse_error("expected 'gens' or 'rel'", kw_tok.line, kw_tok.col,
                        "syntax");
    }
  }
  FinLattice L = build_from_presentation(pres, elem_cap, gen_cap);
  s.lattices.emplace(name,
                     Session::LatticeDecl{std::move(pres), std::move(L)});
}

inline void parse_morphism_block(Lexer& lx, Session& s) {
  Token name_tok = lx.peek();
  std::string name = lx.expect_ident();
  if (s.morphisms.count(name))
    throw parse_error("morphism '" + name + "' already defined",
                      name_tok.line, name_tok.col, "duplicate");
  lx.expect(":");
  Token dom_tok = lx.peek();
  std::string dom = lx.expect_ident();
  lx.expect("->");
  Token cod_tok = lx.peek();
  std::string cod = lx.expect_ident();
  if (!s.lattices.count(dom))
    throw parse_error("unknown lattice '" + dom + "'", dom_tok.line,
                      dom_tok.col, "unknown-name");
  if (!s.lattices.count(cod))
    throw parse_error("unknown lattice '" + cod + "'", cod_tok.line,
                      cod_tok.col, "unknown-name");
  const FinLattice& A = s.lattices.at(dom).L;
  const FinLattice& B = s.lattices.at(cod).L;

  std::map<std::string, int> images;
  lx.expect("{");
  while (!lx.accept("}")) {
    Token g_tok = lx.peek();
    std::string g = lx.expect_ident();
    lx.expect("->");
    int img = parse_elem_expr(lx, B);
    lx.expect(";");
    if (images.count(g))
      throw parse_error("generator '" + g + "' mapped twice", g_tok.line,
                        g_tok.col, "duplicate");
    images[g] = img;
  }

  const auto& gnames = A.generator_names();
  std::vector<int> imgs;
  for (const std::string& g : gnames) {
    auto it = images.find(g);
    if (it == images.end())
      throw parse_error("no image for generator '" + g + "'", name_tok.line,
                        name_tok.col, "incomplete");
    imgs.push_back(it->second);
  }
  for (const auto& [g, e] : images) {
    (void)e;
    bool known = false;
    for (const std::string& n : gnames) known = known || n == g;
    if (!known)
      throw parse_error("'" + g + "' is not a generator of " + dom,
                        name_tok.line, name_tok.col, "unknown-name");
  }
  LatticeMorphism m =
      morphism_from_generators(A, B, A.generator_elements(), imgs);
  s.morphisms.emplace(name, Session::MorphismDecl{dom, cod, m.map});
}

inline CompRing parse_ring_spec(Lexer& lx, const Session& s) {
  Token t = lx.peek();
  std::string head = lx.expect_ident();
  if (head == "ZZ") return CompRing::integers();
  if (head == "ZZmod") {
    lx.expect("(");
    Int n(lx.expect_number());
    lx.expect(")");
    return CompRing::integers_mod(n);
  }
  if (head == "poly") {
    lx.expect("(");
    Token f_tok = lx.peek();
    std::string field = lx.expect_ident();
    int64_t p = 0;
    if (field == "GF") {
      lx.expect("(");
      p = std::stoll(lx.expect_number());
      lx.expect(")");
    } else if (field != "QQ") {
      throw parse_error("expected QQ or GF(p)", f_tok.line, f_tok.col,
                        "syntax");
    }
    lx.expect(",");
    lx.expect("[");
    std::vector<std::string> vars;
    while (true) {
      vars.push_back(lx.expect_ident());
      if (!lx.accept(",")) break;
    }
    lx.expect("]");
    lx.expect(")");
    if (field == "QQ") return CompRing::poly_rat(vars);
    return CompRing::poly_fp(p, vars);
  }
  if (head == "quot") {
    lx.expect("(");
    CompRing base = parse_ring_spec(lx, s);
    lx.expect(",");
    lx.expect("[");
    std::vector<RingElem> gens;
    while (true) {
      gens.push_back(parse_ring_expr(lx, base));
      if (!lx.accept(",")) break;
    }
    lx.expect("]");
    lx.expect(")");
    return CompRing::quotient(base, std::move(gens));
  }
  // a previously declared ring name (handy inside quot)
  auto it = s.rings.find(head);
  if (it != s.rings.end()) return it->second;
  throw parse_error("unknown ring form '" + head + "'", t.line, t.col,
                    "syntax");
}

}  // namespace detail

// A bare ring spec outside any session file.
inline CompRing parse_ring(const std::string& text) {
  Lexer lx(text);
  Session s;
  CompRing r = detail::parse_ring_spec(lx, s);
  if (!lx.done())
    throw parse_error("trailing input after ring spec", lx.peek().line,
                      lx.peek().col, "syntax");
  return r;
}

// Explicit sequent table "a, b |- c; c |- a" with carrier points named by
// first appearance.
struct SequentTable {
  std::vector<std::string> names;
  std::vector<Sequent> table;
};

inline SequentTable parse_sequent_table(const std::string& text) {
  Lexer lx(text);
  SequentTable st;
  auto point = [&](const std::string& n) {
    for (size_t i = 0; i < st.names.size(); ++i)
      if (st.names[i] == n) return (int)i;
    st.names.push_back(n);
    return (int)st.names.size() - 1;
  };
  while (!lx.done()) {
    auto side = [&](std::vector<int>& out) {
      while (lx.peek().kind == Token::Kind::Ident) {
        out.push_back(point(lx.next().text));
        if (!lx.accept(",")) break;
      }
    };
    std::vector<int> l, r;
    side(l);
    lx.expect("|-");
    side(r);
    st.table.push_back(Sequent::make(std::move(l), std::move(r)));
    if (!lx.accept(";")) break;
  }
  if (!lx.done())
    throw parse_error("trailing input after sequent table", lx.peek().line,
                      lx.peek().col, "syntax");
  return st;
}

inline Session parse_session(const std::string& text,
                             int elem_cap = kDefaultElementCap,
                             int gen_cap = kDefaultGeneratorCap) {
  Lexer lx(text);
  Session s;
  while (!lx.done()) {
    Token t = lx.peek();
    std::string kw = lx.expect_ident();
    if (kw == "lattice") {
      detail::parse_lattice_block(lx, s, elem_cap, gen_cap);
    } else if (kw == "morphism") {
      detail::parse_morphism_block(lx, s);
    } else if (kw == "ring") {
      Token name_tok = lx.peek();
      std::string name = lx.expect_ident();
      if (s.rings.count(name))
        throw parse_error("ring '" + name + "' already defined",
                          name_tok.line, name_tok.col, "duplicate");
      lx.expect("=");
      CompRing r = detail::parse_ring_spec(lx, s);
      lx.expect(";");
      s.rings.emplace(name, std::move(r));
    } else {
      throw parse_error("expected 'lattice', 'morphism' or 'ring'", t.line,
                        t.col, "syntax");
    }
  }
  return s;
}

// ---- printing --------------------------------------------------------------------

// A term over the generators denoting e, in the element grammar. Every
// element of a presented lattice is a join of meets of generators, because
// each join-irreducible equals the meet of the generators above it.
inline std::string element_term(const FinLattice& L, int e) {
  if (e == L.bot()) return "0";
  const Bits& d = L.downset(e);
  const auto& gnames = L.generator_names();
  const auto& gelems = L.generator_elements();
  std::string out;
  for (int p = d.next(0); p >= 0; p = d.next(p + 1)) {
    bool maximal = true;
    for (int q = d.next(0); q >= 0 && maximal; q = d.next(q + 1))
      if (q != p && L.base().leq(p, q)) maximal = false;
    if (!maximal) continue;
    int pe = L.principal(p);
    std::string meet;
    for (size_t g = 0; g < gnames.size(); ++g) {
      if (!L.leq(pe, gelems[g])) continue;
      if (!meet.empty()) meet += " & ";
      meet += gnames[g];
    }
    if (meet.empty()) meet = "1";
    if (!out.empty()) out += " |v| ";
    out += meet;
  }
  return out;
}

// Emits the session back in the input grammar; parsing the result yields an
// equivalent session.
inline std::string print_session(const Session& s) {
  std::string out;
  for (const auto& [name, decl] : s.lattices) {
    out += "lattice " + name + " {";
    if (!decl.pres.generators.empty()) {
      out += " gens: ";
      for (size_t i = 0; i < decl.pres.generators.size(); ++i)
        out += (i ? ", " : "") + decl.pres.generators[i];
      out += ";";
    }
    for (const Sequent& ax : decl.pres.axioms) {
      out += " rel: ";
      for (size_t i = 0; i < ax.lhs.size(); ++i)
        out += (i ? ", " : "") + decl.pres.generators[ax.lhs[i]];
      out += " |- ";
      for (size_t i = 0; i < ax.rhs.size(); ++i)
        out += (i ? ", " : "") + decl.pres.generators[ax.rhs[i]];
      out += ";";
    }
    out += " }\n";
  }
  for (const auto& [name, R] : s.rings) {
    auto spec = [](const CompRing& r, auto&& self) -> std::string {
      auto var_list = [&] {
        std::string v = "[";
        for (size_t i = 0; i < r.vars().size(); ++i)
          v += (i ? ", " : "") + r.vars()[i];
        return v + "]";
      };
      switch (r.kind()) {
        case CompRing::Kind::Integers:
          return std::string("ZZ");
        case CompRing::Kind::IntegersMod:
          return "ZZmod(" + r.modulus().str() + ")";
        case CompRing::Kind::PolyRat:
          return "poly(QQ, " + var_list() + ")";
        case CompRing::Kind::PolyFp:
          return "poly(GF(" + std::to_string(r.characteristic()) + "), " +
                 var_list() + ")";
        case CompRing::Kind::Quotient: {
          CompRing base = r.rat_coeffs()
                              ? CompRing::poly_rat(r.vars())
                              : CompRing::poly_fp(r.characteristic(),
                                                  r.vars());
          std::string g;
          for (size_t i = 0; i < r.quotient_gens().size(); ++i)
            g += (i ? ", " : "") + r.str(r.quotient_gens()[i]);
          return "quot(" + self(base, self) + ", [" + g + "])";
        }
      }
      throw contract_error("unhandled ring kind");
    };
    out += "ring " + name + " = " + spec(R, spec) + ";\n";
  }
  for (const auto& [name, m] : s.morphisms) {
    const FinLattice& A = s.lattices.at(m.dom).L;
    const FinLattice& B = s.lattices.at(m.cod).L;
    out += "morphism " + name + " : " + m.dom + " -> " + m.cod + " {";
    const auto& gnames = A.generator_names();
    const auto& gelems = A.generator_elements();
    for (size_t g = 0; g < gnames.size(); ++g)
      out += " " + gnames[g] + " -> " + element_term(B, m.map[gelems[g]]) +
             ";";
    out += " }\n";
  }
  return out;
}

// ---- graph export -----------------------------------------------------------------

// Hasse diagram of the lattice order, bottom at the bottom.
inline std::string emit_dot(const FinLattice& L, const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n  rankdir=BT;\n";
  for (int e = 0; e < L.size(); ++e)
    out += "  n" + std::to_string(e) + " [label=\"" + L.element_label(e) +
           "\"];\n";
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (a == b || !L.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < L.size() && cover; ++c)
        if (c != a && c != b && L.leq(a, c) && L.leq(c, b)) cover = false;
      if (cover)
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) +
               ";\n";
    }
  out += "}\n";
  return out;
}

// Hasse diagram of a labelled poset.
inline std::string emit_poset_dot(const Poset& P,
                                  const std::vector<std::string>& labels,
                                  const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n  rankdir=BT;\n";
  for (int p = 0; p < P.size(); ++p)
    out += "  n" + std::to_string(p) + " [label=\"" + labels[p] + "\"];\n";
  for (int a = 0; a < P.size(); ++a)
    for (int b = 0; b < P.size(); ++b) {
      if (a == b || !P.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < P.size() && cover; ++c)
        if (c != a && c != b && P.leq(a, c) && P.leq(c, b)) cover = false;
      if (cover)
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) +
               ";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace krull
