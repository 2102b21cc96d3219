#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "krull/groebner.hpp"
#include "krull/numeric.hpp"
#include "krull/poly.hpp"

using namespace krull;

namespace {

using PQ = Poly<Rat>;

PQ var(int nvars, MonoOrder ord, int i) {
  return PQ::variable(nvars, ord, i, Rat(1));
}

PQ cst(int nvars, MonoOrder ord, int v) {
  return PQ::constant(nvars, ord, Rat(v));
}

// Random polynomial with small coefficients; degree <= 2 per variable.
PQ random_poly(std::mt19937_64& rng, int nvars, MonoOrder ord, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2);
  PQ out(nvars, ord);
  for (int t = 0; t < terms; ++t) {
    Mono m(nvars, 0);
    for (int v = 0; v < nvars; ++v) m[v] = (uint32_t)exp(rng);
    int c = coeff(rng);
    if (c == 0) continue;
    out = out + PQ::term(nvars, ord, m, Rat(c));
  }
  return out;
}

}  // namespace

TEST_CASE("monomial orders compare as expected") {
  // lex with x > y: ranked by the exponent of x first
  Mono x2{2, 0}, xy{1, 1}, x{1, 0}, y2{0, 2}, y{0, 1}, one{0, 0};
  CHECK(mono_cmp(MonoOrder::Lex, x2, xy) > 0);
  CHECK(mono_cmp(MonoOrder::Lex, xy, x) > 0);
  CHECK(mono_cmp(MonoOrder::Lex, x, y2) > 0);
  CHECK(mono_cmp(MonoOrder::Lex, y2, y) > 0);
  CHECK(mono_cmp(MonoOrder::Lex, y, one) > 0);
  CHECK(mono_cmp(MonoOrder::Lex, x, x) == 0);

  // grevlex: degree first, then smaller last exponent wins
  CHECK(mono_cmp(MonoOrder::GrevLex, x2, xy) > 0);
  CHECK(mono_cmp(MonoOrder::GrevLex, y2, x) > 0);  // degree dominates
  Mono a{2, 1, 1}, b{1, 3, 0};
  CHECK(mono_cmp(MonoOrder::GrevLex, b, a) > 0);  // z-free beats z-bearing

  // block order: variable 0 alone dominates, grevlex on the rest
  Mono t1{1, 0, 0}, rest{0, 5, 5};
  CHECK(mono_cmp(MonoOrder::Block1, t1, rest) > 0);
  Mono t1a{1, 1, 0}, t1b{1, 0, 1};
  CHECK(mono_cmp(MonoOrder::Block1, t1a, t1b) > 0);
}

TEST_CASE("monomial helpers") {
  Mono a{2, 1}, b{1, 1};
  CHECK(mono_deg(a) == 3);
  CHECK(mono_divides(b, a));
  CHECK_FALSE(mono_divides(a, b));
  CHECK(mono_mul(a, b) == Mono{3, 2});
  CHECK(mono_div(a, b) == Mono{1, 0});
  CHECK(mono_lcm(a, b) == Mono{2, 1});
}

TEST_CASE("polynomial arithmetic") {
  const MonoOrder ord = MonoOrder::GrevLex;
  PQ x = var(2, ord, 0), y = var(2, ord, 1);

  SECTION("binomial square") {
    PQ s = (x + y) * (x + y);
    PQ expect = x * x + x * y.scaled(Rat(2)) + y * y;
    CHECK(s == expect);
    CHECK(s.total_degree() == 2);
  }
  SECTION("cancellation to zero") {
    PQ d = (x + y) - (x + y);
    CHECK(d.zero());
    CHECK(is_zero(d));
  }
  SECTION("lead term under grevlex") {
    PQ p = x * y + y * y * y;
    CHECK(p.lead_mono() == Mono{0, 3});
    CHECK(p.lead_coeff() == Rat(1));
  }
  SECTION("power") {
    PQ p = (x - y).pow(3);
    CHECK(p == x * x * x - x * x * y.scaled(Rat(3)) +
                   x * y.scaled(Rat(3)) * y - y * y * y);
    CHECK_THROWS_AS(PQ(2, ord).pow(0), error);
    CHECK((x + cst(2, ord, 1)).pow(0) == cst(2, ord, 1));
  }
  SECTION("compose substitutes values") {
    PQ p = x * x + y;
    std::vector<PQ> vals{y, x};  // swap the variables
    CHECK(p.compose(vals, cst(2, ord, 1)) == y * y + x);
  }
  SECTION("monic and scaled") {
    PQ p = (x * y).scaled(Rat(3)) + y;
    CHECK(p.monic().lead_coeff() == Rat(1));
    CHECK(p.scaled(Rat(2)).lead_coeff() == Rat(6));
  }
  SECTION("zero polynomial has no lead") {
    CHECK_THROWS_AS(PQ(2, ord).lead_mono(), error);
  }
  SECTION("mixed spaces are rejected") {
    CHECK_THROWS_AS(x + var(3, ord, 0), contract_error);
    CHECK_THROWS_AS(x + var(2, MonoOrder::Lex, 0), contract_error);
  }
}

TEST_CASE("prime field polynomials") {
  const MonoOrder ord = MonoOrder::GrevLex;
  using PF = Poly<Fp>;
  auto fp = [](int64_t v) { return Fp::make(v, 2); };
  PF x = PF::variable(1, ord, 0, fp(1));
  PF one = PF::constant(1, ord, fp(1));
  // freshman's dream in characteristic 2
  CHECK((x + one) * (x + one) == x * x + one);
  CHECK_THROWS_AS(Fp::make(1, 2) + Fp::make(1, 3), contract_error);
  CHECK(inv(Fp::make(2, 5)).v == 3);
}

TEST_CASE("normal form reduces fully") {
  const MonoOrder ord = MonoOrder::Lex;
  PQ x = var(2, ord, 0), y = var(2, ord, 1);
  std::vector<PQ> basis{x};
  CHECK(normal_form(x * x + x * y, basis).zero());
  CHECK(normal_form(x * x + y, basis) == y);
  // no term of the remainder is divisible by a basis lead
  PQ r = normal_form((x + y).pow(3), std::vector<PQ>{x * x - y});
  for (const auto& t : r.terms())
    CHECK_FALSE(mono_divides(Mono{2, 0}, t.m));
}

TEST_CASE("s-polynomial of the textbook pair") {
  const MonoOrder ord = MonoOrder::Lex;
  PQ x = var(2, ord, 0), y = var(2, ord, 1);
  PQ f = x * x - cst(2, ord, 1), g = x * y - cst(2, ord, 1);
  // lcm x^2 y; y f - x g = x - y
  CHECK(s_poly(f, g) == x - y);
}

TEST_CASE("reduced basis of <x^2-1, xy-1> under lex") {
  const MonoOrder ord = MonoOrder::Lex;
  PQ x = var(2, ord, 0), y = var(2, ord, 1);
  std::vector<PQ> gb = groebner_basis(std::vector<PQ>{x * x - cst(2, ord, 1),
                                       x * y - cst(2, ord, 1)});
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == x - y);
  CHECK(gb[1] == y * y - cst(2, ord, 1));
  CHECK(ideal_member(y * y - cst(2, ord, 1), gb));
  CHECK(ideal_member((x - y) * (x + y), gb));
  CHECK_FALSE(ideal_member(x + cst(2, ord, 1), gb));
  CHECK_FALSE(ideal_is_one(gb));
}

TEST_CASE("unit ideal is recognized") {
  const MonoOrder ord = MonoOrder::GrevLex;
  PQ x = var(1, ord, 0);
  std::vector<PQ> gb = groebner_basis(std::vector<PQ>{x, x - PQ::constant(1, ord, Rat(1))});
  CHECK(ideal_is_one(gb));
}

TEST_CASE("pair cap raises a resource error") {
  const MonoOrder ord = MonoOrder::GrevLex;
  PQ x = var(2, ord, 0), y = var(2, ord, 1);
  CHECK_THROWS_AS(
      groebner_basis(std::vector<PQ>{x * x - y, x * y - cst(2, ord, 1)}, 1),
      resource_error);
}

TEST_CASE("elimination computes saturations") {
  // Block1 over (t, x, y): members without t generate the contraction.
  const MonoOrder ord = MonoOrder::Block1;
  PQ t = var(3, ord, 0), x = var(3, ord, 1), y = var(3, ord, 2);
  PQ one = cst(3, ord, 1);

  SECTION("x nilpotent and inverted forces 1") {
    std::vector<PQ> gb = groebner_basis(std::vector<PQ>{one - t * x, x * x});
    std::vector<PQ> el = eliminate_var0(gb, MonoOrder::GrevLex);
    CHECK(ideal_is_one(el));
  }
  SECTION("saturating <x y> by x leaves <y>") {
    std::vector<PQ> gb = groebner_basis(std::vector<PQ>{one - t * x, x * y});
    std::vector<PQ> el = eliminate_var0(gb, MonoOrder::GrevLex);
    REQUIRE(el.size() == 1);
    CHECK(el[0] == PQ::variable(2, MonoOrder::GrevLex, 1, Rat(1)));
  }
}

TEST_CASE("random ideals: basis properties") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    int nvars = 2 + (int)(rng() % 2);
    MonoOrder ord = trial % 2 ? MonoOrder::Lex : MonoOrder::GrevLex;
    std::vector<PQ> gens;
    int ng = 2 + (int)(rng() % 2);
    for (int i = 0; i < ng; ++i) {
      PQ g = random_poly(rng, nvars, ord, 3);
      if (!g.zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    std::vector<PQ> gb = groebner_basis(gens);

    // every generator lies in the ideal of the basis
    for (const PQ& g : gens) CHECK(ideal_member(g, gb));
    // all s-polynomials reduce to zero
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j)
        CHECK(normal_form(s_poly(gb[i], gb[j]), gb).zero());
    // normal form is idempotent and a homomorphism witness:
    // f - nf(f) always reduces to zero
    PQ f = random_poly(rng, nvars, ord, 4);
    PQ r = normal_form(f, gb);
    CHECK(normal_form(r, gb) == r);
    CHECK(normal_form(f - r, gb).zero());
    // basis is monic and autoreduced
    for (size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].lead_coeff() == Rat(1));
      for (size_t j = 0; j < gb.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : gb[i].terms())
          CHECK_FALSE(mono_divides(gb[j].lead_mono(), t.m));
      }
    }
  }
}
