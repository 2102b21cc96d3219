#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "krull/entail.hpp"
#include "krull/lattice.hpp"
#include "oracles.hpp"

using namespace krull;

TEST_CASE("sequent normalization") {
  Sequent s = Sequent::make({2, 0, 2}, {1, 1});
  CHECK(s.lhs == std::vector<int>({0, 2}));
  CHECK(s.rhs == std::vector<int>({1}));
}

TEST_CASE("presentation guards") {
  EntailmentPresentation pres;
  pres.add_generator("a");
  CHECK_THROWS_AS(pres.add_generator("a"), input_error);
  CHECK(pres.find_generator("a") == 0);
  CHECK(pres.find_generator("b") == -1);
  CHECK_THROWS_AS(pres.add_axiom(Sequent::make({5}, {})), input_error);
}

TEST_CASE("reflexivity and basic axioms via valuations") {
  EntailmentPresentation pres;
  pres.add_generator("x");
  pres.add_generator("y");
  pres.add_axiom(Sequent::make({0}, {1}));
  CHECK(entails_free(pres, Sequent::make({0}, {0})));
  CHECK(entails_free(pres, Sequent::make({0}, {1})));
  CHECK(entails_free(pres, Sequent::make({0, 1}, {1})));
  CHECK(!entails_free(pres, Sequent::make({1}, {0})));
  CHECK(!entails_free(pres, Sequent::make({}, {0, 1})));
  CHECK(is_consistent(pres));
}

TEST_CASE("inconsistent presentation entails everything") {
  EntailmentPresentation pres;
  pres.add_generator("x");
  pres.add_axiom(Sequent::make({}, {0}));
  pres.add_axiom(Sequent::make({0}, {}));
  CHECK(!is_consistent(pres));
  CHECK(entails_free(pres, Sequent::make({}, {})));
  CHECK(entails_free_derivation(pres, Sequent::make({}, {})));
}

TEST_CASE("generator cap is a resource error") {
  EntailmentPresentation pres;
  for (int i = 0; i < 21; ++i)
    pres.add_generator("g" + std::to_string(i));
  CHECK_THROWS_AS(entails_free(pres, Sequent::make({0}, {1})),
                  resource_error);
  CHECK_NOTHROW(entails_free(pres, Sequent::make({0}, {1}), 21));
}

TEST_CASE("derivation path agrees with valuation path and oracle") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    EntailmentPresentation pres = corpus::random_presentation(rng, 6, 8);
    for (int probe = 0; probe < 30; ++probe) {
      Sequent q =
          corpus::random_sequent(rng, (int)pres.generators.size(), 3);
      bool val = entails_free(pres, q);
      bool der = entails_free_derivation(pres, q);
      bool ora = oracle::entails(pres, q);
      CHECK(val == ora);
      CHECK(der == ora);
      ++checked;
    }
  }
  CHECK(checked >= 3000);
}

TEST_CASE("entailment laws hold on random finite lattices") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    FinLattice L = random_lattice(rng, 4);
    if (L.size() > 8) continue;
    LawReport rep = check_entailment_laws(L);
    CHECK(rep.ok());
    CHECK(rep.total_violations == 0);
  }
}

TEST_CASE("law checker flags a broken relation") {
  // Carrier {0,1}; the relation holds everywhere except ({},{}) and
  // ({0},{1}). The first gap breaks cut (through either element), the
  // second breaks monotonicity (({},{1}) is present).
  std::vector<Sequent> table;
  std::vector<std::vector<int>> sides = {{}, {0}, {1}, {0, 1}};
  for (const auto& lhs : sides)
    for (const auto& rhs : sides) {
      if (lhs.empty() && rhs.empty()) continue;
      if (lhs == std::vector<int>{0} && rhs == std::vector<int>{1}) continue;
      table.push_back(Sequent::make(lhs, rhs));
    }
  LawReport rep = check_entailment_laws(2, table);
  CHECK(!rep.ok());
  bool saw_m = false, saw_t = false;
  for (const auto& v : rep.violations) {
    if (v.law == "M") saw_m = true;
    if (v.law == "T") saw_t = true;
  }
  CHECK(saw_m);
  CHECK(saw_t);
}

TEST_CASE("law checker accepts a complete relation and caps the carrier") {
  FinLattice L = corpus::B4();
  std::vector<Sequent> table;
  std::vector<std::vector<int>> sides = {{}, {0}, {1}, {0, 1}};
  auto elems = L.irreducible_elements();
  for (const auto& lhs : sides)
    for (const auto& rhs : sides) {
      std::vector<int> l, r;
      for (int i : lhs) l.push_back(elems[i]);
      for (int i : rhs) r.push_back(elems[i]);
      if (L.leq(L.meet_all(l), L.join_all(r)))
        table.push_back(Sequent::make(lhs, rhs));
    }
  CHECK(check_entailment_laws(2, table).ok());
  CHECK_THROWS_AS(check_entailment_laws(11, {}), resource_error);
}
