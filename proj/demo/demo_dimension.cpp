// Walkthrough: presenting a lattice by generators and relations, measuring
// its dimension several ways, and inspecting the chains behind the number.

#include <cstdio>

#include "krull/dimension.hpp"
#include "krull/krull.hpp"
#include "krull/parse.hpp"

using namespace krull;

int main() {
  // A square with a diagonal: two incomparable generators under a third.
  Session s = parse_session(
      "lattice Square {\n"
      "  gens: a, b, c;\n"
      "  rel: a, b |- c;\n"
      "  rel: c |- a;\n"
      "}\n");
  const FinLattice& L = s.lattice("Square");
  std::printf("Square: %d elements, %d join-irreducibles\n", L.size(),
              L.base().size());

  std::printf("dim (complementary sequences) = %d\n", dim(L));
  std::printf("dim (chain of irreducibles)   = %d\n", L.classical_dim());
  std::printf("dim (difference normal forms) = %d\n", dim_espanol(L));
  std::printf("dim (Krull lattice embedding) = %d\n", joyal_dim(L));

  // What stops the dimension from being smaller: dim_leq reports a tuple
  // with no complementary partner.
  DimCheck c = dim_leq(L, dim(L) - 1);
  if (!c.holds && c.failing_tuple) {
    std::printf("no complementary sequence for:");
    for (int x : *c.failing_tuple)
      std::printf(" %s", element_term(L, x).c_str());
    std::printf("\n");
  }

  // Chains of idealistic primes tell the same story from below. The chain
  // below insists on a prime avoiding c and a larger one containing c.
  IdealisticChain C = parse_chain(L, "{ ; c } | { c ; }");
  std::printf("chain %s collapses: %s\n", "{ ; c } | { c ; }",
              chain_collapses(L, C) ? "yes" : "no");
  IdealisticChain S = saturate_chain(L, C);
  std::printf("saturated: ");
  for (size_t i = 0; i < S.levels.size(); ++i) {
    std::printf("%s{ ", i ? " | " : "");
    for (size_t j = 0; j < S.levels[i].J.size(); ++j)
      std::printf("%s%s", j ? ", " : "",
                  element_term(L, S.levels[i].J[j]).c_str());
    std::printf(" ; ");
    for (size_t j = 0; j < S.levels[i].U.size(); ++j)
      std::printf("%s%s", j ? ", " : "",
                  element_term(L, S.levels[i].U[j]).c_str());
    std::printf(" }");
  }
  std::printf("\n");

  // The first Krull lattice materializes chains of primes as points.
  KrullCaps caps;
  caps.max_irr = 8;
  caps.max_generators = 32;
  KrullLattice K = kr_lattice(L, 1, caps);
  std::printf("Kr_1(Square): %d elements, %d points\n",
              K.materialized.size(), K.materialized.base().size());
  std::printf("monotone pairs of points of Square: %d\n",
              monotone_tuple_poset(L, 1).size());
  return 0;
}
