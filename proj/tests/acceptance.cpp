// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Bounds, sample counts, and time budgets are pinned in code on purpose;
// loosening them here is the same as deleting the check.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "krull/dimension.hpp"
#include "krull/krull.hpp"
#include "krull/morphism.hpp"
#include "krull/ring.hpp"
#include "oracles.hpp"

using namespace krull;

namespace {

int g_failures = 0;

void report(int n, const std::string& what, bool ok,
            const std::string& detail) {
  if (!ok) ++g_failures;
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n,
              what.c_str(), detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

IdealisticChain random_chain(std::mt19937_64& rng, const FinLattice& L,
                             int max_ell, int max_side) {
  std::uniform_int_distribution<int> ne(0, max_ell);
  std::uniform_int_distribution<int> ns(0, max_side);
  std::uniform_int_distribution<int> pick(0, L.size() - 1);
  IdealisticChain C;
  int ell = ne(rng);
  for (int i = 0; i <= ell; ++i) {
    IdealisticPrime p;
    int nj = ns(rng), nu = ns(rng);
    for (int j = 0; j < nj; ++j) p.J.push_back(pick(rng));
    for (int u = 0; u < nu; ++u) p.U.push_back(pick(rng));
    C.levels.push_back(std::move(p));
  }
  return C;
}

// 1. The four dimension computations agree on 200 random lattices.
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<FinLattice> Ls = corpus::random_lattices(1001, 200, 6);
  Ls.push_back(corpus::L3());
  Ls.push_back(corpus::B4());
  Ls.push_back(corpus::Free2());
  Ls.push_back(corpus::Trivial());
  int checked = 0;
  for (const FinLattice& L : Ls) {
    int d_leq = dim(L);
    int d_classical = L.classical_dim();
    int d_esp = dim_espanol(L);
    int d_joy = joyal_dim(L);
    if (d_leq != d_classical || d_leq != d_esp || d_leq != d_joy) {
      report(1, "dimension computations agree", false,
             "lattice with " + std::to_string(L.base().size()) +
                 " irreducibles gave dim_leq=" + std::to_string(d_leq) +
                 " classical=" + std::to_string(d_classical) +
                 " espanol=" + std::to_string(d_esp) +
                 " joyal=" + std::to_string(d_joy));
      return;
    }
    ++checked;
  }
  double dt = seconds_since(t0);
  bool in_budget = dt < 60.0;
  report(1, "dimension computations agree", in_budget,
         std::to_string(checked) + " lattices, " + std::to_string(dt) +
             "s (budget 60s)");
}

// 2. Derivational entailment equals valuation enumeration.
void criterion2() {
  std::mt19937_64 rng(2002);
  int presentations = 0, sequents = 0;
  for (int p = 0; p < 200; ++p) {
    EntailmentPresentation pres = corpus::random_presentation(rng, 10, 15);
    int gens = (int)pres.generators.size();
    ++presentations;
    for (int s = 0; s < 50; ++s) {
      Sequent q = corpus::random_sequent(rng, gens, 3);
      bool val = entails_free(pres, q);
      bool der = entails_free_derivation(pres, q);
      bool oracle = oracle::entails(pres, q);
      if (val != der || val != oracle) {
        report(2, "derivational entailment matches valuations", false,
               "discrepancy at presentation " + std::to_string(p) +
                   " sequent " + std::to_string(s));
        return;
      }
      ++sequents;
    }
  }
  report(2, "derivational entailment matches valuations", true,
         std::to_string(presentations) + " presentations, " +
             std::to_string(sequents) + " sequents");
}

// 3. Both one-point augmentations collapsing forces the chain to collapse.
void criterion3() {
  std::mt19937_64 rng(3003);
  std::vector<FinLattice> Ls = corpus::random_lattices(1003, 60, 5);
  std::uniform_int_distribution<size_t> pickL(0, Ls.size() - 1);
  int instances = 0;
  while (instances < 1000) {
    const FinLattice& L = Ls[pickL(rng)];
    if (L.size() < 2) continue;
    IdealisticChain C = random_chain(rng, L, 2, 2);
    std::uniform_int_distribution<int> lvl(0, C.ell());
    std::uniform_int_distribution<int> elem(0, L.size() - 1);
    int i = lvl(rng), x = elem(rng);
    if (!simultaneous_collapse_check(L, C, i, x)) {
      report(3, "simultaneous collapse implication", false,
             "violated at instance " + std::to_string(instances));
      return;
    }
    ++instances;
  }
  report(3, "simultaneous collapse implication", true,
         std::to_string(instances) + " random (L, C, i, x) instances");
}

// 4. Chain non-collapse is equivalent to a refining monotone prime tuple.
void criterion4() {
  std::mt19937_64 rng(4004);
  std::vector<FinLattice> Ls = corpus::random_lattices(1004, 80, 5);
  Ls.push_back(corpus::L3());
  Ls.push_back(corpus::B4());
  Ls.push_back(corpus::Trivial());
  int instances = 0;
  for (const FinLattice& L : Ls) {
    for (int rep = 0; rep < 6; ++rep) {
      IdealisticChain C = random_chain(rng, L, 2, 2);
      bool collapses = chain_collapses(L, C).has_value();
      bool refinement = oracle::prime_refinement_exists(L, C);
      if (collapses == refinement) {
        report(4, "non-collapse equals prime refinement", false,
               "lattice with " + std::to_string(L.base().size()) +
                   " irreducibles disagreed with the enumeration");
        return;
      }
      ++instances;
    }
  }
  report(4, "non-collapse equals prime refinement", true,
         std::to_string(instances) + " chains, exhaustive tuple search");
}

// 5. Polynomial rings in one and two variables at desk scale.
void criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(5005);
  std::uniform_int_distribution<int> coef(-3, 3);

  for (int n = 1; n <= 2; ++n) {
    std::vector<std::string> vars(n == 1 ? std::vector<std::string>{"x"}
                                         : std::vector<std::string>{"x", "y"});
    CompRing R = CompRing::poly_rat(vars);
    std::vector<RingElem> axes;
    for (int i = 0; i < n; ++i) axes.push_back(R.var(i));
    if (is_singular(R, axes)) {
      report(5, "polynomial ring dimension at desk scale", false,
             "variable tuple rejected as pseudo-regular failed for n=" +
                 std::to_string(n));
      return;
    }

    // counting bound: monomials of Q up to D exceed the dimension of
    // degree-2D polynomials in n variables, so a kernel vector exists
    const uint32_t D = (n == 1) ? 2 : 8;
    for (int sample = 0; sample < 50; ++sample) {
      std::vector<RingElem> ys;
      for (int k = 0; k < n + 1; ++k) {
        RingElem p = R.zero();
        std::vector<Mono> mons = detail::monomials_up_to(n, 2);
        for (const Mono& m : mons) {
          int c = coef(rng);
          if (c == 0) continue;
          RingElem term = R.from_int(c);
          for (int v = 0; v < n; ++v)
            term = R.mul(term, R.pow(R.var(v), m[v]));
          p = R.add(p, term);
        }
        ys.push_back(p);
      }
      if (!is_singular(R, ys)) {
        report(5, "polynomial ring dimension at desk scale", false,
               "a sample of " + std::to_string(n + 1) +
                   " quadratics was not singular (n=" + std::to_string(n) +
                   ", sample " + std::to_string(sample) + ")");
        return;
      }
      std::optional<RingElem> dep = find_algebraic_dependence(R, ys, D);
      if (!dep) {
        report(5, "polynomial ring dimension at desk scale", false,
               "no dependence found at degree " + std::to_string(D) +
                   " (n=" + std::to_string(n) + ")");
        return;
      }
      SingularCertificate cert = collapse_from_dependence(R, *dep, ys);
      if (!verify_singular_certificate(R, ys, cert)) {
        report(5, "polynomial ring dimension at desk scale", false,
               "dependence certificate failed to verify (n=" +
                   std::to_string(n) + ")");
        return;
      }
    }
  }
  double dt = seconds_since(t0);
  bool in_budget = dt < 120.0;
  report(5, "polynomial ring dimension at desk scale", in_budget,
         "100 quadratic samples, " + std::to_string(dt) + "s (budget 120s)");
}

// 6. The integers have dimension one.
void criterion6() {
  CompRing Z = CompRing::integers();
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
    if (is_singular(Z, {Z.from_int(p)})) {
      report(6, "integer pairs are singular, primes are not", false,
             "prime " + std::to_string(p) + " reported singular");
      return;
    }
  }
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<long> big(-1000000, 1000000);
  for (int i = 0; i < 100; ++i) {
    long a = big(rng), b = big(rng);
    if (!is_singular(Z, {Z.from_int(a), Z.from_int(b)})) {
      report(6, "integer pairs are singular, primes are not", false,
             "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                 ") not singular");
      return;
    }
  }
  SingularCertificate frozen;
  frozen.m = {0, 1};
  frozen.a = {Z.from_int(-35), Z.from_int(2)};
  std::vector<RingElem> xs = {Z.from_int(6), Z.from_int(10)};
  if (!verify_singular_certificate(Z, xs, frozen)) {
    report(6, "integer pairs are singular, primes are not", false,
           "the (6,10) certificate with m=(0,1), a=(-35,2) did not expand "
           "to zero");
    return;
  }
  report(6, "integer pairs are singular, primes are not", true,
         "10 primes rejected, 100 random pairs accepted, frozen certificate "
         "expands");
}

// 7. Going up/down shortcuts agree with brute force; lying over with going
//    up bounds the domain dimension by the codomain's.
void criterion7() {
  std::mt19937_64 rng(7007);
  std::vector<FinLattice> Ls = corpus::random_lattices(1007, 40, 4);
  std::uniform_int_distribution<size_t> pickL(0, Ls.size() - 1);
  int morphisms = 0, lyo_gu = 0;
  while (morphisms < 500) {
    const FinLattice& A = Ls[pickL(rng)];
    const FinLattice& B = Ls[pickL(rng)];
    if (A.is_trivial() && !B.is_trivial()) continue;
    LatticeMorphism m = random_morphism(rng, A, B);
    GugdResult gu = is_going_up(m);
    GugdResult gd = is_going_down(m);
    if (gu.holds != going_up_brute(m) || gd.holds != going_down_brute(m)) {
      report(7, "transfer property shortcuts match brute force", false,
             "disagreement at morphism " + std::to_string(morphisms));
      return;
    }
    if (is_lying_over(m).holds && gu.holds) {
      ++lyo_gu;
      if (dim(A) > dim(B)) {
        report(7, "transfer property shortcuts match brute force", false,
               "lying over with going up but dim(dom) > dim(cod)");
        return;
      }
    }
    ++morphisms;
  }
  report(7, "transfer property shortcuts match brute force", true,
         std::to_string(morphisms) + " morphisms, " +
             std::to_string(lyo_gu) + " with lying over and going up");
}

// 8. Relative dimension: the frozen embedding and the product bound.
void criterion8() {
  FinLattice Two = FinLattice::chain_lattice(2);
  FinLattice L3 = FinLattice::chain_lattice(3);
  LatticeMorphism emb;
  emb.dom = &Two;
  emb.cod = &L3;
  emb.map.assign(Two.size(), 0);
  emb.map[Two.bot()] = L3.bot();
  emb.map[Two.top()] = L3.top();
  int frozen = relative_dim(emb);
  if (frozen != 1) {
    report(8, "relative dimension bound", false,
           "two-chain into three-chain computed " + std::to_string(frozen) +
               ", wanted 1");
    return;
  }

  std::mt19937_64 rng(8008);
  std::vector<FinLattice> doms = corpus::random_lattices(1080, 25, 3);
  std::vector<FinLattice> cods = corpus::random_lattices(1081, 25, 4);
  std::uniform_int_distribution<size_t> pd(0, doms.size() - 1);
  std::uniform_int_distribution<size_t> pc(0, cods.size() - 1);
  int collected = 0;
  for (int trial = 0; trial < 4000 && collected < 100; ++trial) {
    const FinLattice& A = doms[pd(rng)];
    const FinLattice& B = cods[pc(rng)];
    if (A.is_trivial() && !B.is_trivial()) continue;
    LatticeMorphism m = random_morphism(rng, A, B);
    if (!is_injective(m)) continue;
    int dm = dim(A);
    int dn = relative_dim(m);
    int bound = (dm + 1) * (dn + 1) - 1;
    if (dim(B) > bound) {
      report(8, "relative dimension bound", false,
             "dim(dom)=" + std::to_string(dm) + " relative=" +
                 std::to_string(dn) + " but dim(cod)=" +
                 std::to_string(dim(B)) + " exceeds " +
                 std::to_string(bound));
      return;
    }
    ++collected;
  }
  bool enough = collected >= 100;
  report(8, "relative dimension bound", enough,
         "frozen embedding = 1, " + std::to_string(collected) +
             " injective corpus instances within the product bound");
}

// 9. Integral quadratic extensions: every split yields a verified identity.
void criterion9() {
  std::mt19937_64 rng(9009);
  std::uniform_int_distribution<long> coef(-9, 9);
  QuadRing Gi{-1, 0};
  int relations = 0, splits = 0;
  for (int trial = 0; trial < 25; ++trial) {
    QuadRing B = (trial == 0) ? Gi : QuadRing{Int(coef(rng)), Int(coef(rng))};
    QuadElem x{Int(coef(rng)), Int(coef(rng))};
    Int T = 2 * x.a + x.b * B.c1;
    Int N = x.a * x.a + x.a * x.b * B.c1 - x.b * x.b * B.c0;
    IntegralRelation rel;
    rel.k = 2;
    rel.a = {QuadElem{-N, 0}, QuadElem{T, 0}, QuadElem{0, 0}};
    if (!verify_integral_relation(B, x, rel)) {
      report(9, "integral splits verify for every side choice", false,
             "constructed quadratic relation failed to hold");
      return;
    }
    ++relations;
    for (const std::vector<size_t>& uside :
         {std::vector<size_t>{}, {0}, {1}, {0, 1}}) {
      IntegralSplitIdentity id;
      try {
        id = integral_relative_collapse(B, x, rel, uside);
      } catch (const error& e) {
        report(9, "integral splits verify for every side choice", false,
               std::string("collapse construction threw: ") + e.what());
        return;
      }
      if (!verify_integral_split(B, x, rel, uside, id)) {
        report(9, "integral splits verify for every side choice", false,
               "identity failed exact expansion at relation " +
                   std::to_string(relations));
        return;
      }
      ++splits;
    }
  }
  report(9, "integral splits verify for every side choice", true,
         std::to_string(relations) + " relations, " + std::to_string(splits) +
             " verified splits");
}

// 10. Gluing local certificates for (6, 10) along denominators 2 and 3.
void criterion10() {
  std::vector<Int> xs = {6, 10};
  LocalizedCertificate l2{2, {0, 1}, {Rat(-10), Rat(1, 2)}};
  LocalizedCertificate l3{3, {0, 1}, {Rat(35, 9), Rat(-1, 3)}};
  if (!verify_localized_certificate(xs, l2) ||
      !verify_localized_certificate(xs, l3)) {
    report(10, "local certificates glue to a global identity", false,
           "a localized certificate failed its own expansion");
    return;
  }
  GlueResult g;
  try {
    g = glue_collapses(xs, {l2, l3});
  } catch (const error& e) {
    report(10, "local certificates glue to a global identity", false,
           std::string("gluing threw: ") + e.what());
    return;
  }
  CompRing Z = CompRing::integers();
  std::vector<RingElem> xe = {Z.from_int(6), Z.from_int(10)};
  if (!verify_singular_certificate(Z, xe, g.cert)) {
    report(10, "local certificates glue to a global identity", false,
           "glued certificate failed exact expansion");
    return;
  }
  Int combo = 0;
  for (size_t i = 0; i < g.leads.size(); ++i)
    combo += g.partition[i] * g.leads[i];
  if (combo != 1) {
    report(10, "local certificates glue to a global identity", false,
           "lead powers are not partitioned by a Bezout identity");
    return;
  }
  report(10, "local certificates glue to a global identity", true,
         "denominators 2 and 3, glued certificate expands to zero");
}

// 11. Points of the first Krull lattice are the monotone prime pairs.
void criterion11() {
  std::vector<FinLattice> Ls = corpus::random_lattices(1011, 60, 4);
  Ls.push_back(corpus::L3());
  Ls.push_back(corpus::B4());
  Ls.push_back(corpus::Trivial());
  int checked = 0;
  for (const FinLattice& L : Ls) {
    if (L.base().size() > 4) continue;
    KrullLattice K = kr_lattice(L, 1, KrullCaps{});
    Poset pairs = monotone_tuple_poset(L, 1);
    if (!poset_isomorphic(K.materialized.base(), pairs)) {
      report(11, "first Krull lattice points are monotone prime pairs",
             false,
             "poset mismatch on a lattice with " +
                 std::to_string(L.base().size()) + " irreducibles");
      return;
    }
    ++checked;
  }
  report(11, "first Krull lattice points are monotone prime pairs", true,
         std::to_string(checked) + " lattices, exhaustive isomorphism check");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
