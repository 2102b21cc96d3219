#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "corpus.hpp"
#include "json.hpp"
#include "krull/cli.hpp"
#include "krull/parse.hpp"

using namespace krull;
using nlohmann::json;

namespace {

const char* kFixture = R"(# two lattices, a morphism, and some rings
lattice L3 {
  gens: m;
}

lattice V {
  gens: a, b;
}

lattice Free {
  gens: x, y;
}

morphism f : V -> L3 {
  a -> m;
  b -> 0;
}

ring Z = ZZ;
ring Zm = ZZmod(12);
ring P = poly(QQ, [x, y]);
ring G = poly(GF(5), [u]);
ring Qt = quot(poly(QQ, [t]), [t^2 + 1]);
)";

std::string fixture_path() {
  static std::string path;
  if (path.empty()) {
    path = (std::filesystem::temp_directory_path() / "krull_cli_fix.lkd")
               .string();
    std::ofstream out(path);
    out << kFixture;
  }
  return path;
}

int parse_code(const std::string& src, std::string* code = nullptr) {
  try {
    parse_session(src);
    return 0;
  } catch (const parse_error& e) {
    if (code) *code = e.code;
    return 1;
  }
}

}  // namespace

TEST_CASE("element grammar", "[parse]") {
  Session s = parse_session(kFixture);
  const FinLattice& V = s.lattice("V");
  int a = V.generator_element("a");
  int b = V.generator_element("b");

  CHECK(parse_element(V, "0") == V.bot());
  CHECK(parse_element(V, "1") == V.top());
  CHECK(parse_element(V, "a") == a);
  CHECK(parse_element(V, "a & b") == V.meet(a, b));
  CHECK(parse_element(V, "a |v| b") == V.join(a, b));
  CHECK(parse_element(V, "a + b") == V.join(a, b));
  CHECK(parse_element(V, "(a |v| b) & b") == b);
  CHECK(parse_element(V, "a & (b |v| 1)") == a);
  CHECK(parse_element(V, "0 |v| a") == a);

  CHECK_THROWS_AS(parse_element(V, "c"), parse_error);
  CHECK_THROWS_AS(parse_element(V, "a &"), parse_error);
  CHECK_THROWS_AS(parse_element(V, "a b"), parse_error);
  CHECK_THROWS_AS(parse_element(V, ""), parse_error);

  // every element round-trips through its printed term
  for (int e = 0; e < V.size(); ++e)
    CHECK(parse_element(V, element_term(V, e)) == e);
  const FinLattice& L3 = s.lattice("L3");
  for (int e = 0; e < L3.size(); ++e)
    CHECK(parse_element(L3, element_term(L3, e)) == e);
}

TEST_CASE("chain grammar round trip", "[parse]") {
  Session s = parse_session(kFixture);
  const FinLattice& L3 = s.lattice("L3");

  int m = parse_element(L3, "m");
  IdealisticChain C = parse_chain(L3, "{ ; m } | { m ; 1 }");
  REQUIRE(C.ell() == 1);
  CHECK(C.levels[0].J.empty());
  CHECK(C.levels[0].U == std::vector<int>{m});
  CHECK(C.levels[1].J == std::vector<int>{m});
  CHECK(C.levels[1].U == std::vector<int>{L3.top()});

  IdealisticChain D = parse_chain(L3, "{ 0 ; }");
  CHECK(D.ell() == 0);
  CHECK(D.levels[0].J == std::vector<int>{L3.bot()});
  CHECK(D.levels[0].U.empty());

  std::string printed = detail::chain_str(L3, C);
  IdealisticChain back = parse_chain(L3, printed);
  REQUIRE(back.levels.size() == C.levels.size());
  for (size_t i = 0; i < C.levels.size(); ++i) {
    CHECK(back.levels[i].J == C.levels[i].J);
    CHECK(back.levels[i].U == C.levels[i].U);
  }

  CHECK_THROWS_AS(parse_chain(L3, ""), parse_error);
  CHECK_THROWS_AS(parse_chain(L3, "{ ; m } |"), parse_error);
  CHECK_THROWS_AS(parse_chain(L3, "; m | m ;"), parse_error);
}

TEST_CASE("session grammar diagnostics", "[parse]") {
  std::string code;

  CHECK(parse_code("lattice T { gens: a; }") == 0);
  CHECK(parse_code("lattice T { gens: ; }") == 0);
  CHECK(parse_code("lattice T { gens: a, b; rel: a |- b; rel: |- a; }") == 0);

  CHECK(parse_code("lattice T { gens: a, a; }", &code) == 1);
  CHECK(code == "duplicate");
  CHECK(parse_code("lattice T { gens: a; } lattice T { gens: b; }", &code) ==
        1);
  CHECK(code == "duplicate");
  CHECK(parse_code("lattice T { gens: a; rel: a |- q; }", &code) == 1);
  CHECK(code == "unknown-name");
  CHECK(parse_code("morphism f : A -> B { }", &code) == 1);
  CHECK(code == "unknown-name");
  CHECK(parse_code("lattice T { gens: a", &code) == 1);
  CHECK(code == "incomplete");
  CHECK(parse_code("lattice T gens: a; }", &code) == 1);
  CHECK(code == "syntax");
  CHECK(parse_code("ring R = ZZmod(x);", &code) == 1);
  CHECK(code == "syntax");

  // a morphism must map every generator of its domain
  CHECK(parse_code("lattice A { gens: a, b; } lattice B { gens: c; } "
                   "morphism f : A -> B { a -> c; }",
                   &code) == 1);
  CHECK(code == "incomplete");
  CHECK(parse_code("lattice A { gens: a; } lattice B { gens: c; } "
                   "morphism f : A -> B { a -> c; a -> 0; }",
                   &code) == 1);
  CHECK(code == "duplicate");

  // positions point into the source
  try {
    parse_session("lattice T {\n  gens: a;\n  rel: a |- zz;\n}");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 1);
  }
}

TEST_CASE("ring expression grammar", "[parse]") {
  Session s = parse_session(kFixture);
  const CompRing& P = s.ring("P");
  RingElem x = P.var(0), y = P.var(1);

  CHECK(P.eq(parse_ring_elem(P, "x"), x));
  CHECK(P.eq(parse_ring_elem(P, "x^2 - 2*x*y + y^2"),
             P.mul(P.sub(x, y), P.sub(x, y))));
  CHECK(P.eq(parse_ring_elem(P, "-(x - y)"), P.sub(y, x)));
  CHECK(P.eq(parse_ring_elem(P, "x/2 + x/2"), x));
  CHECK(P.eq(parse_ring_elem(P, "3/2 * x * 2"), P.mul(P.from_int(3), x)));

  const CompRing& Zm = s.ring("Zm");
  CHECK(Zm.eq(parse_ring_elem(Zm, "7 * 9"), Zm.from_int(3)));
  CHECK(Zm.eq(parse_ring_elem(Zm, "1/5"), Zm.from_int(5)));

  const CompRing& Qt = s.ring("Qt");
  CHECK(Qt.eq(parse_ring_elem(Qt, "t^2"), Qt.neg(Qt.one())));

  std::vector<RingElem> many = parse_ring_elems(P, "x, y, x*y");
  REQUIRE(many.size() == 3);
  CHECK(P.eq(many[2], P.mul(x, y)));

  CHECK_THROWS_AS(parse_ring_elem(P, "z"), parse_error);
  CHECK_THROWS_AS(parse_ring_elem(P, "x +"), parse_error);
  CHECK_THROWS_AS(parse_ring_elem(P, "x / y"), input_error);
  CHECK_THROWS_AS(parse_ring_elem(P, "1/0"), input_error);
  const CompRing& Z = s.ring("Z");
  CHECK_THROWS_AS(parse_ring_elem(Z, "1/2"), input_error);

  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK_THROWS_AS(parse_rat("3/"), parse_error);

  // polynomial printing re-parses to the same element
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    RingElem p = P.zero();
    for (int t = 0; t < 4; ++t) {
      RingElem term = P.from_int(c(rng));
      term = P.mul(term, P.pow(x, e(rng)));
      term = P.mul(term, P.pow(y, e(rng)));
      p = P.add(p, term);
    }
    CHECK(P.eq(parse_ring_elem(P, P.str(p)), p));
  }
}

TEST_CASE("sequent tables", "[parse]") {
  SequentTable t = parse_sequent_table("a, b |- c; c |- a; |- b");
  CHECK(t.names == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(t.table.size() == 3);
  CHECK(t.table[0].lhs == std::vector<int>{0, 1});
  CHECK(t.table[0].rhs == std::vector<int>{2});
  CHECK(t.table[2].lhs.empty());

  SequentTable e = parse_sequent_table("a |-");
  REQUIRE(e.table.size() == 1);
  CHECK(e.table[0].rhs.empty());
  CHECK(parse_sequent_table("").table.empty());
  CHECK_THROWS_AS(parse_sequent_table("a b |- c"), parse_error);
}

TEST_CASE("session printing round trip", "[parse]") {
  Session s = parse_session(kFixture);
  std::string printed = print_session(s);
  Session back = parse_session(printed);

  REQUIRE(back.lattices.size() == s.lattices.size());
  for (const auto& [name, decl] : s.lattices) {
    const Session::LatticeDecl& b = back.lattices.at(name);
    CHECK(b.L.size() == decl.L.size());
    CHECK(b.L.generator_names() == decl.L.generator_names());
    // same presentation: same entailments on a sample of sequents
    CHECK(b.pres.generators == decl.pres.generators);
  }
  REQUIRE(back.rings.size() == s.rings.size());
  for (const auto& [name, R] : s.rings) {
    const CompRing& b = back.ring(name);
    CHECK(b.kind() == R.kind());
    CHECK(b.nvars() == R.nvars());
  }
  REQUIRE(back.morphisms.size() == s.morphisms.size());
  for (const auto& [name, m] : s.morphisms) {
    const Session::MorphismDecl& b = back.morphisms.at(name);
    CHECK(b.dom == m.dom);
    CHECK(b.cod == m.cod);
    CHECK(b.map == m.map);
  }
}

TEST_CASE("dot emission", "[parse]") {
  Session s = parse_session(kFixture);
  const FinLattice& L3 = s.lattice("L3");
  std::string dot = emit_dot(L3, "L3");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"m\"") != std::string::npos);
  std::string pdot = emit_poset_dot(L3.base(), {"m"}, "base");
  CHECK(pdot.find("digraph") != std::string::npos);
}

TEST_CASE("cli dimension and chains", "[cli]") {
  std::string fix = fixture_path();

  CliResult dim = run_cli({"lat", "dim", fix, "--lattice", "L3"});
  CHECK(dim.code == kExitHolds);
  CHECK(dim.output.find("dim = 1") != std::string::npos);

  CliResult leq = run_cli({"lat", "dim", fix, "--lattice", "L3", "--leq", "0"});
  CHECK(leq.code == kExitFails);
  CHECK(leq.output.find("no complementary sequence") != std::string::npos);

  CliResult jd = run_cli(
      {"--json", "lat", "dim", fix, "--lattice", "L3", "--leq", "1"});
  CHECK(jd.code == kExitHolds);
  json doc = json::parse(jd.output);
  CHECK(doc.at("holds") == true);

  // reported witnesses verify after re-parsing the element terms
  json wit = json::parse(
      run_cli({"--json", "lat", "dim", fix, "--lattice", "Free", "--leq", "2"})
          .output);
  Session s = parse_session(kFixture);
  const FinLattice& F = s.lattice("Free");
  REQUIRE(wit.at("witnesses").size() > 0);
  for (const auto& w : wit.at("witnesses")) {
    std::vector<int> xs, ys;
    for (const auto& t : w.at("xs"))
      xs.push_back(parse_element(F, t.get<std::string>()));
    for (const auto& t : w.at("ys"))
      ys.push_back(parse_element(F, t.get<std::string>()));
    CHECK(verify_complementary(F, xs, ys));
  }

  CliResult col = run_cli({"lat", "collapse", fix, "--lattice", "L3",
                           "--chain", "{ ; m } | { m ; 1 }"});
  CHECK(col.code == kExitFails);
  CliResult col2 = run_cli({"lat", "collapse", fix, "--lattice", "L3",
                            "--chain", "{ ; 1 } | { 1 ; 1 }"});
  CHECK(col2.code == kExitHolds);

  CliResult sat = run_cli({"lat", "saturate", fix, "--lattice", "L3",
                           "--chain", "{ ; m } | { m ; 1 }"});
  CHECK(sat.code == kExitHolds);
  CHECK(sat.output.find("{ 0 ; m, 1 } | { 0, m ; 1 }") != std::string::npos);

  // saturation printed by the tool is already saturated
  const FinLattice& L3r = s.lattice("L3");
  std::string line = sat.output.substr(0, sat.output.find('\n'));
  IdealisticChain satc = parse_chain(L3r, line);
  IdealisticChain twice = saturate_chain(L3r, satc);
  for (size_t i = 0; i < satc.levels.size(); ++i) {
    CHECK(twice.levels[i].J == satc.levels[i].J);
    CHECK(twice.levels[i].U == satc.levels[i].U);
  }

  CliResult esp = run_cli({"--json", "lat", "espanol", fix, "--lattice", "L3"});
  CHECK(esp.code == kExitHolds);
  json ej = json::parse(esp.output);
  CHECK(ej.at("dim") == 1);
}

TEST_CASE("cli krull lattices and laws", "[cli]") {
  std::string fix = fixture_path();

  CliResult kr = run_cli({"--json", "lat", "kr", fix, "--lattice", "L3",
                          "--order", "1"});
  CHECK(kr.code == kExitHolds);
  json kj = json::parse(kr.output);
  CHECK(kj.at("elements") == 4);

  CliResult spec = run_cli({"--json", "lat", "spec", fix, "--lattice", "L3"});
  CHECK(spec.code == kExitHolds);
  json sj = json::parse(spec.output);
  CHECK(sj.at("points").size() == 2);  // the 3-chain has irreducibles m and 1

  CliResult dot = run_cli({"lat", "kr", fix, "--lattice", "L3", "--order",
                           "1", "--emit", "dot"});
  CHECK(dot.code == kExitHolds);
  CHECK(dot.output.find("digraph") != std::string::npos);

  CliResult laws = run_cli({"check-laws", "--table", "a |- a"});
  CHECK(laws.code == kExitHolds);
  CliResult viol = run_cli({"check-laws", "--table", "a |- b; b |- a"});
  CHECK(viol.code == kExitFails);
  CHECK(viol.output.find("R") != std::string::npos);
  CliResult lfile = run_cli({"check-laws", fix, "--lattice", "V"});
  CHECK(lfile.code == kExitHolds);
}

TEST_CASE("cli morphisms", "[cli]") {
  std::string fix = fixture_path();

  CliResult all = run_cli({"morph", "check", fix, "--morphism", "f"});
  CHECK(all.code == kExitFails);  // this f has no lying over
  CHECK(all.output.find("lyo") != std::string::npos);

  CliResult gu = run_cli(
      {"morph", "check", fix, "--morphism", "f", "--props", "gu"});
  CHECK(gu.code == kExitHolds);

  CliResult rd = run_cli({"morph", "reldim", fix, "--morphism", "f"});
  CHECK(rd.code == kExitUsage);  // not injective

  // an injective embedding has a finite relative dimension
  std::string emb_path =
      (std::filesystem::temp_directory_path() / "krull_cli_emb.lkd").string();
  {
    std::ofstream out(emb_path);
    out << "lattice L3 { gens: m; }\n"
           "lattice Two { gens: ; }\n"
           "morphism g : Two -> L3 { }\n";
  }
  CliResult rg = run_cli({"morph", "reldim", emb_path, "--morphism", "g"});
  CHECK(rg.code == kExitHolds);
  CHECK(rg.output.find("reldim = 1") != std::string::npos);
  CliResult rl = run_cli({"morph", "reldim", emb_path, "--morphism", "g",
                          "--leq", "0"});
  CHECK(rl.code == kExitFails);
  std::remove(emb_path.c_str());
}

TEST_CASE("cli rings", "[cli]") {
  std::string fix = fixture_path();

  CliResult sing = run_cli(
      {"ring", "singular", "--ring", "ZZ", "--seq", "6, 10"});
  CHECK(sing.code == kExitHolds);
  CliResult nsing = run_cli(
      {"ring", "singular", "--ring", "ZZ", "--seq", "5"});
  CHECK(nsing.code == kExitFails);

  CliResult named = run_cli(
      {"ring", "singular", fix, "--ring", "P", "--seq", "x, x^2"});
  CHECK(named.code == kExitHolds);

  CliResult fc = run_cli({"--json", "ring", "find-cert", "--ring", "ZZ",
                          "--seq", "6, 10"});
  CHECK(fc.code == kExitHolds);
  json fj = json::parse(fc.output);
  REQUIRE(fj.at("found") == true);
  json cert_obj = {{"m", fj.at("m")}, {"a", fj.at("a")}};
  std::string cert_text = cert_obj.dump();

  CliResult vc = run_cli({"ring", "verify-cert", "--ring", "ZZ", "--seq",
                          "6, 10", "--cert", cert_text});
  CHECK(vc.code == kExitHolds);
  CliResult vbad = run_cli({"ring", "verify-cert", "--ring", "ZZ", "--seq",
                            "6, 10", "--cert",
                            R"({"m":[0,1],"a":["-35","3"]})"});
  CHECK(vbad.code == kExitFails);
  CliResult vfrozen = run_cli({"ring", "verify-cert", "--ring", "ZZ", "--seq",
                               "6, 10", "--cert",
                               R"({"m":["0","1"],"a":["-35","2"]})"});
  CHECK(vfrozen.code == kExitHolds);
  CliResult vjunk = run_cli({"ring", "verify-cert", "--ring", "ZZ", "--seq",
                             "6, 10", "--cert", "{\"m\":7}"});
  CHECK(vjunk.code == kExitUsage);

  CliResult ze = run_cli({"ring", "zar-entails", "--ring", "ZZ", "--u", "6",
                          "--j", "2, 3"});
  CHECK(ze.code == kExitHolds);
  CliResult zf = run_cli({"ring", "zar-entails", "--ring", "ZZ", "--u", "2",
                          "--j", "6"});
  CHECK(zf.code == kExitFails);

  CliResult glue = run_cli(
      {"--json", "ring", "glue", "--seq", "6, 10", "--loc",
       R"({"s":"2","m":[0,1],"a":["-10","1/2"]})", "--loc",
       R"({"s":"3","m":[0,1],"a":["35/9","-1/3"]})"});
  CHECK(glue.code == kExitHolds);
  json gj = json::parse(glue.output);
  CHECK(gj.at("m").size() == 2);
  CHECK(gj.at("verified") == true);
}

TEST_CASE("cli errors and exit codes", "[cli]") {
  std::string fix = fixture_path();

  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"lat", "dim", "/nonexistent.lkd", "--lattice", "T"}).code ==
        kExitUsage);
  CHECK(run_cli({"lat", "dim", fix, "--lattice", "nope"}).code == kExitUsage);
  CHECK(run_cli({"lat", "collapse", fix, "--lattice", "L3", "--chain",
                 "{ ; zz }"})
            .code == kExitUsage);
  CHECK(run_cli({"ring", "singular", "--ring", "ZZmod(1)", "--seq", "2"})
            .code == kExitUsage);

  // two lattices and no --lattice is ambiguous
  CHECK(run_cli({"lat", "dim", fix}).code == kExitUsage);

  // a generator blowup reports a resource exit
  std::string big_path =
      (std::filesystem::temp_directory_path() / "krull_cli_big.lkd").string();
  {
    std::ofstream out(big_path);
    out << "lattice Big { gens: ";
    for (int i = 0; i < 25; ++i) out << (i ? ", g" : "g") << i;
    out << "; }\n";
  }
  CHECK(run_cli({"lat", "dim", big_path}).code == kExitResource);
  std::remove(big_path.c_str());

  // --seed is echoed
  CliResult seeded = run_cli({"--seed", "7", "lat", "dim", fix, "--lattice",
                              "L3"});
  CHECK(seeded.output.find("seed") != std::string::npos);
}
