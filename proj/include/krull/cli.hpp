#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "krull/dimension.hpp"
#include "krull/krull.hpp"
#include "krull/parse.hpp"

namespace krull {

struct CliResult {
  int code = 0;
  std::string output;
};

// Exit codes: 0 = holds / value computed, 1 = property fails,
// 2 = parse or usage error, 3 = resource cap exceeded.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

namespace detail {

// Extra helpers shared by the command handlers.

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const FinLattice& pick_lattice(const Session& s,
                                      const std::string& name) {
  if (!name.empty()) return s.lattice(name);
  if (s.lattices.size() == 1) return s.lattices.begin()->second.L;
  throw input_error(s.lattices.empty()
                        ? "input defines no lattice"
                        : "several lattices defined; pass --lattice");
}

inline LatticeMorphism pick_morphism(const Session& s,
                                     const std::string& name) {
  if (!name.empty()) return s.morphism(name);
  if (s.morphisms.size() == 1) return s.morphism(s.morphisms.begin()->first);
  throw input_error(s.morphisms.empty()
                        ? "input defines no morphism"
                        : "several morphisms defined; pass --morphism");
}

// --ring takes either a name from the session file or an inline ring spec.
inline CompRing pick_ring(const std::optional<Session>& s,
                          const std::string& spec) {
  if (spec.empty()) {
    if (s && s->rings.size() == 1) return s->rings.begin()->second;
    throw input_error("pass --ring (a name from the file or a ring spec)");
  }
  if (s) {
    auto it = s->rings.find(spec);
    if (it != s->rings.end()) return it->second;
  }
  return parse_ring(spec);
}

inline std::string tuple_str(const FinLattice& L, const std::vector<int>& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i)
    out += (i ? ", " : "") + element_term(L, t[i]);
  return out + ")";
}

inline nlohmann::json tuple_json(const FinLattice& L,
                                 const std::vector<int>& t) {
  nlohmann::json a = nlohmann::json::array();
  for (int e : t) a.push_back(element_term(L, e));
  return a;
}

inline std::string chain_str(const FinLattice& L, const IdealisticChain& C) {
  std::string out;
  for (size_t i = 0; i < C.levels.size(); ++i) {
    if (i) out += " | ";
    out += "{ ";
    for (size_t k = 0; k < C.levels[i].J.size(); ++k)
      out += (k ? ", " : "") + element_term(L, C.levels[i].J[k]);
    out += " ; ";
    for (size_t k = 0; k < C.levels[i].U.size(); ++k)
      out += (k ? ", " : "") + element_term(L, C.levels[i].U[k]);
    out += " }";
  }
  return out;
}

inline SingularCertificate cert_from_json(const CompRing& R,
                                          const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad certificate JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("a"))
    throw input_error("certificate JSON needs fields \"m\" and \"a\"");
  SingularCertificate c;
  try {
    for (const auto& v : j.at("m"))
      c.m.push_back(v.is_string()
                        ? (uint32_t)std::stoul(v.get<std::string>())
                        : v.get<uint32_t>());
    for (const auto& v : j.at("a"))
      c.a.push_back(v.is_string() ? parse_ring_elem(R, v.get<std::string>())
                                  : R.from_int(Int(v.get<int64_t>())));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad certificate JSON: ") + e.what());
  }
  return c;
}

inline LocalizedCertificate loc_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad localization JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("s") || !j.contains("m") ||
      !j.contains("a"))
    throw input_error("localization JSON needs fields \"s\", \"m\", \"a\"");
  LocalizedCertificate lc;
  try {
    lc.s = j.at("s").is_string() ? Int(j.at("s").get<std::string>())
                                 : Int(j.at("s").get<int64_t>());
    for (const auto& v : j.at("m"))
      lc.m.push_back(v.is_string()
                         ? (uint32_t)std::stoul(v.get<std::string>())
                         : v.get<uint32_t>());
    for (const auto& v : j.at("a"))
      lc.a.push_back(v.is_string() ? parse_rat(v.get<std::string>())
                                   : Rat(v.get<int64_t>()));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad localization JSON: ") + e.what());
  }
  return lc;
}

inline std::vector<Int> int_tuple(const std::string& text) {
  CompRing Z = CompRing::integers();
  std::vector<Int> out;
  for (const RingElem& e : parse_ring_elems(Z, text))
    out.push_back(std::get<Int>(e));
  return out;
}

}  // namespace detail

// Runs one command; `args` excludes the program name. All output that would
// go to stdout is returned in `output`.
inline CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream text;
  nlohmann::json doc;

  CLI::App app{"exact Krull dimension toolkit"};
  app.name("krull-kit");
  app.require_subcommand(0, 1);

  bool json_mode = false;
  uint64_t seed = 0;
  app.add_flag("--json", json_mode, "emit one JSON document");
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "seed echoed in the report");

  struct {
    std::string file, lattice, morphism, chain, ring, seq, lhs, rhs, emit,
        props, cert, table;
    std::vector<std::string> locs;
    int leq = 0, order = 1, cap = 8, max_k = -1, max_irr = 4;
    int max_elements = 1 << 16;
    uint32_t max_exp = 6, max_degree = 4;
  } o;

  auto add_file = [&](CLI::App* c, bool required) {
    CLI::Option* p = c->add_option("file", o.file, "session input file");
    if (required) p->required();
  };
  auto add_lattice = [&](CLI::App* c) {
    c->add_option("--lattice", o.lattice, "lattice name in the file");
    c->add_option("--max-elements", o.max_elements,
                  "element budget for lattice construction");
  };

  CLI::App* lat = app.add_subcommand("lat", "lattice commands");
  lat->require_subcommand(1);
  CLI::App* lat_dim = lat->add_subcommand("dim", "dimension of a lattice");
  add_file(lat_dim, true);
  add_lattice(lat_dim);
  CLI::Option* leq_opt =
      lat_dim->add_option("--leq", o.leq, "check dim <= this bound");
  CLI::App* lat_collapse =
      lat->add_subcommand("collapse", "does an idealistic chain collapse");
  add_file(lat_collapse, true);
  add_lattice(lat_collapse);
  lat_collapse->add_option("--chain", o.chain, "chain text")->required();
  CLI::App* lat_saturate =
      lat->add_subcommand("saturate", "saturate an idealistic chain");
  add_file(lat_saturate, true);
  add_lattice(lat_saturate);
  lat_saturate->add_option("--chain", o.chain, "chain text")->required();
  CLI::App* lat_kr =
      lat->add_subcommand("kr", "materialize the Krull lattice");
  add_file(lat_kr, true);
  add_lattice(lat_kr);
  lat_kr->add_option("--order", o.order, "chain length bound")->required();
  lat_kr->add_option("--emit", o.emit, "output form")
      ->check(CLI::IsMember({"json", "dot"}));
  lat_kr->add_option("--max-irr", o.max_irr,
                     "cap on base join-irreducibles");
  CLI::App* lat_spec =
      lat->add_subcommand("spec", "prime spectrum of a lattice");
  add_file(lat_spec, true);
  add_lattice(lat_spec);
  lat_spec->add_option("--emit", o.emit, "output form")
      ->check(CLI::IsMember({"json", "dot"}));
  CLI::App* lat_esp =
      lat->add_subcommand("espanol", "dimension via difference chains");
  add_file(lat_esp, true);
  add_lattice(lat_esp);

  CLI::App* morph = app.add_subcommand("morph", "morphism commands");
  morph->require_subcommand(1);
  CLI::App* morph_check =
      morph->add_subcommand("check", "lying over / going up / going down");
  add_file(morph_check, true);
  morph_check->add_option("--morphism", o.morphism, "morphism name");
  morph_check->add_option("--props", o.props,
                          "comma list from lyo,gu,gd (default all)");
  CLI::App* morph_reldim =
      morph->add_subcommand("reldim", "relative dimension of a morphism");
  add_file(morph_reldim, true);
  morph_reldim->add_option("--morphism", o.morphism, "morphism name");
  CLI::Option* rleq_opt =
      morph_reldim->add_option("--leq", o.leq, "check reldim <= this bound");
  morph_reldim->add_option("--max-k", o.max_k,
                           "witness pool bound (-1 = exact)");

  CLI::App* ring = app.add_subcommand("ring", "computable ring commands");
  ring->require_subcommand(1);
  auto add_ring = [&](CLI::App* c) {
    add_file(c, false);
    c->add_option("--ring", o.ring, "ring name in the file, or a ring spec");
    c->add_option("--max-elements", o.max_elements,
                  "element budget for session lattices");
  };
  CLI::App* ring_sing =
      ring->add_subcommand("singular", "is a sequence singular");
  add_ring(ring_sing);
  ring_sing->add_option("--seq", o.seq, "comma list of ring elements")
      ->required();
  CLI::App* ring_find =
      ring->add_subcommand("find-cert", "search a singularity certificate");
  add_ring(ring_find);
  ring_find->add_option("--seq", o.seq, "comma list of ring elements")
      ->required();
  ring_find->add_option("--max-exp", o.max_exp, "exponent search bound");
  ring_find->add_option("--max-degree", o.max_degree,
                        "cofactor degree search bound");
  CLI::App* ring_verify =
      ring->add_subcommand("verify-cert", "verify a singularity certificate");
  add_ring(ring_verify);
  ring_verify->add_option("--seq", o.seq, "comma list of ring elements")
      ->required();
  ring_verify
      ->add_option("--cert", o.cert,
                   "certificate JSON {\"m\":[..],\"a\":[..]}")
      ->required();
  CLI::App* ring_zar =
      ring->add_subcommand("zar-entails", "Zariski entailment U |- J");
  add_ring(ring_zar);
  ring_zar->add_option("--u", o.lhs, "comma list, left side")->required();
  ring_zar->add_option("--j", o.rhs, "comma list, right side")->required();
  CLI::App* ring_glue = ring->add_subcommand(
      "glue", "glue localized certificates over the integers");
  ring_glue->add_option("--seq", o.seq, "comma list of integers")->required();
  ring_glue
      ->add_option("--loc", o.locs,
                   "localized certificate JSON {\"s\":..,\"m\":[..],"
                   "\"a\":[..]}, repeatable")
      ->required();

  CLI::App* laws =
      app.add_subcommand("check-laws", "entailment law audit (R, M, T)");
  add_file(laws, false);
  add_lattice(laws);
  laws->add_option("--table", o.table,
                   "explicit sequent table \"a, b |- c; c |- a\"");
  laws->add_option("--cap", o.cap, "carrier size cap");

  for (CLI::App* c : app.get_subcommands(nullptr)) {
    c->fallthrough();
    for (CLI::App* cc : c->get_subcommands(nullptr)) cc->fallthrough();
  }

  std::vector<const char*> argv;
  argv.push_back("krull-kit");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    res.code = app.exit(e, out, err);
    res.output = out.str() + err.str();
    if (res.code != 0) res.code = kExitUsage;
    return res;
  }

  if (app.get_subcommands().empty()) {
    res.output = app.help();
    res.code = kExitUsage;
    return res;
  }

  auto finish = [&](int code) {
    if (seed_opt->count()) {
      doc["seed"] = seed;
      text << "seed = " << seed << "\n";
    }
    doc["code"] = code;
    res.code = code;
    res.output = json_mode ? doc.dump(2) + "\n" : text.str();
  };

  try {
    std::optional<Session> session;
    if (!o.file.empty())
      session = parse_session(detail::slurp(o.file), o.max_elements);

    if (*lat_dim) {
      const FinLattice& L = detail::pick_lattice(*session, o.lattice);
      doc["command"] = "lat dim";
      if (!leq_opt->count()) {
        int d = dim(L);
        text << "dim = " << d << "\n";
        doc["dim"] = d;
        finish(kExitHolds);
        return res;
      }
      DimOptions opt;
      opt.collect_witnesses = json_mode;
      DimCheck c = dim_leq(L, o.leq, opt);
      doc["leq"] = o.leq;
      doc["holds"] = c.holds;
      if (c.holds) {
        text << "dim <= " << o.leq << ": holds\n";
        if (json_mode) {
          nlohmann::json ws = nlohmann::json::array();
          for (const ComplementaryPair& w : c.witnesses)
            ws.push_back({{"xs", detail::tuple_json(L, w.xs)},
                          {"ys", detail::tuple_json(L, w.ys)}});
          doc["witnesses"] = ws;
          doc["witnesses_truncated"] = c.witnesses_truncated;
        }
        finish(kExitHolds);
        return res;
      }
      text << "dim <= " << o.leq << ": fails\n";
      text << "failing tuple: " << detail::tuple_str(L, *c.failing_tuple)
           << "\n";
      text << "no complementary sequence exists for this tuple\n";
      doc["failing_tuple"] = detail::tuple_json(L, *c.failing_tuple);
      doc["explanation"] = "no complementary sequence exists for this tuple";
      finish(kExitFails);
      return res;
    }

    if (*lat_collapse || *lat_saturate) {
      const FinLattice& L = detail::pick_lattice(*session, o.lattice);
      IdealisticChain C = parse_chain(L, o.chain);
      if (*lat_collapse) {
        doc["command"] = "lat collapse";
        std::optional<ChainWitness> w = chain_collapses(L, C);
        doc["collapses"] = w.has_value();
        text << "collapses: " << (w ? "true" : "false") << "\n";
        if (w) {
          text << "witness: " << detail::tuple_str(L, w->xs) << "\n";
          doc["witness"] = detail::tuple_json(L, w->xs);
        }
        finish(w ? kExitHolds : kExitFails);
        return res;
      }
      doc["command"] = "lat saturate";
      IdealisticChain S = saturate_chain(L, C);
      text << detail::chain_str(L, S) << "\n";
      nlohmann::json levels = nlohmann::json::array();
      for (const IdealisticPrime& lvl : S.levels)
        levels.push_back({{"J", detail::tuple_json(L, lvl.J)},
                          {"U", detail::tuple_json(L, lvl.U)}});
      doc["levels"] = levels;
      finish(kExitHolds);
      return res;
    }

    if (*lat_kr) {
      const FinLattice& L = detail::pick_lattice(*session, o.lattice);
      KrullCaps caps;
      caps.max_irr = o.max_irr;
      caps.max_order = o.order;
      caps.max_elements = o.max_elements;
      caps.max_generators = (o.order + 1) * std::max(o.max_irr, 1);
      KrullLattice K = kr_lattice(L, o.order, caps);
      doc["command"] = "lat kr";
      if (o.emit == "dot") {
        std::string d = emit_dot(K.materialized, "kr");
        text << d;
        doc["dot"] = d;
        finish(kExitHolds);
        return res;
      }
      doc["order"] = K.order;
      doc["elements"] = K.materialized.size();
      doc["irreducibles"] = K.materialized.base().size();
      nlohmann::json gens = nlohmann::json::array();
      const auto& gnames = K.materialized.generator_names();
      const int n = K.base.base().size();
      for (size_t g = 0; g < gnames.size(); ++g)
        gens.push_back({{"name", gnames[g]},
                        {"level", (int)g / std::max(n, 1)},
                        {"irr", K.base.irreducible_label((int)g % std::max(n, 1))}});
      doc["generators"] = gens;
      nlohmann::json phi = nlohmann::json::array();
      for (const std::vector<int>& row : K.phi) phi.push_back(row);
      doc["phi"] = phi;
      nlohmann::json base = nlohmann::json::array();
      for (int e = 0; e < K.base.size(); ++e)
        base.push_back(element_term(K.base, e));
      doc["base_elements"] = base;
      if (o.emit == "json") {
        res.code = kExitHolds;
        if (seed_opt->count()) doc["seed"] = seed;
        doc["code"] = res.code;
        res.output = doc.dump(2) + "\n";
        return res;
      }
      text << "order = " << K.order << "\n";
      text << "elements = " << K.materialized.size() << "\n";
      text << "irreducibles = " << K.materialized.base().size() << "\n";
      finish(kExitHolds);
      return res;
    }

    if (*lat_spec) {
      const FinLattice& L = detail::pick_lattice(*session, o.lattice);
      doc["command"] = "lat spec";
      const Poset& P = L.base();
      if (o.emit == "dot") {
        std::vector<std::string> labels;
        for (int p = 0; p < P.size(); ++p)
          labels.push_back(L.irreducible_label(p));
        std::string d = emit_poset_dot(P, labels, "spec");
        text << d;
        doc["dot"] = d;
        finish(kExitHolds);
        return res;
      }
      nlohmann::json pts = nlohmann::json::array();
      for (int p = 0; p < P.size(); ++p) pts.push_back(L.irreducible_label(p));
      nlohmann::json leq = nlohmann::json::array();
      for (int p = 0; p < P.size(); ++p)
        for (int q = 0; q < P.size(); ++q)
          if (p != q && P.leq(p, q)) leq.push_back({p, q});
      doc["points"] = pts;
      doc["leq"] = leq;
      text << "points:";
      for (int p = 0; p < P.size(); ++p)
        text << " " << L.irreducible_label(p);
      text << "\n";
      for (int p = 0; p < P.size(); ++p)
        for (int q = 0; q < P.size(); ++q)
          if (p != q && P.leq(p, q))
            text << L.irreducible_label(p) << " <= " << L.irreducible_label(q)
                 << "\n";
      if (o.emit == "json") {
        res.code = kExitHolds;
        doc["code"] = res.code;
        res.output = doc.dump(2) + "\n";
        return res;
      }
      finish(kExitHolds);
      return res;
    }

    if (*lat_esp) {
      const FinLattice& L = detail::pick_lattice(*session, o.lattice);
      doc["command"] = "lat espanol";
      int d = dim_espanol(L, o.max_elements);
      text << "dim = " << d << "\n";
      doc["dim"] = d;
      doc["method"] = "espanol";
      if (json_mode && d >= 0) {
        // a difference chain of maximal minimal length witnesses the value
        BooleanEnvelope B = boolean_envelope(L, o.max_elements);
        for (int e = 0; e < B.env.size(); ++e) {
          DifferenceChain dc = espanol_normal_form(B, L, e);
          if ((int)dc.as.size() == d + 1) {
            doc["witness"] = detail::tuple_json(L, dc.as);
            break;
          }
        }
      }
      finish(kExitHolds);
      return res;
    }

    if (*morph_check) {
      LatticeMorphism m = detail::pick_morphism(*session, o.morphism);
      doc["command"] = "morph check";
      std::vector<std::string> want;
      if (o.props.empty()) {
        want = {"lyo", "gu", "gd"};
      } else {
        std::string cur;
        for (char c : o.props + ",") {
          if (c == ',') {
            if (!cur.empty()) want.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
      }
      bool all = true;
      for (const std::string& p : want) {
        if (p == "lyo") {
          LyoResult r = is_lying_over(m);
          all = all && r.holds;
          doc["lyo"]["holds"] = r.holds;
          text << "lyo: " << (r.holds ? "holds" : "fails") << "\n";
          if (!r.holds) {
            auto [a, b] = *r.counterexample;
            text << "  merged pair: " << element_term(*m.dom, a) << ", "
                 << element_term(*m.dom, b) << "\n";
            doc["lyo"]["counterexample"] = {element_term(*m.dom, a),
                                            element_term(*m.dom, b)};
          }
        } else if (p == "gu" || p == "gd") {
          GugdResult r = p == "gu" ? is_going_up(m) : is_going_down(m);
          all = all && r.holds;
          doc[p]["holds"] = r.holds;
          text << p << ": " << (r.holds ? "holds" : "fails") << "\n";
          if (!r.holds) {
            auto [a, b, y] = *r.counterexample;
            text << "  at a = " << element_term(*m.dom, a)
                 << ", b = " << element_term(*m.dom, b)
                 << ", y = " << element_term(*m.cod, y) << "\n";
            doc[p]["counterexample"] = {{"a", element_term(*m.dom, a)},
                                        {"b", element_term(*m.dom, b)},
                                        {"y", element_term(*m.cod, y)}};
          }
        } else {
          throw input_error("unknown property: " + p +
                            " (expected lyo, gu, gd)");
        }
      }
      finish(all ? kExitHolds : kExitFails);
      return res;
    }

    if (*morph_reldim) {
      LatticeMorphism m = detail::pick_morphism(*session, o.morphism);
      doc["command"] = "morph reldim";
      if (rleq_opt->count()) {
        bool holds = relative_dim_leq(m, o.leq, o.max_k);
        doc["leq"] = o.leq;
        doc["holds"] = holds;
        text << "reldim <= " << o.leq << ": " << (holds ? "holds" : "fails")
             << "\n";
        finish(holds ? kExitHolds : kExitFails);
        return res;
      }
      int d = relative_dim(m, o.max_k);
      doc["reldim"] = d;
      text << "reldim = " << d << "\n";
      finish(kExitHolds);
      return res;
    }

    if (*ring_sing || *ring_find || *ring_verify || *ring_zar) {
      CompRing R = detail::pick_ring(session, o.ring);
      if (*ring_sing) {
        doc["command"] = "ring singular";
        std::vector<RingElem> xs = parse_ring_elems(R, o.seq);
        bool s = is_singular(R, xs);
        doc["singular"] = s;
        text << "singular: " << (s ? "true" : "false") << "\n";
        finish(s ? kExitHolds : kExitFails);
        return res;
      }
      if (*ring_find) {
        doc["command"] = "ring find-cert";
        std::vector<RingElem> xs = parse_ring_elems(R, o.seq);
        CertificateSearch cs =
            find_singular_certificate(R, xs, o.max_exp, o.max_degree);
        if (!cs.cert) {
          text << "no certificate with exponents <= " << cs.m_bound
               << " and cofactor degree <= " << cs.d_bound << "\n";
          doc["found"] = false;
          doc["m_bound"] = cs.m_bound;
          doc["d_bound"] = cs.d_bound;
          finish(kExitFails);
          return res;
        }
        bool ok = verify_singular_certificate(R, xs, *cs.cert);
        doc["found"] = true;
        doc["verified"] = ok;
        doc["m"] = cs.cert->m;
        nlohmann::json a = nlohmann::json::array();
        text << "m = (";
        for (size_t i = 0; i < cs.cert->m.size(); ++i)
          text << (i ? ", " : "") << cs.cert->m[i];
        text << ")\na = (";
        for (size_t i = 0; i < cs.cert->a.size(); ++i) {
          text << (i ? ", " : "") << R.str(cs.cert->a[i]);
          a.push_back(R.str(cs.cert->a[i]));
        }
        text << ")\nverified: " << (ok ? "true" : "false") << "\n";
        doc["a"] = a;
        finish(ok ? kExitHolds : kExitFails);
        return res;
      }
      if (*ring_verify) {
        doc["command"] = "ring verify-cert";
        std::vector<RingElem> xs = parse_ring_elems(R, o.seq);
        SingularCertificate c = detail::cert_from_json(R, o.cert);
        bool ok = verify_singular_certificate(R, xs, c);
        doc["verified"] = ok;
        text << "verified: " << (ok ? "true" : "false") << "\n";
        finish(ok ? kExitHolds : kExitFails);
        return res;
      }
      doc["command"] = "ring zar-entails";
      std::vector<RingElem> U = parse_ring_elems(R, o.lhs);
      std::vector<RingElem> J = parse_ring_elems(R, o.rhs);
      bool ok = zar_entails(R, U, J);
      doc["entails"] = ok;
      text << "entails: " << (ok ? "true" : "false") << "\n";
      finish(ok ? kExitHolds : kExitFails);
      return res;
    }

    if (*ring_glue) {
      doc["command"] = "ring glue";
      std::vector<Int> xs = detail::int_tuple(o.seq);
      std::vector<LocalizedCertificate> ls;
      for (const std::string& t : o.locs)
        ls.push_back(detail::loc_from_json(t));
      GlueResult g = glue_collapses(xs, ls);
      CompRing Z = CompRing::integers();
      std::vector<RingElem> exs(xs.begin(), xs.end());
      bool ok = verify_singular_certificate(Z, exs, g.cert);
      doc["verified"] = ok;
      doc["m"] = g.cert.m;
      nlohmann::json a = nlohmann::json::array(),
                     leads = nlohmann::json::array(),
                     part = nlohmann::json::array();
      text << "m = (";
      for (size_t i = 0; i < g.cert.m.size(); ++i)
        text << (i ? ", " : "") << g.cert.m[i];
      text << ")\na = (";
      for (size_t i = 0; i < g.cert.a.size(); ++i) {
        text << (i ? ", " : "") << Z.str(g.cert.a[i]);
        a.push_back(Z.str(g.cert.a[i]));
      }
      text << ")\nleads = (";
      for (size_t i = 0; i < g.leads.size(); ++i) {
        text << (i ? ", " : "") << g.leads[i].str();
        leads.push_back(g.leads[i].str());
      }
      text << ")\npartition = (";
      for (size_t i = 0; i < g.partition.size(); ++i) {
        text << (i ? ", " : "") << g.partition[i].str();
        part.push_back(g.partition[i].str());
      }
      text << ")\nverified: " << (ok ? "true" : "false") << "\n";
      doc["a"] = a;
      doc["leads"] = leads;
      doc["partition"] = part;
      finish(ok ? kExitHolds : kExitFails);
      return res;
    }

    if (*laws) {
      doc["command"] = "check-laws";
      LawReport rep;
      std::vector<std::string> names;
      if (!o.table.empty()) {
        SequentTable st = parse_sequent_table(o.table);
        names = st.names;
        rep = check_entailment_laws((int)st.names.size(), st.table, o.cap);
      } else if (session) {
        const FinLattice& L = detail::pick_lattice(*session, o.lattice);
        rep = check_entailment_laws(L, o.cap);
        // violations refer to irreducibles of L
        for (int p = 0; p < L.base().size(); ++p)
          names.push_back(L.irreducible_label(p));
      } else {
        throw input_error("pass a session file or --table");
      }
      doc["ok"] = rep.ok();
      doc["violations"] = rep.total_violations;
      if (rep.ok()) {
        text << "laws: ok\n";
        finish(kExitHolds);
        return res;
      }
      text << "laws: " << rep.total_violations << " violation(s)\n";
      nlohmann::json vs = nlohmann::json::array();
      auto nm = [&](int i) {
        return i < (int)names.size() ? names[i] : std::to_string(i);
      };
      for (const LawViolation& v : rep.violations) {
        text << "  " << v.law << ":";
        for (int g : v.at.lhs) text << " " << nm(g);
        text << " |-";
        for (int g : v.at.rhs) text << " " << nm(g);
        if (!v.extra.empty()) {
          text << "  (via";
          for (int g : v.extra) text << " " << nm(g);
          text << ")";
        }
        text << "\n";
        nlohmann::json lhs = nlohmann::json::array(),
                       rhs = nlohmann::json::array();
        for (int g : v.at.lhs) lhs.push_back(nm(g));
        for (int g : v.at.rhs) rhs.push_back(nm(g));
        vs.push_back({{"law", v.law}, {"lhs", lhs}, {"rhs", rhs}});
      }
      doc["examples"] = vs;
      finish(kExitFails);
      return res;
    }

    throw input_error("no command selected");
  } catch (const resource_error& e) {
    doc["error"] = e.what();
    text << "error: " << e.what() << "\n";
    finish(kExitResource);
    return res;
  } catch (const error& e) {
    doc["error"] = e.what();
    text << "error: " << e.what() << "\n";
    finish(kExitUsage);
    return res;
  }
}

}  // namespace krull
