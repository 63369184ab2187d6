// leavitt-cli: command-line front end for the leavitt library.
//
// Exit codes: 0 success, 2 graph not trimmable at v0, 3 a verification or
// validation check failed, 64 usage error, 65 malformed input file.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "leavitt.hpp"
#include "leavitt/io.hpp"

namespace {

  using namespace leavitt;
  namespace fs = std::filesystem;

  constexpr int kExitFailed   = 3;
  constexpr int kExitUsage    = 64;
  constexpr int kExitDataErr  = 65;

  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct Common {
    std::string   graph;
    std::string   format  = "text";
    std::string   special = "lexicographic";
    std::uint64_t seed    = 0;

    bool json() const {
      return format == "json";
    }

    SpecialEdgePolicy policy() const {
      return special == "rotated" ? SpecialEdgePolicy::rotated
                                  : SpecialEdgePolicy::lexicographic;
    }

    Graph load() const {
      if (graph.empty()) {
        throw UsageError("--graph is required");
      }
      return load_graph(graph);
    }
  };

  void print_graph(std::ostream& os, Graph const& g, std::string const& indent) {
    os << indent << "vertices:";
    for (auto const& v : g.vertices()) {
      os << ' ' << v;
    }
    os << '\n' << indent << "edges:";
    if (g.number_of_edges() == 0) {
      os << " (none)";
    }
    for (auto const& e : g.edge_records()) {
      os << ' ' << e.id << ':' << e.src << "->" << e.tgt;
    }
    os << '\n';
  }

  int check_trimmable(Common const& c, std::string const& v0) {
    Graph g   = c.load();
    auto  rep = is_trimmable(g, v0);
    if (c.json()) {
      std::cout << to_json(rep).dump(2) << '\n';
    } else if (rep.verdict) {
      std::cout << "trimmable at " << v0 << " (loop " << rep.loop << ")\n";
      std::cout << "Q' (Q minus " << v0 << "):\n";
      print_graph(std::cout, *rep.q_prime, "  ");
      std::cout << "Q'' (Q minus " << rep.loop << "):\n";
      print_graph(std::cout, *rep.q_double_prime, "  ");
    } else {
      std::cout << "not trimmable at " << v0 << ": " << to_string(rep.failure)
                << " at " << rep.witness << '\n'
                << "  " << rep.message << '\n';
    }
    return rep.verdict ? 0 : 2;
  }

  int normalize(Common const& c, std::string const& expr, bool random) {
    auto alg = make_algebra(c.load(), c.policy());
    std::vector<std::pair<Word, Rational>> comb;
    for (auto& t : parse_terms<Rational>(alg->graph, expr)) {
      if (t.exponent) {
        throw ParseError("tensor factors are not allowed here");
      }
      comb.emplace_back(std::move(t.word), t.coef);
    }
    RewriteOptions opts{random ? RewriteOrder::random : RewriteOrder::leftmost,
                        c.seed};
    RewriteStats stats;
    auto         nf = normal_form<Rational>(alg, comb, opts, &stats);
    if (c.json()) {
      json j{{"input", expr}, {"normal_form", to_string(nf)},
             {"steps", stats.steps}};
      json split = json::object();
      for (auto const& [d, part] : degree_split(nf)) {
        split[std::to_string(d)] = to_string(part);
      }
      j["degrees"] = split;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << to_string(nf) << '\n';
    }
    return 0;
  }

  int basis(Common const& c, std::size_t length) {
    auto alg = make_algebra(c.load(), c.policy());
    auto ms  = basis_monomials(*alg, length);
    if (c.json()) {
      json j{{"length", length}, {"count", ms.size()}, {"monomials", json::array()}};
      for (auto const& m : ms) {
        j["monomials"].push_back(
            {{"monomial", to_string(alg->graph, m)}, {"degree", m.degree()}});
      }
      std::cout << j.dump(2) << '\n';
    } else {
      for (auto const& m : ms) {
        std::cout << to_string(alg->graph, m) << '\n';
      }
      std::cout << "# " << ms.size() << " basis monomials of length <= "
                << length << '\n';
    }
    return 0;
  }

  int oracle_rank(Common const& c, std::size_t length) {
    Graph g      = c.load();
    auto  oracle = oracle_build<Rational>(g, length);
    auto  alg    = make_algebra(g, c.policy());
    auto  count  = basis_monomials(*alg, length).size();
    if (c.json()) {
      std::cout << json{{"length", length},
                        {"paths", oracle.number_of_paths()},
                        {"relation_rank", oracle.relation_rank()},
                        {"rank", oracle.rank()},
                        {"basis_monomials", count}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "oracle rank " << oracle.rank() << " (" << oracle.number_of_paths()
                << " paths, relation rank " << oracle.relation_rank() << ")\n"
                << "basis monomials " << count << '\n';
    }
    return oracle.rank() == count ? 0 : kExitFailed;
  }

  // Builds the map a descriptor names and reports or applies it.
  int apply_hom(Common const& c, std::string const& hom, std::string const& expr,
                bool allow_invalid) {
    auto d = load_descriptor(hom);
    if (d.base() != "pi1" && d.base() != "pi2" && d.base() != "f"
        && d.base() != "delta") {
      throw MalformedInput("unknown base map \"" + d.base() + "\"");
    }
    auto maps = standard_maps<Rational>(d.graph, d.v0, c.policy());
    if (d.kind == "custom") {
      maps = apply_overrides(maps, {d.override});
    }
    auto use = allow_invalid ? MapUse::allow_invalid : MapUse::validated_only;

    auto run = [&](auto const& h) {
      auto const& report = h.report();
      std::optional<std::string> image;
      if (!expr.empty() && (h.is_valid() || allow_invalid)) {
        auto a = parse_element<Rational>(h.domain(), expr);
        image  = to_string(apply(h, a, use));
      }
      if (c.json()) {
        json j{{"map", d.base()}, {"kind", d.kind}, {"validation", to_json(report)}};
        if (image) {
          j["input"] = expr;
          j["image"] = *image;
        }
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << d.base() << ": " << (h.is_valid() ? "valid" : "INVALID")
                  << (report.graded ? ", graded" : ", not graded")
                  << (report.vertex_images_nonzero ? ", nonzero on vertices"
                                                   : ", vanishes on " + report.zero_vertex)
                  << '\n';
        for (auto r : all_relations) {
          auto const& chk = report.at(r);
          if (!chk.ok) {
            std::cout << "  " << label(r) << " fails at " << chk.witness << ": "
                      << chk.instance << '\n';
          }
        }
        if (image) {
          std::cout << *image << '\n';
        }
      }
      if (!h.is_valid() && !expr.empty() && !allow_invalid) {
        std::cerr << "refusing to apply an invalid map (use --allow-invalid)\n";
      }
      return h.is_valid() && report.graded ? 0 : kExitFailed;
    };

    if (d.base() == "pi1") {
      return run(maps.pi1);
    }
    if (d.base() == "pi2") {
      return run(maps.pi2);
    }
    if (d.base() == "f") {
      return run(maps.f);
    }
    return run(maps.delta);
  }

  void print_check(std::ostream& os, char const* name, CheckResult const& r) {
    os << "  " << name << ": " << (r.ok ? "ok" : "FAIL");
    if (!r.ok && r.witness) {
      os << " (" << to_string(r.kind) << ", witness " << r.witness->text << ")";
    }
    os << '\n';
    for (auto const& d : r.degrees) {
      if (!d.ok) {
        os << "    degree " << d.degree << ": " << to_string(d.kind);
        if (d.witness) {
          os << ", witness " << d.witness->text;
        }
        os << '\n';
      }
    }
  }

  void print_property(std::ostream& os, char const* name, MapProperty const& p) {
    os << "  " << name << ": " << (p.ok ? "ok" : "FAIL");
    if (!p.ok && p.witness) {
      os << " (witness " << p.witness->text << ")";
    }
    os << '\n';
  }

  int verify_pullback(Common const& c, std::string v0, TruncationWindow w,
                      std::vector<std::string> const& homs, bool rerun,
                      bool timings) {
    std::optional<Graph> g;
    if (!c.graph.empty()) {
      g = c.load();
    }
    VerifyOptions opts;
    opts.policy        = c.policy();
    opts.rerun_rotated = rerun;
    for (auto const& path : homs) {
      auto d = load_descriptor(path);
      if (!g) {
        g = d.graph;
      } else if (!(*g == d.graph)) {
        throw MalformedInput(path + ": descriptor graph differs from --graph");
      }
      if (v0.empty()) {
        v0 = d.v0;
      } else if (v0 != d.v0) {
        throw MalformedInput(path + ": descriptor v0 differs from --v0");
      }
      if (d.kind == "custom") {
        opts.overrides.push_back(d.override);
      }
    }
    if (!g) {
      throw UsageError("--graph or --hom is required");
    }
    if (v0.empty()) {
      throw UsageError("--v0 is required");
    }
    try {
      w.validate();
    } catch (std::invalid_argument const& e) {
      throw UsageError(e.what());
    }

    auto rep  = verify_theorem<Rational>(*g, v0, w, opts);
    int  code = exit_code(rep);
    if (c.json()) {
      std::cout << to_json(rep, timings).dump(2) << '\n';
      return code;
    }
    std::cout << "window: L=" << w.length << " slack=" << w.slack
              << " D=" << w.degree << ", special edges " << to_string(rep.policy)
              << '\n';
    if (!rep.trimmable()) {
      std::cout << "not trimmable at " << v0 << ": "
                << to_string(rep.trimmability.failure) << " at "
                << rep.trimmability.witness << '\n';
      return code;
    }
    std::cout << "maps:\n";
    for (auto const& m : rep.maps) {
      std::cout << "  " << m.name << ": "
                << (m.report.relations_ok() ? "valid" : "INVALID")
                << (m.report.graded ? ", graded" : ", not graded");
      if (auto bad = m.report.first_failure()) {
        auto const& chk = m.report.at(*bad);
        std::cout << " (" << label(*bad) << " fails at " << chk.witness << ")";
      } else if (!m.report.graded) {
        std::cout << " (" << m.report.ungraded_generator << ")";
      }
      std::cout << '\n';
    }
    std::cout << "checks:\n";
    print_check(std::cout, "commutes", rep.commutes);
    print_check(std::cout, "con1", rep.con1);
    print_check(std::cout, "con2", rep.con2);
    print_check(std::cout, "con3", rep.con3);
    std::cout << "maps lemma:\n";
    print_property(std::cout, "pi1 surjective", rep.lemma.pi1_surjective);
    print_property(std::cout, "pi2 surjective", rep.lemma.pi2_surjective);
    print_property(std::cout, "f injective", rep.lemma.f_injective);
    print_property(std::cout, "delta injective", rep.lemma.delta_injective);
    std::cout << "  graded uniqueness: "
              << (rep.lemma.graded_uniqueness ? "ok" : "FAIL") << '\n';
    if (rep.rotated_consistent) {
      std::cout << "rotated special edges: "
                << (*rep.rotated_consistent ? "same verdicts" : "DIFFERENT verdicts")
                << '\n';
    }
    if (timings) {
      std::cout << "timings (ms):";
      for (auto const& [name, ms] : rep.timings_ms) {
        std::cout << ' ' << name << '=' << ms;
      }
      std::cout << '\n';
    }
    std::cout << (rep.ok() ? "PASS" : "FAIL") << '\n';
    return code;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leavitt path algebras of trimmable graphs"};
  app.require_subcommand(1);

  Common c;
  auto   common = [&](CLI::App* sub, bool graph_required) {
    auto* opt = sub->add_option("--graph", c.graph, "graph JSON file");
    if (graph_required) {
      opt->required();
    }
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--special", c.special, "special edge policy")
        ->check(CLI::IsMember({"lexicographic", "rotated"}));
    sub->add_option("--seed", c.seed, "seed for randomized rewriting");
  };

  std::string v0;
  std::string expr;
  std::size_t length = 4;
  TruncationWindow window;
  std::optional<std::size_t> slack;
  bool random = false;
  bool allow_invalid = false;
  bool no_rerun = false;
  bool no_timings = false;
  std::string hom;
  std::vector<std::string> homs;

  auto* trim = app.add_subcommand("check-trimmable", "test trimmability at a vertex");
  common(trim, true);
  trim->add_option("--v0", v0, "candidate loop vertex")->required();

  auto* norm = app.add_subcommand("normalize", "normal form of an expression");
  common(norm, true);
  norm->add_option("--expr", expr, "expression")->required();
  norm->add_flag("--random-order", random, "rewrite in random order (uses --seed)");

  auto* bas = app.add_subcommand("basis", "enumerate basis monomials");
  common(bas, true);
  bas->add_option("--length,-L", length, "maximum total length");

  auto* orc = app.add_subcommand("oracle-rank", "rank of the brute-force model");
  common(orc, true);
  orc->add_option("--length,-L", length, "window length (at least 2)");

  auto* ah = app.add_subcommand("apply-hom", "validate and apply a homomorphism");
  common(ah, false);
  ah->add_option("--hom", hom, "homomorphism descriptor JSON")->required();
  ah->add_option("--expr", expr, "element of the domain to map");
  ah->add_flag("--allow-invalid", allow_invalid, "apply even if validation fails");

  auto* vp = app.add_subcommand("verify-pullback", "windowed pullback verification");
  common(vp, false);
  vp->add_option("--v0", v0, "loop vertex");
  vp->add_option("--length,-L", window.length, "window length");
  vp->add_option("--slack", slack, "preimage length bound (default length + 2)");
  vp->add_option("--degree,-D", window.degree, "degree bound");
  vp->add_option("--hom", homs, "map descriptor overriding a standard map");
  vp->add_flag("--no-rotated", no_rerun, "skip the rerun with rotated special edges");
  vp->add_flag("--no-timings", no_timings, "omit timings for stable output");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (trim->parsed()) {
      return check_trimmable(c, v0);
    }
    if (norm->parsed()) {
      return normalize(c, expr, random);
    }
    if (bas->parsed()) {
      return basis(c, length);
    }
    if (orc->parsed()) {
      if (length < 2) {
        throw UsageError("oracle window must be at least 2");
      }
      return oracle_rank(c, length);
    }
    if (ah->parsed()) {
      return apply_hom(c, hom, expr, allow_invalid);
    }
    window.slack = slack.value_or(window.length + 2);
    return verify_pullback(c, v0, window, homs, !no_rerun, !no_timings);
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (ParseError const& e) {
    std::cerr << "expression error: " << e.what() << '\n';
    return kExitUsage;
  } catch (MalformedInput const& e) {
    std::cerr << e.what() << '\n';
    return kExitDataErr;
  } catch (GraphError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (NotTrimmable const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
