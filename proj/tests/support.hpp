// Shared fixtures and generators for the test suites.
#ifndef LEAVITT_TESTS_SUPPORT_HPP_
#define LEAVITT_TESTS_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "leavitt.hpp"
#include "leavitt/io.hpp"

namespace leavitt::testing {

  inline std::string fixture(std::string const& name) {
    return std::string(LEAVITT_FIXTURES) + "/" + name;
  }

  inline Graph display7() {
    return Graph({"v0", "v1", "v2"},
                 {{"x0", "v0", "v0"}, {"e1", "v1", "v2"}, {"e2", "v1", "v0"}});
  }

  inline Graph display8() {
    return Graph({"v0", "v1", "v2"},
                 {{"x0", "v0", "v0"}, {"e1'", "v2", "v1"}, {"e2'", "v1", "v0"}});
  }

  inline Graph single_loop() {
    return Graph({"v"}, {{"x", "v", "v"}});
  }

  inline Graph isolated_vertex() {
    return Graph({"v"}, {});
  }

  inline Graph display7_prime() {
    return *is_trimmable(display7(), "v0").q_prime;
  }

  inline Graph display7_double_prime() {
    return *is_trimmable(display7(), "v0").q_double_prime;
  }

  struct NamedGraph {
    std::string name;
    Graph       graph;
  };

  // The fixture family used by the equivalence and relation suites.
  inline std::vector<NamedGraph> fixture_graphs() {
    return {{"display7", display7()},
            {"display7'", display7_prime()},
            {"display7''", display7_double_prime()},
            {"single-loop", single_loop()}};
  }

  // Uniform random word over the extended-graph generators, composable or
  // not.  Incomposable words exercise the annihilation rules.
  inline Word random_word(Graph const& g, std::mt19937_64& rng, std::size_t max_len) {
    auto gens = all_generators(g);
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    Word w(len(rng));
    for (auto& x : w) {
      x = gens[pick(rng)];
    }
    return w;
  }

  // Random word that is a path in the extended graph, so that it is nonzero
  // in the path algebra.  Optional vertex letters are sprinkled in.
  inline Word random_path_word(Graph const& g, std::mt19937_64& rng,
                               std::size_t max_edges) {
    std::uniform_int_distribution<index_type> start(0, g.number_of_vertices() - 1);
    std::uniform_int_distribution<std::size_t> len(0, max_edges);
    std::bernoulli_distribution vertex_letter(0.15);
    index_type at = start(rng);
    Word       w{Generator::vertex(at)};
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Generator> next;
      for (index_type e = 0; e < g.number_of_edges(); ++e) {
        if (g.source(e) == at) {
          next.push_back(Generator::edge(e));
        }
        if (g.target(e) == at) {
          next.push_back(Generator::ghost(e));
        }
      }
      if (next.empty()) {
        break;
      }
      Generator x = next[std::uniform_int_distribution<std::size_t>(
          0, next.size() - 1)(rng)];
      w.push_back(x);
      at = x.hat_target(g);
      if (vertex_letter(rng)) {
        w.push_back(Generator::vertex(at));
      }
    }
    return w;
  }

  inline std::size_t edge_length(Word const& w) {
    std::size_t n = 0;
    for (auto x : w) {
      n += x.kind == Generator::Kind::vertex ? 0 : 1;
    }
    return n;
  }

  // Renames every vertex and edge id by a fixed bijection.
  inline Graph relabel(Graph const& g, std::string const& prefix) {
    std::vector<std::string> vs;
    for (auto const& v : g.vertices()) {
      vs.push_back(prefix + v);
    }
    std::vector<EdgeRecord> es;
    for (auto const& e : g.edge_records()) {
      es.push_back({prefix + e.id, prefix + e.src, prefix + e.tgt});
    }
    return Graph(vs, es);
  }

  // Random multigraph with named vertices q0.. and edges a0..
  inline Graph random_graph(std::mt19937_64& rng, std::size_t nv, std::size_t ne) {
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < nv; ++i) {
      vs.push_back("q" + std::to_string(i));
    }
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    std::vector<EdgeRecord> es;
    for (std::size_t i = 0; i < ne; ++i) {
      es.push_back({"a" + std::to_string(i), vs[pick(rng)], vs[pick(rng)]});
    }
    return Graph(vs, es);
  }

  // Random trimmable graph: a random graph Q' with no sinks, plus v0 with a
  // loop and at least one edge from Q' into v0.
  inline Graph random_trimmable(std::mt19937_64& rng, std::size_t nv,
                                std::size_t extra_edges, std::size_t into_v0) {
    std::vector<std::string> vs{"v0"};
    for (std::size_t i = 0; i < nv; ++i) {
      vs.push_back("q" + std::to_string(i));
    }
    std::uniform_int_distribution<std::size_t> pick(1, nv);
    std::vector<EdgeRecord> es{{"x0", "v0", "v0"}};
    std::size_t             k = 0;
    for (std::size_t i = 1; i <= nv; ++i) {
      es.push_back({"a" + std::to_string(k++), vs[i], vs[pick(rng)]});
    }
    for (std::size_t i = 0; i < extra_edges; ++i) {
      es.push_back({"a" + std::to_string(k++), vs[pick(rng)], vs[pick(rng)]});
    }
    for (std::size_t i = 0; i < into_v0; ++i) {
      es.push_back({"a" + std::to_string(k++), vs[pick(rng)], "v0"});
    }
    return Graph(vs, es);
  }

}  // namespace leavitt::testing

#endif  // LEAVITT_TESTS_SUPPORT_HPP_
