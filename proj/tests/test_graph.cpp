#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"

using namespace leavitt;
using namespace leavitt::testing;

namespace {

  std::vector<std::string> ids(Graph const& g) {
    std::vector<std::string> out;
    for (auto const& e : g.edge_records()) {
      out.push_back(e.id + ":" + e.src + ">" + e.tgt);
    }
    return out;
  }

  std::set<std::string> sinks(Graph const& g) {
    std::set<std::string> out;
    for (auto const& v : g.vertices()) {
      if (is_sink(g, v)) {
        out.insert(v);
      }
    }
    return out;
  }

}  // namespace

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph({"a", "a"}, {}), GraphError);
  EXPECT_THROW(Graph({"a"}, {{"e", "a", "b"}}), GraphError);
  EXPECT_THROW(Graph({"a", "b"}, {{"e", "a", "b"}, {"e", "b", "a"}}), GraphError);
}

TEST(Graph, IsSink) {
  auto g = display7();
  EXPECT_TRUE(is_sink(g, "v2"));
  EXPECT_FALSE(is_sink(g, "v0"));
  EXPECT_FALSE(is_sink(g, "v1"));
  EXPECT_TRUE(is_sink(isolated_vertex(), "v"));
  EXPECT_THROW(is_sink(g, "nope"), GraphError);
}

TEST(Graph, ExtendedGraph) {
  auto g  = display7();
  auto ex = extended_graph(g);
  ASSERT_EQ(ex.ghost_edges().size(), 3u);
  index_type e2 = g.checked_edge("e2");
  EXPECT_EQ(ex.hat_source_ghost(e2), g.checked_vertex("v0"));
  EXPECT_EQ(ex.hat_target_ghost(e2), g.checked_vertex("v1"));
  index_type x0 = g.checked_edge("x0");
  EXPECT_EQ(ex.hat_source_ghost(x0), ex.hat_target_ghost(x0));

  EXPECT_TRUE(extended_graph(isolated_vertex()).ghost_edges().empty());
}

TEST(Graph, ExtendedGraphIsAnInvolutionOnEndpoints) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto g  = random_graph(rng, 1 + trial % 5, trial % 9);
    auto ex = extended_graph(g);
    for (index_type e = 0; e < g.number_of_edges(); ++e) {
      // The ghost of the ghost has the endpoints of the ghost reversed.
      EXPECT_EQ(ex.hat_target_ghost(e), ex.hat_source_edge(e));
      EXPECT_EQ(ex.hat_source_ghost(e), ex.hat_target_edge(e));
      EXPECT_EQ(ex.hat_source_edge(e), g.source(e));
      EXPECT_EQ(ex.hat_target_edge(e), g.target(e));
    }
  }
}

TEST(Graph, DeleteVertex) {
  auto q = delete_vertex(display7(), "v0");
  EXPECT_EQ(q.vertices(), (std::vector<std::string>{"v1", "v2"}));
  EXPECT_EQ(ids(q), (std::vector<std::string>{"e1:v1>v2"}));

  auto iso = Graph({"a", "b"}, {{"e", "a", "a"}});
  auto r   = delete_vertex(iso, "b");
  EXPECT_EQ(r.vertices(), (std::vector<std::string>{"a"}));
  EXPECT_EQ(r.number_of_edges(), 1u);

  auto q8 = delete_vertex(display8(), "v0");
  EXPECT_EQ(ids(q8), (std::vector<std::string>{"e1':v2>v1"}));
  EXPECT_TRUE(is_sink(q8, "v1"));

  EXPECT_THROW(delete_vertex(display7(), "zz"), GraphError);
}

TEST(Graph, DeleteVertexReportsDroppedOutgoingEdges) {
  auto g = Graph({"a", "b"}, {{"e", "a", "b"}, {"f", "b", "a"}});
  auto d = delete_vertex_detailed(g, "a");
  EXPECT_EQ(d.dropped_outgoing, (std::vector<std::string>{"e"}));
  EXPECT_EQ(d.graph.number_of_edges(), 0u);
  // On a trimmable graph the only edge leaving v0 is its loop, which also
  // ends at v0, so nothing extra is dropped.
  EXPECT_TRUE(delete_vertex_detailed(display7(), "v0").dropped_outgoing.empty());
}

TEST(Graph, DeleteEdge) {
  auto q = delete_edge(display7(), "x0");
  EXPECT_EQ(q.vertices().size(), 3u);
  EXPECT_TRUE(is_sink(q, "v0"));

  auto r = delete_edge(display7(), "e1");
  index_type v1 = r.checked_vertex("v1");
  ASSERT_EQ(r.out_edges(v1).size(), 1u);
  EXPECT_EQ(r.edge_id(r.out_edges(v1)[0]), "e2");

  auto two = delete_edge(Graph({"a", "b"}, {{"e", "a", "b"}}), "e");
  EXPECT_EQ(two.number_of_vertices(), 2u);
  EXPECT_EQ(two.number_of_edges(), 0u);
  EXPECT_THROW(delete_edge(display7(), "zz"), GraphError);
}

TEST(Graph, TrimmabilityGoldens) {
  auto r7 = is_trimmable(display7(), "v0");
  EXPECT_TRUE(r7.verdict);
  EXPECT_EQ(r7.loop, "x0");
  EXPECT_EQ(*r7.q_prime, delete_vertex(display7(), "v0"));
  EXPECT_EQ(*r7.q_double_prime, delete_edge(display7(), "x0"));

  auto r8 = is_trimmable(display8(), "v0");
  EXPECT_FALSE(r8.verdict);
  EXPECT_EQ(r8.failure, TrimFailure::new_sink);
  EXPECT_EQ(r8.witness, "v1");
  EXPECT_FALSE(r8.q_prime);

  auto lone = is_trimmable(Graph({"v0"}, {{"x0", "v0", "v0"}}), "v0");
  EXPECT_FALSE(lone.verdict);
  EXPECT_EQ(lone.failure, TrimFailure::no_entry);

  auto two_loops = Graph({"v0", "v1"}, {{"x0", "v0", "v0"},
                                         {"x1", "v0", "v0"},
                                         {"e", "v1", "v0"},
                                         {"f", "v1", "v1"}});
  EXPECT_EQ(is_trimmable(two_loops, "v0").failure, TrimFailure::loop_vertex);
  auto no_loop = Graph({"v0", "v1"}, {{"e", "v1", "v0"}, {"f", "v1", "v1"}});
  EXPECT_EQ(is_trimmable(no_loop, "v0").failure, TrimFailure::loop_vertex);
  EXPECT_THROW(is_trimmable(display7(), "zz"), GraphError);
}

TEST(Graph, TrimmingCreatesNoNewSinks) {
  std::mt19937_64 rng(11);
  int             accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng, 2 + trial % 4, 2 + trial % 7);
    for (auto const& v0 : g.vertices()) {
      auto r = is_trimmable(g, v0);
      if (!r.verdict) {
        continue;
      }
      ++accepted;
      // Sinks of Q' are sinks of Q (restricted to Q'_0).
      auto before = sinks(g);
      for (auto const& s : sinks(*r.q_prime)) {
        EXPECT_TRUE(before.count(s)) << s << " became a sink";
      }
    }
  }
  EXPECT_GT(accepted, 0);
}

TEST(Graph, TrimmabilityIsInvariantUnderRenaming) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_graph(rng, 2 + trial % 4, 1 + trial % 8);
    auto h = relabel(g, "n_");
    for (auto const& v0 : g.vertices()) {
      auto a = is_trimmable(g, v0);
      auto b = is_trimmable(h, "n_" + v0);
      EXPECT_EQ(a.verdict, b.verdict);
      EXPECT_EQ(a.failure, b.failure);
    }
  }
}

TEST(Graph, PathsUpTo) {
  auto g = display7();
  EXPECT_EQ(paths_up_to(g, 0).size(), 3u);
  EXPECT_EQ(paths_up_to(g, 1).size(), 6u);
  auto l2 = paths_up_to(g, 2);
  ASSERT_EQ(l2.size(), 8u);
  std::set<std::string> twos;
  for (auto const& p : l2) {
    if (p.length() == 2) {
      twos.insert(path_to_string(g, p));
    }
  }
  EXPECT_EQ(twos, (std::set<std::string>{"x0/x0", "e2/x0"}));
}

TEST(Graph, PathsAreMonotoneAndComposable) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(rng, 1 + trial % 4, trial % 6);
    for (std::size_t L = 0; L < 4; ++L) {
      auto a = paths_up_to(g, L);
      auto b = paths_up_to(g, L + 1);
      for (auto const& p : a) {
        EXPECT_TRUE(std::find(b.begin(), b.end(), p) != b.end());
      }
      for (auto const& p : b) {
        EXPECT_TRUE(is_composable(g, p));
        EXPECT_LE(p.length(), L + 1);
        EXPECT_EQ(p.length() == 0, p.is_vertex());
      }
      EXPECT_EQ(a, paths_up_to(g, L));  // deterministic
    }
  }
}

TEST(Graph, LoadsFixtureFiles) {
  EXPECT_EQ(load_graph(fixture("display7.json")), display7());
  EXPECT_EQ(load_graph(fixture("display8.json")), display8());
  EXPECT_EQ(load_graph(fixture("single-loop.json")), single_loop());
  EXPECT_EQ(graph_from_json(to_json(display8())), display8());
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices": ["a"]})")),
               MalformedInput);
  EXPECT_THROW(graph_from_json(json::parse(
                   R"({"vertices": ["a"], "edges": [{"id": "e", "src": "a", "tgt": "b"}]})")),
               MalformedInput);
}
