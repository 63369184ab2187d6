// Finite directed multigraphs, paths, and the trimmability predicate.
//
// Vertices and edges carry opaque string identifiers.  Internally both sets
// are kept sorted lexicographically by identifier, so an index into
// vertices() or edges() is a stable handle and index order coincides with
// identifier order.

#ifndef LEAVITT_GRAPH_HPP_
#define LEAVITT_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace leavitt {

  using index_type = std::uint32_t;

  class GraphError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  struct EdgeRecord {
    std::string id;
    std::string src;
    std::string tgt;

    friend bool operator==(EdgeRecord const&, EdgeRecord const&) = default;
  };

  class Graph {
   public:
    struct Edge {
      std::string id;
      index_type  src;
      index_type  tgt;

      friend bool operator==(Edge const&, Edge const&) = default;
    };

    Graph() = default;

    Graph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges) {
      std::sort(vertices.begin(), vertices.end());
      if (std::adjacent_find(vertices.begin(), vertices.end())
          != vertices.end()) {
        throw GraphError("duplicate vertex id \""
                         + *std::adjacent_find(vertices.begin(), vertices.end())
                         + "\"");
      }
      _vertices = std::move(vertices);
      for (index_type i = 0; i < _vertices.size(); ++i) {
        _vertex_index.emplace(_vertices[i], i);
      }

      std::sort(edges.begin(), edges.end(), [](auto const& a, auto const& b) {
        return a.id < b.id;
      });
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0 && edges[i].id == edges[i - 1].id) {
          throw GraphError("duplicate edge id \"" + edges[i].id + "\"");
        }
        auto s = vertex_index(edges[i].src);
        auto t = vertex_index(edges[i].tgt);
        if (!s || !t) {
          throw GraphError("edge \"" + edges[i].id
                           + "\" has an endpoint outside the vertex set");
        }
        _edges.push_back(Edge{edges[i].id, *s, *t});
        _edge_index.emplace(edges[i].id, static_cast<index_type>(i));
      }

      _out.resize(_vertices.size());
      _in.resize(_vertices.size());
      for (index_type e = 0; e < _edges.size(); ++e) {
        _out[_edges[e].src].push_back(e);
        _in[_edges[e].tgt].push_back(e);
      }
    }

    std::vector<std::string> const& vertices() const noexcept {
      return _vertices;
    }

    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

    std::size_t number_of_vertices() const noexcept {
      return _vertices.size();
    }

    std::size_t number_of_edges() const noexcept {
      return _edges.size();
    }

    std::optional<index_type> vertex_index(std::string const& id) const {
      auto it = _vertex_index.find(id);
      if (it == _vertex_index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::optional<index_type> edge_index(std::string const& id) const {
      auto it = _edge_index.find(id);
      if (it == _edge_index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    index_type checked_vertex(std::string const& id) const {
      auto v = vertex_index(id);
      if (!v) {
        throw GraphError("unknown vertex \"" + id + "\"");
      }
      return *v;
    }

    index_type checked_edge(std::string const& id) const {
      auto e = edge_index(id);
      if (!e) {
        throw GraphError("unknown edge \"" + id + "\"");
      }
      return *e;
    }

    std::string const& vertex_id(index_type v) const {
      return _vertices.at(v);
    }

    std::string const& edge_id(index_type e) const {
      return _edges.at(e).id;
    }

    index_type source(index_type e) const {
      return _edges.at(e).src;
    }

    index_type target(index_type e) const {
      return _edges.at(e).tgt;
    }

    // Edges emitted by v, in identifier order.
    std::vector<index_type> const& out_edges(index_type v) const {
      return _out.at(v);
    }

    // Edges ending at v, in identifier order.
    std::vector<index_type> const& in_edges(index_type v) const {
      return _in.at(v);
    }

    std::vector<EdgeRecord> edge_records() const {
      std::vector<EdgeRecord> out;
      out.reserve(_edges.size());
      for (auto const& e : _edges) {
        out.push_back({e.id, _vertices[e.src], _vertices[e.tgt]});
      }
      return out;
    }

    friend bool operator==(Graph const& a, Graph const& b) {
      return a._vertices == b._vertices && a._edges == b._edges;
    }

   private:
    std::vector<std::string>                       _vertices;
    std::vector<Edge>                              _edges;
    std::unordered_map<std::string, index_type>    _vertex_index;
    std::unordered_map<std::string, index_type>    _edge_index;
    std::vector<std::vector<index_type>>           _out;
    std::vector<std::vector<index_type>>           _in;
  };

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  // A finite path.  `start` is the source vertex; for a length-zero path it
  // is the vertex itself.  Consecutive edges are composable.
  struct Path {
    index_type              start = 0;
    std::vector<index_type> edges;

    std::size_t length() const noexcept {
      return edges.size();
    }

    bool is_vertex() const noexcept {
      return edges.empty();
    }

    index_type end(Graph const& g) const {
      return edges.empty() ? start : g.target(edges.back());
    }

    static Path vertex(index_type v) {
      return Path{v, {}};
    }

    static Path edge(Graph const& g, index_type e) {
      return Path{g.source(e), {e}};
    }

    friend bool operator==(Path const&, Path const&) = default;

    // Length first, then the edge sequence, then the base vertex.
    friend bool operator<(Path const& a, Path const& b) {
      if (a.edges.size() != b.edges.size()) {
        return a.edges.size() < b.edges.size();
      }
      return std::tie(a.edges, a.start) < std::tie(b.edges, b.start);
    }
  };

  inline bool is_composable(Graph const& g, Path const& p) {
    if (!p.edges.empty() && g.source(p.edges.front()) != p.start) {
      return false;
    }
    for (std::size_t i = 1; i < p.edges.size(); ++i) {
      if (g.target(p.edges[i - 1]) != g.source(p.edges[i])) {
        return false;
      }
    }
    return true;
  }

  inline std::string path_to_string(Graph const& g, Path const& p) {
    if (p.edges.empty()) {
      return "[" + g.vertex_id(p.start) + "]";
    }
    std::string out;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (i > 0) {
        out += '/';
      }
      out += g.edge_id(p.edges[i]);
    }
    return out;
  }

  // All paths of length at most max_length, ordered by length and then
  // lexicographically by edge identifiers (vertices by identifier).
  inline std::vector<Path> paths_up_to(Graph const& g, std::size_t max_length) {
    std::vector<Path> out;
    for (index_type v = 0; v < g.number_of_vertices(); ++v) {
      out.push_back(Path::vertex(v));
    }
    std::size_t layer_begin = 0;
    std::size_t layer_end   = out.size();
    for (std::size_t len = 1; len <= max_length; ++len) {
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        index_type end = out[i].end(g);
        for (index_type e : g.out_edges(end)) {
          Path p = out[i];
          p.edges.push_back(e);
          out.push_back(std::move(p));
        }
      }
      std::sort(out.begin() + layer_end, out.end());
      layer_begin = layer_end;
      layer_end   = out.size();
      if (layer_begin == layer_end) {
        break;
      }
    }
    return out;
  }

  // Paths of length at most max_length ending at v.
  inline std::vector<Path> paths_ending_at(Graph const& g,
                                           index_type   v,
                                           std::size_t  max_length) {
    std::vector<Path> out;
    for (auto& p : paths_up_to(g, max_length)) {
      if (p.end(g) == v) {
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural predicates and constructions
  ////////////////////////////////////////////////////////////////////////

  inline bool is_sink(Graph const& g, std::string const& v) {
    return g.out_edges(g.checked_vertex(v)).empty();
  }

  // The extended graph: one ghost edge x* per edge x, with reversed
  // endpoints.
  class ExtendedGraph {
   public:
    struct GhostEdge {
      index_type base;
      index_type src;
      index_type tgt;
    };

    explicit ExtendedGraph(Graph g) : _base(std::move(g)) {
      _ghosts.reserve(_base.number_of_edges());
      for (index_type e = 0; e < _base.number_of_edges(); ++e) {
        _ghosts.push_back({e, _base.target(e), _base.source(e)});
      }
    }

    Graph const& base() const noexcept {
      return _base;
    }

    std::vector<GhostEdge> const& ghost_edges() const noexcept {
      return _ghosts;
    }

    index_type hat_source_edge(index_type e) const {
      return _base.source(e);
    }

    index_type hat_target_edge(index_type e) const {
      return _base.target(e);
    }

    index_type hat_source_ghost(index_type e) const {
      return _ghosts.at(e).src;
    }

    index_type hat_target_ghost(index_type e) const {
      return _ghosts.at(e).tgt;
    }

   private:
    Graph                  _base;
    std::vector<GhostEdge> _ghosts;
  };

  inline ExtendedGraph extended_graph(Graph const& g) {
    return ExtendedGraph(g);
  }

  struct VertexDeletion {
    Graph graph;
    // Edges leaving the deleted vertex for another vertex.  Removing the
    // vertex leaves them without a source, so they are dropped as well.
    std::vector<std::string> dropped_outgoing;
  };

  inline VertexDeletion delete_vertex_detailed(Graph const&       g,
                                               std::string const& v) {
    index_type               vi = g.checked_vertex(v);
    std::vector<std::string> verts;
    for (auto const& w : g.vertices()) {
      if (w != v) {
        verts.push_back(w);
      }
    }
    VertexDeletion           out;
    std::vector<EdgeRecord>  kept;
    for (auto const& e : g.edges()) {
      if (e.tgt == vi) {
        continue;
      }
      if (e.src == vi) {
        out.dropped_outgoing.push_back(e.id);
        continue;
      }
      kept.push_back({e.id, g.vertex_id(e.src), g.vertex_id(e.tgt)});
    }
    out.graph = Graph(std::move(verts), std::move(kept));
    return out;
  }

  inline Graph delete_vertex(Graph const& g, std::string const& v) {
    return delete_vertex_detailed(g, v).graph;
  }

  inline Graph delete_edge(Graph const& g, std::string const& x) {
    g.checked_edge(x);
    std::vector<EdgeRecord> kept;
    for (auto const& rec : g.edge_records()) {
      if (rec.id != x) {
        kept.push_back(rec);
      }
    }
    return Graph(g.vertices(), std::move(kept));
  }

  ////////////////////////////////////////////////////////////////////////
  // Trimmability
  ////////////////////////////////////////////////////////////////////////

  enum class TrimFailure {
    none,
    // v0 must emit exactly one edge, and that edge must be a loop.
    loop_vertex,
    // Some edge other than the loop must end at v0.
    no_entry,
    // A vertex sending an edge into v0 emits nothing else, so deleting v0
    // would turn it into a sink.
    new_sink,
  };

  inline char const* to_string(TrimFailure f) {
    switch (f) {
      case TrimFailure::none:
        return "none";
      case TrimFailure::loop_vertex:
        return "loop-vertex";
      case TrimFailure::no_entry:
        return "no-entry";
      case TrimFailure::new_sink:
        return "new-sink";
    }
    return "unknown";
  }

  struct TrimmabilityReport {
    bool        verdict = false;
    TrimFailure failure = TrimFailure::none;
    // Offending vertex or edge id on failure.
    std::string witness;
    std::string message;
    // Populated when verdict is true.
    std::string          v0;
    std::string          loop;
    std::optional<Graph> q_prime;         // Q minus v0
    std::optional<Graph> q_double_prime;  // Q minus the loop at v0
  };

  inline TrimmabilityReport is_trimmable(Graph const& g, std::string const& v0) {
    index_type         v = g.checked_vertex(v0);
    TrimmabilityReport rep;
    rep.v0 = v0;

    auto const& out = g.out_edges(v);
    if (out.size() != 1 || g.target(out.front()) != v) {
      rep.failure = TrimFailure::loop_vertex;
      rep.witness = v0;
      rep.message = "vertex " + v0 + " emits " + std::to_string(out.size())
                    + " edge(s); exactly one loop is required";
      if (out.size() == 1) {
        rep.witness = g.edge_id(out.front());
        rep.message = "the only edge " + rep.witness + " emitted by " + v0
                      + " is not a loop";
      }
      return rep;
    }
    index_type loop = out.front();

    std::vector<index_type> entering;
    for (index_type e : g.in_edges(v)) {
      if (e != loop) {
        entering.push_back(e);
      }
    }
    if (entering.empty()) {
      rep.failure = TrimFailure::no_entry;
      rep.witness = v0;
      rep.message = "no edge other than " + g.edge_id(loop) + " ends at " + v0;
      return rep;
    }

    for (index_type e : entering) {
      index_type src      = g.source(e);
      bool       has_exit = std::any_of(
          g.out_edges(src).begin(), g.out_edges(src).end(),
          [&](index_type x) { return g.target(x) != v; });
      if (!has_exit) {
        rep.failure = TrimFailure::new_sink;
        rep.witness = g.vertex_id(src);
        rep.message = "every edge emitted by " + rep.witness + " ends at " + v0
                      + "; deleting " + v0 + " would create a new sink";
        return rep;
      }
    }

    rep.verdict        = true;
    rep.loop           = g.edge_id(loop);
    rep.q_prime        = delete_vertex(g, v0);
    rep.q_double_prime = delete_edge(g, rep.loop);
    return rep;
  }

}  // namespace leavitt

#endif  // LEAVITT_GRAPH_HPP_
