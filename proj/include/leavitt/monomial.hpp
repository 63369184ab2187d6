// Generators of the extended graph, words over them, and canonical
// monomials alpha beta^*.

#ifndef LEAVITT_MONOMIAL_HPP_
#define LEAVITT_MONOMIAL_HPP_

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "graph.hpp"

namespace leavitt {

  struct Generator {
    enum class Kind : std::uint8_t { vertex, edge, ghost };

    Kind       kind  = Kind::vertex;
    index_type index = 0;

    static Generator vertex(index_type v) {
      return {Kind::vertex, v};
    }
    static Generator edge(index_type e) {
      return {Kind::edge, e};
    }
    static Generator ghost(index_type e) {
      return {Kind::ghost, e};
    }

    int degree() const noexcept {
      switch (kind) {
        case Kind::vertex:
          return 0;
        case Kind::edge:
          return 1;
        case Kind::ghost:
          return -1;
      }
      return 0;
    }

    // Source and target in the extended graph.
    index_type hat_source(Graph const& g) const {
      switch (kind) {
        case Kind::vertex:
          return index;
        case Kind::edge:
          return g.source(index);
        case Kind::ghost:
          return g.target(index);
      }
      return index;
    }

    index_type hat_target(Graph const& g) const {
      switch (kind) {
        case Kind::vertex:
          return index;
        case Kind::edge:
          return g.target(index);
        case Kind::ghost:
          return g.source(index);
      }
      return index;
    }

    friend bool operator==(Generator const&, Generator const&) = default;
    friend auto operator<=>(Generator const&, Generator const&) = default;
  };

  using Word = std::vector<Generator>;

  inline std::string to_string(Graph const& g, Generator x) {
    switch (x.kind) {
      case Generator::Kind::vertex:
        return "[" + g.vertex_id(x.index) + "]";
      case Generator::Kind::edge:
        return g.edge_id(x.index);
      case Generator::Kind::ghost:
        return g.edge_id(x.index) + "*";
    }
    return "?";
  }

  inline std::string to_string(Graph const& g, Word const& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += " . ";
      }
      out += to_string(g, w[i]);
    }
    return out;
  }

  // Every generator of the extended graph: vertices, then edges, then ghost
  // edges, each in identifier order.
  inline std::vector<Generator> all_generators(Graph const& g) {
    std::vector<Generator> out;
    for (index_type v = 0; v < g.number_of_vertices(); ++v) {
      out.push_back(Generator::vertex(v));
    }
    for (index_type e = 0; e < g.number_of_edges(); ++e) {
      out.push_back(Generator::edge(e));
    }
    for (index_type e = 0; e < g.number_of_edges(); ++e) {
      out.push_back(Generator::ghost(e));
    }
    return out;
  }

  // The word alpha beta^*: a real path followed by a ghost path, both ending
  // at the same vertex.  With both parts of length zero it is that vertex.
  struct Monomial {
    Path real;
    Path ghost;

    int degree() const noexcept {
      return static_cast<int>(real.length()) - static_cast<int>(ghost.length());
    }

    std::size_t length() const noexcept {
      return real.length() + ghost.length();
    }

    static Monomial vertex(index_type v) {
      return {Path::vertex(v), Path::vertex(v)};
    }

    Word word() const {
      if (real.is_vertex() && ghost.is_vertex()) {
        return {Generator::vertex(real.start)};
      }
      Word w;
      w.reserve(length());
      for (index_type e : real.edges) {
        w.push_back(Generator::edge(e));
      }
      for (auto it = ghost.edges.rbegin(); it != ghost.edges.rend(); ++it) {
        w.push_back(Generator::ghost(*it));
      }
      return w;
    }

    friend bool operator==(Monomial const&, Monomial const&) = default;

    // Degree, then total length, then the real and ghost parts.
    friend bool operator<(Monomial const& a, Monomial const& b) {
      int da = a.degree();
      int db = b.degree();
      if (da != db) {
        return da < db;
      }
      if (a.length() != b.length()) {
        return a.length() < b.length();
      }
      if (!(a.real == b.real)) {
        return a.real < b.real;
      }
      return a.ghost < b.ghost;
    }
  };

  // Text form: "[v]" for a vertex, "a/b" for a real path, "a/b^*" for the
  // ghost of the path a/b, and "alpha . beta^*" when both are present.
  inline std::string to_string(Graph const& g, Monomial const& m) {
    if (m.real.is_vertex() && m.ghost.is_vertex()) {
      return "[" + g.vertex_id(m.real.start) + "]";
    }
    if (m.ghost.is_vertex()) {
      return path_to_string(g, m.real);
    }
    if (m.real.is_vertex()) {
      return path_to_string(g, m.ghost) + "^*";
    }
    return path_to_string(g, m.real) + " . " + path_to_string(g, m.ghost)
           + "^*";
  }

}  // namespace leavitt

#endif  // LEAVITT_MONOMIAL_HPP_
