// The algebra context shared by elements: a graph together with a choice of
// special edge at every non-sink vertex.  The special edge orients the
// Cuntz-Krieger rewrite and fixes the monomial basis.

#ifndef LEAVITT_ALGEBRA_HPP_
#define LEAVITT_ALGEBRA_HPP_

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "monomial.hpp"

namespace leavitt {

  enum class SpecialEdgePolicy {
    // Smallest outgoing edge id.
    lexicographic,
    // Second smallest outgoing edge id where a vertex emits two or more
    // edges, smallest otherwise.
    rotated,
  };

  inline char const* to_string(SpecialEdgePolicy p) {
    return p == SpecialEdgePolicy::lexicographic ? "lexicographic" : "rotated";
  }

  class SpecialEdgeChoice {
   public:
    SpecialEdgeChoice() = default;

    SpecialEdgeChoice(Graph const& g, SpecialEdgePolicy policy)
        : _choice(g.number_of_vertices()) {
      for (index_type v = 0; v < g.number_of_vertices(); ++v) {
        auto const& out = g.out_edges(v);
        if (out.empty()) {
          continue;
        }
        bool rotate = policy == SpecialEdgePolicy::rotated && out.size() > 1;
        _choice[v]  = out[rotate ? 1 : 0];
      }
    }

    // Explicit choice by id; every non-sink vertex must be covered.
    SpecialEdgeChoice(Graph const&                              g,
                      std::map<std::string, std::string> const& by_id)
        : _choice(g.number_of_vertices()) {
      for (auto const& [v, e] : by_id) {
        index_type vi = g.checked_vertex(v);
        index_type ei = g.checked_edge(e);
        if (g.source(ei) != vi) {
          throw GraphError("special edge " + e + " does not start at " + v);
        }
        _choice[vi] = ei;
      }
      for (index_type v = 0; v < g.number_of_vertices(); ++v) {
        if (!g.out_edges(v).empty() && !_choice[v]) {
          throw GraphError("no special edge chosen at vertex "
                           + g.vertex_id(v));
        }
      }
    }

    std::optional<index_type> at(index_type v) const {
      return _choice.at(v);
    }

    bool is_special(Graph const& g, index_type e) const {
      auto c = _choice.at(g.source(e));
      return c && *c == e;
    }

    friend bool operator==(SpecialEdgeChoice const&, SpecialEdgeChoice const&)
        = default;

   private:
    std::vector<std::optional<index_type>> _choice;
  };

  struct LeavittAlgebra {
    Graph             graph;
    SpecialEdgeChoice special;

    friend bool operator==(LeavittAlgebra const&, LeavittAlgebra const&)
        = default;
  };

  using AlgebraPtr = std::shared_ptr<LeavittAlgebra const>;

  inline AlgebraPtr
  make_algebra(Graph g, SpecialEdgePolicy p = SpecialEdgePolicy::lexicographic) {
    SpecialEdgeChoice sec(g, p);
    return std::make_shared<LeavittAlgebra const>(
        LeavittAlgebra{std::move(g), std::move(sec)});
  }

  inline AlgebraPtr make_algebra(Graph g, SpecialEdgeChoice sec) {
    return std::make_shared<LeavittAlgebra const>(
        LeavittAlgebra{std::move(g), std::move(sec)});
  }

  inline bool same_algebra(AlgebraPtr const& a, AlgebraPtr const& b) {
    return a == b || (a && b && *a == *b);
  }

  // alpha beta^* is a basis monomial unless both parts end in the same edge
  // and that edge is special at its source.
  inline bool is_basis_monomial(LeavittAlgebra const& alg, Monomial const& m) {
    Graph const& g = alg.graph;
    if (m.real.end(g) != m.ghost.end(g)) {
      return false;
    }
    if (m.real.is_vertex() || m.ghost.is_vertex()) {
      return true;
    }
    index_type a = m.real.edges.back();
    index_type b = m.ghost.edges.back();
    return !(a == b && alg.special.is_special(g, a));
  }

  // Basis monomials with total length at most max_length, in monomial order.
  inline std::vector<Monomial> basis_monomials(LeavittAlgebra const& alg,
                                               std::size_t max_length) {
    Graph const&          g     = alg.graph;
    auto                  paths = paths_up_to(g, max_length);
    std::vector<Monomial> out;
    for (auto const& a : paths) {
      for (auto const& b : paths) {
        if (a.length() + b.length() > max_length) {
          continue;
        }
        Monomial m{a, b};
        if (a.is_vertex() && b.is_vertex() && !(a.start == b.start)) {
          continue;
        }
        if (is_basis_monomial(alg, m)) {
          out.push_back(std::move(m));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace leavitt

#endif  // LEAVITT_ALGEBRA_HPP_
