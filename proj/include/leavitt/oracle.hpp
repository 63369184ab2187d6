// Brute-force model of a Leavitt path algebra in a length window.
//
// The path algebra of the extended graph has the paths of the extended
// graph as a basis, so vertex absorption and annihilation of incomposable
// products hold by construction.  The remaining relations
//
//   x^* y - delta(x, y) t(x)          for edges x, y with s(x) = s(y)
//   sum_{s(x) = v} x x^* - v          for non-sink v
//
// are multiplied on both sides by paths, keeping every term within the
// window, and the span of all such instances is row-reduced exactly.  Two
// windowed words are equal in the algebra iff their difference lies in that
// span.  Nothing here shares code with the rewriting engine.

#ifndef LEAVITT_ORACLE_HPP_
#define LEAVITT_ORACLE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "scalar.hpp"

namespace leavitt {

  // A path in the extended graph.  Step 2e is the edge e, step 2e + 1 its
  // ghost.  A path with no steps is the vertex `start`.
  struct HatPath {
    index_type              start = 0;
    std::vector<index_type> steps;

    friend bool operator==(HatPath const&, HatPath const&) = default;

    friend bool operator<(HatPath const& a, HatPath const& b) {
      if (a.steps.size() != b.steps.size()) {
        return a.steps.size() < b.steps.size();
      }
      return std::tie(a.steps, a.start) < std::tie(b.steps, b.start);
    }
  };

  class WindowError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
  };

  template <typename K = Rational>
  class OracleModel {
   public:
    using vector_type = SparseVector<HatPath, K>;

    OracleModel(Graph g, std::size_t max_length)
        : _g(std::move(g)), _max(max_length) {
      if (_max < 2) {
        throw WindowError("oracle window must admit words of length 2");
      }
      enumerate_paths();
      build_relations();
    }

    Graph const& graph() const noexcept {
      return _g;
    }

    std::size_t max_length() const noexcept {
      return _max;
    }

    std::size_t number_of_paths() const noexcept {
      return _paths.size();
    }

    std::size_t relation_rank() const noexcept {
      return _relations.rank();
    }

    // Dimension of the window modulo the relations.
    std::size_t rank() const noexcept {
      return _paths.size() - _relations.rank();
    }

    // The word as an element of the path algebra: a single path or zero.
    vector_type coordinates(Word const& w) const {
      std::size_t len = 0;
      for (auto x : w) {
        len += x.kind == Generator::Kind::vertex ? 0 : 1;
      }
      if (len > _max) {
        throw WindowError("word of length " + std::to_string(len)
                          + " exceeds the oracle window "
                          + std::to_string(_max));
      }
      std::optional<HatPath> p;
      for (auto x : w) {
        index_type src = step_source(x);
        if (p && end(*p) != src) {
          return {};
        }
        if (!p) {
          p = HatPath{src, {}};
        }
        if (x.kind != Generator::Kind::vertex) {
          p->steps.push_back(step_of(x));
        }
      }
      if (!p) {
        return {};
      }
      return {{*p, K(1)}};
    }

    vector_type coordinates(std::vector<std::pair<Word, K>> const& comb) const {
      vector_type out;
      for (auto const& [w, c] : comb) {
        for (auto const& [p, d] : coordinates(w)) {
          vector_type term{{p, K(c * d)}};
          detail::axpy(out, K(-1), term);
        }
      }
      return out;
    }

    // Canonical representative modulo the relations.
    vector_type canonical(vector_type const& v) const {
      return _relations.reduce(v);
    }

    vector_type canonical(Word const& w) const {
      return canonical(coordinates(w));
    }

    bool equal(Word const& a, Word const& b) const {
      auto d = coordinates(a);
      detail::axpy(d, K(1), coordinates(b));
      return _relations.contains(d);
    }

    bool is_zero(Word const& a) const {
      return _relations.contains(coordinates(a));
    }

    // Rank of the span of the given vectors in the quotient.
    std::size_t quotient_rank(std::vector<vector_type> const& vs) const {
      Echelon<HatPath, K> e = _relations;
      std::size_t         r = 0;
      for (auto const& v : vs) {
        r += e.insert(v) ? 1 : 0;
      }
      return r;
    }

   private:
    index_type step_source(Generator x) const {
      switch (x.kind) {
        case Generator::Kind::vertex:
          return x.index;
        case Generator::Kind::edge:
          return _g.edges().at(x.index).src;
        case Generator::Kind::ghost:
          return _g.edges().at(x.index).tgt;
      }
      return 0;
    }

    static index_type step_of(Generator x) {
      return 2 * x.index + (x.kind == Generator::Kind::ghost ? 1 : 0);
    }

    index_type end(HatPath const& p) const {
      if (p.steps.empty()) {
        return p.start;
      }
      index_type s = p.steps.back();
      auto const& e = _g.edges().at(s / 2);
      return s % 2 == 0 ? e.tgt : e.src;
    }

    index_type step_source(index_type s) const {
      auto const& e = _g.edges().at(s / 2);
      return s % 2 == 0 ? e.src : e.tgt;
    }

    void enumerate_paths() {
      for (index_type v = 0; v < _g.number_of_vertices(); ++v) {
        _paths.push_back(HatPath{v, {}});
      }
      std::size_t begin = 0;
      for (std::size_t len = 1; len <= _max; ++len) {
        std::size_t stop = _paths.size();
        for (std::size_t i = begin; i < stop; ++i) {
          for (index_type s = 0; s < 2 * _g.number_of_edges(); ++s) {
            if (step_source(s) == end(_paths[i])) {
              HatPath p = _paths[i];
              p.steps.push_back(s);
              _paths.push_back(std::move(p));
            }
          }
        }
        begin = stop;
      }
    }

    HatPath concat(HatPath const& a, HatPath const& b) const {
      HatPath out = a;
      out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
      return out;
    }

    // Pads a relation "lhs - rhs" between vertex from and vertex to by every
    // pair of paths keeping all terms within the window.
    void pad_and_insert(std::vector<std::pair<HatPath, K>> const& rel,
                        index_type                                 from,
                        index_type                                 to,
                        std::size_t                                width) {
      for (auto const& p : _paths) {
        if (end(p) != from || p.steps.size() + width > _max) {
          continue;
        }
        for (auto const& q : _paths) {
          if (q.start != to || p.steps.size() + width + q.steps.size() > _max) {
            continue;
          }
          vector_type row;
          for (auto const& [mid, c] : rel) {
            vector_type term{{concat(concat(p, mid), q), c}};
            detail::axpy(row, K(-1), term);
          }
          _relations.insert(row);
        }
      }
    }

    void build_relations() {
      std::size_t ne = _g.number_of_edges();
      for (index_type x = 0; x < ne; ++x) {
        for (index_type y = 0; y < ne; ++y) {
          auto const& ex = _g.edges()[x];
          auto const& ey = _g.edges()[y];
          if (ex.src != ey.src) {
            continue;  // x^* y is already zero in the path algebra
          }
          std::vector<std::pair<HatPath, K>> rel;
          rel.push_back({HatPath{ex.tgt, {2 * x + 1, 2 * y}}, K(1)});
          if (x == y) {
            rel.push_back({HatPath{ex.tgt, {}}, K(-1)});
          }
          pad_and_insert(rel, ex.tgt, ey.tgt, 2);
        }
      }
      for (index_type v = 0; v < _g.number_of_vertices(); ++v) {
        std::vector<std::pair<HatPath, K>> rel;
        for (index_type e = 0; e < ne; ++e) {
          if (_g.edges()[e].src == v) {
            rel.push_back({HatPath{v, {2 * e, 2 * e + 1}}, K(1)});
          }
        }
        if (rel.empty()) {
          continue;
        }
        rel.push_back({HatPath{v, {}}, K(-1)});
        pad_and_insert(rel, v, v, 2);
      }
    }

    Graph                 _g;
    std::size_t           _max;
    std::vector<HatPath>  _paths;
    Echelon<HatPath, K>   _relations;
  };

  template <typename K = Rational>
  OracleModel<K> oracle_build(Graph const& g, std::size_t max_length) {
    return OracleModel<K>(g, max_length);
  }

  template <typename K>
  bool oracle_equal(OracleModel<K> const& m, Word const& a, Word const& b) {
    return m.equal(a, b);
  }

}  // namespace leavitt

#endif  // LEAVITT_ORACLE_HPP_
