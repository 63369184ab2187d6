// Normal forms in the Leavitt path algebra by word rewriting.
//
// A linear combination of generator words is rewritten with three families
// of rules until every word has the shape alpha beta^* with no special
// junction gamma gamma^*:
//
//   (i)   adjacent generators that are not composable in the extended graph
//         annihilate the word; a vertex next to a composable generator is
//         absorbed;
//   (ii)  x^* y -> 0 for x != y, and x^* x -> t(x);
//   (iii) gamma gamma^* -> v - sum of e e^* over the other edges e leaving
//         v = s(gamma), where gamma is the special edge at v.
//
// Rules (i) and (ii) shorten the word.  Rule (iii) keeps the length but
// removes one special junction without creating another, so rewriting
// terminates whatever the order of application.

#ifndef LEAVITT_REWRITE_HPP_
#define LEAVITT_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "element.hpp"
#include "monomial.hpp"

namespace leavitt {

  enum class RewriteOrder {
    // Always the first redex of the most recently produced word.
    leftmost,
    // A uniformly random redex of a uniformly random pending word.
    random,
  };

  struct RewriteOptions {
    RewriteOrder  order = RewriteOrder::leftmost;
    std::uint64_t seed  = 0;
  };

  struct RewriteStats {
    std::size_t steps = 0;
  };

  namespace detail {

    enum class RedexKind : std::uint8_t {
      annihilate,
      absorb_left,   // drop w[i], a vertex
      absorb_right,  // drop w[i+1], a vertex
      ghost_real,
      special,
    };

    struct Redex {
      std::size_t pos;
      RedexKind   kind;
    };

    inline std::optional<RedexKind>
    redex_at(LeavittAlgebra const& alg, Word const& w, std::size_t i) {
      Graph const& g = alg.graph;
      Generator    a = w[i];
      Generator    b = w[i + 1];
      if (a.hat_target(g) != b.hat_source(g)) {
        return RedexKind::annihilate;
      }
      if (a.kind == Generator::Kind::vertex) {
        return RedexKind::absorb_left;
      }
      if (b.kind == Generator::Kind::vertex) {
        return RedexKind::absorb_right;
      }
      if (a.kind == Generator::Kind::ghost && b.kind == Generator::Kind::edge) {
        return RedexKind::ghost_real;
      }
      if (a.kind == Generator::Kind::edge && b.kind == Generator::Kind::ghost
          && a.index == b.index && alg.special.is_special(g, a.index)) {
        return RedexKind::special;
      }
      return std::nullopt;
    }

    inline std::vector<Redex> all_redexes(LeavittAlgebra const& alg,
                                          Word const&           w) {
      std::vector<Redex> out;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (auto k = redex_at(alg, w, i)) {
          out.push_back({i, *k});
        }
      }
      return out;
    }

    inline std::optional<Redex> first_redex(LeavittAlgebra const& alg,
                                            Word const&           w) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (auto k = redex_at(alg, w, i)) {
          return Redex{i, *k};
        }
      }
      return std::nullopt;
    }

    inline Word splice(Word const& w, std::size_t pos, Word const& middle) {
      Word out;
      out.reserve(w.size() + middle.size());
      out.insert(out.end(), w.begin(), w.begin() + pos);
      out.insert(out.end(), middle.begin(), middle.end());
      out.insert(out.end(), w.begin() + pos + 2, w.end());
      return out;
    }

    // Applies one redex; pushes the resulting (word, coefficient) pairs.
    template <typename K, typename Sink>
    void apply_redex(LeavittAlgebra const& alg,
                     Word const&           w,
                     K const&              coef,
                     Redex                 r,
                     Sink&&                push) {
      Graph const& g = alg.graph;
      Generator    a = w[r.pos];
      Generator    b = w[r.pos + 1];
      switch (r.kind) {
        case RedexKind::annihilate:
          return;
        case RedexKind::absorb_left:
          push(splice(w, r.pos, {b}), coef);
          return;
        case RedexKind::absorb_right:
          push(splice(w, r.pos, {a}), coef);
          return;
        case RedexKind::ghost_real:
          if (a.index == b.index) {
            push(splice(w, r.pos, {Generator::vertex(g.target(a.index))}),
                 coef);
          }
          return;
        case RedexKind::special: {
          index_type v = g.source(a.index);
          push(splice(w, r.pos, {Generator::vertex(v)}), coef);
          for (index_type e : g.out_edges(v)) {
            if (e != a.index) {
              push(splice(w, r.pos, {Generator::edge(e), Generator::ghost(e)}),
                   K(-coef));
            }
          }
          return;
        }
      }
    }

    // An irreducible word is a single vertex or edges followed by ghosts.
    inline Monomial irreducible_to_monomial(Graph const& g, Word const& w) {
      if (w.size() == 1 && w.front().kind == Generator::Kind::vertex) {
        return Monomial::vertex(w.front().index);
      }
      Monomial    m;
      std::size_t split = 0;
      while (split < w.size() && w[split].kind == Generator::Kind::edge) {
        m.real.edges.push_back(w[split].index);
        ++split;
      }
      for (std::size_t i = w.size(); i > split; --i) {
        m.ghost.edges.push_back(w[i - 1].index);
      }
      index_type junction = split > 0 ? g.target(w[split - 1].index)
                                      : w.front().hat_source(g);
      m.real.start = m.real.edges.empty() ? junction
                                          : g.source(m.real.edges.front());
      m.ghost.start = m.ghost.edges.empty() ? junction
                                            : g.source(m.ghost.edges.front());
      return m;
    }

    inline void check_word(Graph const& g, Word const& w) {
      if (w.empty()) {
        throw std::invalid_argument("empty word");
      }
      for (auto x : w) {
        std::size_t bound = x.kind == Generator::Kind::vertex
                                ? g.number_of_vertices()
                                : g.number_of_edges();
        if (x.index >= bound) {
          throw GraphError("generator outside the extended graph");
        }
      }
    }

  }  // namespace detail

  // Normal form of a linear combination of words.
  template <typename K>
  Element<K> normal_form(AlgebraPtr const&                      alg,
                         std::vector<std::pair<Word, K>> const& combination,
                         RewriteOptions                         opts  = {},
                         RewriteStats*                          stats = nullptr) {
    Element<K>                      out(alg);
    std::vector<std::pair<Word, K>> pending;
    for (auto const& [w, c] : combination) {
      detail::check_word(alg->graph, w);
      if (!is_zero(c)) {
        pending.emplace_back(w, c);
      }
    }
    std::mt19937_64 rng(opts.seed);
    std::size_t     steps = 0;
    auto push = [&](Word w, K c) { pending.emplace_back(std::move(w), c); };

    while (!pending.empty()) {
      std::size_t pick = pending.size() - 1;
      if (opts.order == RewriteOrder::random) {
        pick = std::uniform_int_distribution<std::size_t>(
            0, pending.size() - 1)(rng);
        std::swap(pending[pick], pending.back());
        pick = pending.size() - 1;
      }
      auto [w, c] = std::move(pending[pick]);
      pending.pop_back();

      std::optional<detail::Redex> r;
      if (opts.order == RewriteOrder::random) {
        auto all = detail::all_redexes(*alg, w);
        if (!all.empty()) {
          r = all[std::uniform_int_distribution<std::size_t>(
              0, all.size() - 1)(rng)];
        }
      } else {
        r = detail::first_redex(*alg, w);
      }
      if (!r) {
        out.add_term(detail::irreducible_to_monomial(alg->graph, w), c);
        continue;
      }
      ++steps;
      detail::apply_redex(*alg, w, c, *r, push);
    }
    if (stats != nullptr) {
      stats->steps += steps;
    }
    return out;
  }

  template <typename K>
  Element<K> normal_form(AlgebraPtr const& alg,
                         Word const&       word,
                         RewriteOptions    opts  = {},
                         RewriteStats*     stats = nullptr) {
    return normal_form<K>(alg, {{word, K(1)}}, opts, stats);
  }

  // Concatenation of representative words, then normal form.
  template <typename K>
  Element<K> multiply(Element<K> const& a, Element<K> const& b) {
    if (!same_algebra(a.algebra(), b.algebra())) {
      throw AlgebraMismatch("cannot multiply elements of different algebras");
    }
    std::vector<std::pair<Word, K>> combination;
    combination.reserve(a.size() * b.size());
    for (auto const& [m1, c1] : a.terms()) {
      Word w1 = m1.word();
      for (auto const& [m2, c2] : b.terms()) {
        Word w = w1;
        Word w2 = m2.word();
        w.insert(w.end(), w2.begin(), w2.end());
        combination.emplace_back(std::move(w), K(c1 * c2));
      }
    }
    if (combination.empty()) {
      return Element<K>(a.algebra());
    }
    return normal_form<K>(a.algebra(), combination);
  }

  // (m1 (x) u^i)(m2 (x) u^j) = m1 m2 (x) u^(i+j).
  template <typename K>
  TensorElement<K> tensor_multiply(TensorElement<K> const& a,
                                   TensorElement<K> const& b) {
    if (!same_algebra(a.algebra(), b.algebra())) {
      throw AlgebraMismatch(
          "cannot multiply tensor elements over different algebras");
    }
    TensorElement<K> out(a.algebra());
    for (auto const& [k1, c1] : a.terms()) {
      for (auto const& [k2, c2] : b.terms()) {
        auto prod = multiply(Element<K>::monomial(a.algebra(), k1.mono),
                             Element<K>::monomial(a.algebra(), k2.mono));
        for (auto const& [m, c] : prod.terms()) {
          out.add_term(TensorKey{m, k1.exponent + k2.exponent},
                       K(c * c1 * c2));
        }
      }
    }
    return out;
  }

  template <typename K>
  TensorElement<K> multiply(TensorElement<K> const& a,
                            TensorElement<K> const& b) {
    return tensor_multiply(a, b);
  }

  template <typename K>
  Element<K> generator_element(AlgebraPtr const& alg, Generator x) {
    return normal_form<K>(alg, Word{x});
  }

}  // namespace leavitt

#endif  // LEAVITT_REWRITE_HPP_
