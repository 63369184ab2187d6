// Algebra homomorphisms out of a Leavitt path algebra, given by the images
// of the generators, and the four maps of the trimming square.
//
// A generator table defines a homomorphism exactly when the images satisfy
// the defining relations, so every GeneratorMap validates itself on
// construction and keeps the report.

#ifndef LEAVITT_MORPHISMS_HPP_
#define LEAVITT_MORPHISMS_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "element.hpp"
#include "graph.hpp"
#include "monomial.hpp"
#include "rewrite.hpp"
#include "text.hpp"

namespace leavitt {

  class NotTrimmable : public std::invalid_argument {
   public:
    explicit NotTrimmable(TrimmabilityReport rep)
        : std::invalid_argument("graph is not trimmable at " + rep.v0 + ": "
                                + rep.message),
          report(std::move(rep)) {}

    TrimmabilityReport report;
  };

  class InvalidMap : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  ////////////////////////////////////////////////////////////////////////
  // Image traits
  ////////////////////////////////////////////////////////////////////////

  template <typename Image>
  struct is_tensor_image : std::false_type {};

  template <typename K>
  struct is_tensor_image<TensorElement<K>> : std::true_type {};

  ////////////////////////////////////////////////////////////////////////
  // Validation report
  ////////////////////////////////////////////////////////////////////////

  enum class Relation : std::size_t {
    vertex_idempotents = 0,  // v w = delta(v, w) v
    edge_endpoints     = 1,  // s(x) x = x t(x) = x
    ghost_endpoints    = 2,  // t(x) x^* = x^* s(x) = x^*
    ck1                = 3,  // x^* y = delta(x, y) t(x)
    ck2                = 4,  // sum over s^-1(v) of x x^* = v
  };

  inline constexpr std::array<Relation, 5> all_relations = {
      Relation::vertex_idempotents, Relation::edge_endpoints,
      Relation::ghost_endpoints,    Relation::ck1,
      Relation::ck2};

  inline char const* label(Relation r) {
    constexpr std::array<char const*, 5> names = {"L1", "L2", "L3", "L4", "L5"};
    return names[static_cast<std::size_t>(r)];
  }

  struct RelationCheck {
    bool        ok = true;
    std::string instance;  // first failing instance
    std::string witness;   // generator the failing instance is about
  };

  struct HomReport {
    std::array<RelationCheck, 5> relations;
    bool                         graded = true;
    std::string                  ungraded_generator;
    bool                         vertex_images_nonzero = true;
    std::string                  zero_vertex;

    bool relations_ok() const {
      for (auto const& r : relations) {
        if (!r.ok) {
          return false;
        }
      }
      return true;
    }

    RelationCheck const& at(Relation r) const {
      return relations[static_cast<std::size_t>(r)];
    }

    std::optional<Relation> first_failure() const {
      for (auto r : all_relations) {
        if (!at(r).ok) {
          return r;
        }
      }
      return std::nullopt;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // GeneratorMap
  ////////////////////////////////////////////////////////////////////////

  enum class MapUse {
    validated_only,
    // Negative controls apply corrupted tables on purpose.
    allow_invalid,
  };

  template <typename Image>
  class GeneratorMap {
   public:
    using image_type  = Image;
    using scalar_type = typename Image::scalar_type;
    using K           = scalar_type;

    GeneratorMap(std::string                  name,
                 AlgebraPtr                   domain,
                 AlgebraPtr                   codomain,
                 std::map<Generator, Image>   images)
        : _name(std::move(name)),
          _domain(std::move(domain)),
          _codomain(std::move(codomain)),
          _images(std::move(images)) {
      for (auto x : all_generators(_domain->graph)) {
        auto it = _images.find(x);
        if (it == _images.end()) {
          throw InvalidMap(_name + ": no image for generator "
                           + to_string(_domain->graph, x));
        }
        if (!same_algebra(it->second.algebra(), _codomain)) {
          throw InvalidMap(_name + ": image of " + to_string(_domain->graph, x)
                           + " lives in the wrong algebra");
        }
      }
      if (_images.size() != all_generators(_domain->graph).size()) {
        throw InvalidMap(_name + ": image table names unknown generators");
      }
      _report = validate_table();
    }

    std::string const& name() const noexcept {
      return _name;
    }

    AlgebraPtr const& domain() const noexcept {
      return _domain;
    }

    AlgebraPtr const& codomain() const noexcept {
      return _codomain;
    }

    Image const& image(Generator x) const {
      return _images.at(x);
    }

    std::map<Generator, Image> const& images() const noexcept {
      return _images;
    }

    HomReport const& report() const noexcept {
      return _report;
    }

    bool is_valid() const noexcept {
      return _report.relations_ok();
    }

    // A copy with some generator images replaced, revalidated.
    GeneratorMap with_images(std::map<Generator, Image> const& replace) const {
      auto images = _images;
      for (auto const& [x, img] : replace) {
        if (!images.count(x)) {
          throw InvalidMap(_name + ": override names an unknown generator");
        }
        images.insert_or_assign(x, img);
      }
      return GeneratorMap(_name, _domain, _codomain, std::move(images));
    }

    Image zero() const {
      return Image(_codomain);
    }

    // Image of a word: the product of the generator images.
    Image apply_word(Word const& w) const {
      Image acc = image(w.front());
      for (std::size_t i = 1; i < w.size() && !acc.is_zero(); ++i) {
        Image const& next = image(w[i]);
        if (next.is_zero()) {
          return zero();
        }
        acc = multiply(acc, next);
      }
      return acc;
    }

   private:
    Image product(Generator a, Generator b) const {
      return multiply(image(a), image(b));
    }

    HomReport validate_table() const {
      Graph const& g = _domain->graph;
      HomReport    rep;
      auto         fail = [&](Relation r, std::string inst, std::string wit) {
        auto& slot = rep.relations[static_cast<std::size_t>(r)];
        if (slot.ok) {
          slot.ok       = false;
          slot.instance = std::move(inst);
          slot.witness  = std::move(wit);
        }
      };
      auto name = [&](Generator x) { return to_string(g, x); };

      std::size_t nv = g.number_of_vertices();
      std::size_t ne = g.number_of_edges();

      for (index_type i = 0; i < nv; ++i) {
        for (index_type j = 0; j < nv; ++j) {
          auto  vi  = Generator::vertex(i);
          auto  vj  = Generator::vertex(j);
          Image rhs = i == j ? image(vi) : zero();
          if (!(product(vi, vj) == rhs)) {
            fail(Relation::vertex_idempotents,
                 name(vi) + " . " + name(vj) + " = "
                     + (i == j ? name(vi) : std::string("0")),
                 name(vi));
          }
        }
      }

      for (index_type e = 0; e < ne; ++e) {
        auto x  = Generator::edge(e);
        auto xs = Generator::ghost(e);
        auto s  = Generator::vertex(g.source(e));
        auto t  = Generator::vertex(g.target(e));
        if (!(product(s, x) == image(x))) {
          fail(Relation::edge_endpoints,
               name(s) + " . " + name(x) + " = " + name(x), name(x));
        }
        if (!(product(x, t) == image(x))) {
          fail(Relation::edge_endpoints,
               name(x) + " . " + name(t) + " = " + name(x), name(x));
        }
        if (!(product(t, xs) == image(xs))) {
          fail(Relation::ghost_endpoints,
               name(t) + " . " + name(xs) + " = " + name(xs), name(xs));
        }
        if (!(product(xs, s) == image(xs))) {
          fail(Relation::ghost_endpoints,
               name(xs) + " . " + name(s) + " = " + name(xs), name(xs));
        }
      }

      for (index_type a = 0; a < ne; ++a) {
        for (index_type b = 0; b < ne; ++b) {
          auto  xs  = Generator::ghost(a);
          auto  y   = Generator::edge(b);
          auto  t   = Generator::vertex(g.target(a));
          Image rhs = a == b ? image(t) : zero();
          if (!(product(xs, y) == rhs)) {
            fail(Relation::ck1,
                 name(xs) + " . " + name(y) + " = "
                     + (a == b ? name(t) : std::string("0")),
                 name(Generator::edge(a)));
          }
        }
      }

      for (index_type v = 0; v < nv; ++v) {
        auto const& out = g.out_edges(v);
        if (out.empty()) {
          continue;
        }
        Image       sum = zero();
        std::string lhs;
        for (index_type e : out) {
          sum += product(Generator::edge(e), Generator::ghost(e));
          lhs += (lhs.empty() ? "" : " + ") + name(Generator::edge(e)) + " . "
                 + name(Generator::ghost(e));
        }
        auto vv = Generator::vertex(v);
        if (!(sum == image(vv))) {
          fail(Relation::ck2, lhs + " = " + name(vv), name(vv));
        }
      }

      for (auto const& [x, img] : _images) {
        auto d = img.homogeneous_degree();
        if (!img.is_zero() && (!d || *d != x.degree())) {
          if (rep.graded) {
            rep.graded             = false;
            rep.ungraded_generator = name(x);
          }
        }
        if (x.kind == Generator::Kind::vertex && img.is_zero()
            && rep.vertex_images_nonzero) {
          rep.vertex_images_nonzero = false;
          rep.zero_vertex           = name(x);
        }
      }
      return rep;
    }

    std::string                _name;
    AlgebraPtr                 _domain;
    AlgebraPtr                 _codomain;
    std::map<Generator, Image> _images;
    HomReport                  _report;
  };

  template <typename Image>
  HomReport validate(GeneratorMap<Image> const& h) {
    return h.report();
  }

  // Multiplicative-linear extension to an element of the domain.  The word
  // representative of each monomial is substituted; normalisation happens in
  // the codomain.  Call it qualified as leavitt::apply: with two arguments
  // argument-dependent lookup also finds std::apply.
  template <typename Image>
  Image apply(GeneratorMap<Image> const&                    h,
              Element<typename Image::scalar_type> const& a,
              MapUse use = MapUse::validated_only) {
    using K = typename Image::scalar_type;
    if (use == MapUse::validated_only && !h.is_valid()) {
      throw InvalidMap(h.name() + " does not preserve the defining relations");
    }
    if (!same_algebra(a.algebra(), h.domain())) {
      throw AlgebraMismatch(h.name() + ": argument outside the domain");
    }
    Image out = h.zero();
    for (auto const& [m, c] : a.terms()) {
      Image img = h.apply_word(m.word());
      if (!img.is_zero()) {
        out += K(c) * img;
      }
    }
    return out;
  }

  // h (x) id on L(domain) (x) k[u, u^-1].
  template <typename K>
  TensorElement<K> apply_tensored(GeneratorMap<Element<K>> const& h,
                                  TensorElement<K> const&         a,
                                  MapUse use = MapUse::validated_only) {
    if (!same_algebra(a.algebra(), h.domain())) {
      throw AlgebraMismatch(h.name() + " (x) id: argument outside the domain");
    }
    TensorElement<K> out(h.codomain());
    for (auto const& [key, c] : a.terms()) {
      auto img = apply(h, Element<K>::monomial(h.domain(), key.mono), use);
      for (auto const& [m, d] : img.terms()) {
        out.add_term(TensorKey{m, key.exponent}, K(c * d));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The four maps of the trimming square
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Identity on generators that survive in the codomain graph with the
    // same endpoints, zero on the rest.
    template <typename K>
    GeneratorMap<Element<K>> restriction_map(std::string       name,
                                             AlgebraPtr const& dom,
                                             AlgebraPtr const& cod) {
      Graph const&                    g = dom->graph;
      Graph const&                    h = cod->graph;
      std::map<Generator, Element<K>> images;
      for (index_type v = 0; v < g.number_of_vertices(); ++v) {
        auto w = h.vertex_index(g.vertex_id(v));
        images.emplace(Generator::vertex(v),
                       w ? generator_element<K>(cod, Generator::vertex(*w))
                         : Element<K>(cod));
      }
      for (index_type e = 0; e < g.number_of_edges(); ++e) {
        auto f    = h.edge_index(g.edge_id(e));
        bool kept = f && h.vertex_id(h.source(*f)) == g.vertex_id(g.source(e))
                    && h.vertex_id(h.target(*f)) == g.vertex_id(g.target(e));
        images.emplace(Generator::edge(e),
                       kept ? generator_element<K>(cod, Generator::edge(*f))
                            : Element<K>(cod));
        images.emplace(Generator::ghost(e),
                       kept ? generator_element<K>(cod, Generator::ghost(*f))
                            : Element<K>(cod));
      }
      return GeneratorMap<Element<K>>(std::move(name), dom, cod,
                                      std::move(images));
    }

    inline TrimmabilityReport require_trimmable(Graph const&       q,
                                                std::string const& v0) {
      auto rep = is_trimmable(q, v0);
      if (!rep.verdict) {
        throw NotTrimmable(rep);
      }
      return rep;
    }

  }  // namespace detail

  // pi1 : L(Q) -> L(Q'), identity on Q' and zero elsewhere.
  template <typename K = Rational>
  GeneratorMap<Element<K>>
  make_pi1(Graph const&       q,
           std::string const& v0,
           SpecialEdgePolicy  policy = SpecialEdgePolicy::lexicographic) {
    auto rep = detail::require_trimmable(q, v0);
    return detail::restriction_map<K>("pi1", make_algebra(q, policy),
                                      make_algebra(*rep.q_prime, policy));
  }

  // pi2 : L(Q'') -> L(Q'), identity on Q' and zero elsewhere.
  template <typename K = Rational>
  GeneratorMap<Element<K>>
  make_pi2(Graph const&       qpp,
           std::string const& v0,
           SpecialEdgePolicy  policy = SpecialEdgePolicy::lexicographic) {
    if (!qpp.vertex_index(v0)) {
      throw GraphError("pi2: unknown vertex \"" + v0 + "\"");
    }
    if (!is_sink(qpp, v0)) {
      throw GraphError("pi2: " + v0
                       + " must be a sink once its loop has been removed");
    }
    return detail::restriction_map<K>("pi2", make_algebra(qpp, policy),
                                      make_algebra(delete_vertex(qpp, v0),
                                                   policy));
  }

  // f : L(Q) -> L(Q'') (x) k[u, u^-1].  Vertices go to v (x) 1, the loop to
  // v0 (x) u, every other edge e to e (x) u, ghosts to their inverses.
  template <typename K = Rational>
  GeneratorMap<TensorElement<K>>
  make_f(Graph const&       q,
         std::string const& v0,
         SpecialEdgePolicy  policy = SpecialEdgePolicy::lexicographic) {
    auto         rep = detail::require_trimmable(q, v0);
    auto         dom = make_algebra(q, policy);
    auto         cod = make_algebra(*rep.q_double_prime, policy);
    Graph const& h   = cod->graph;
    index_type   loop = q.checked_edge(rep.loop);
    index_type   base = h.checked_vertex(v0);

    std::map<Generator, TensorElement<K>> images;
    for (index_type v = 0; v < q.number_of_vertices(); ++v) {
      images.emplace(Generator::vertex(v),
                     TensorElement<K>::monomial(
                         cod, Monomial::vertex(h.checked_vertex(q.vertex_id(v))),
                         0));
    }
    for (index_type e = 0; e < q.number_of_edges(); ++e) {
      if (e == loop) {
        images.emplace(Generator::edge(e),
                       TensorElement<K>::monomial(cod, Monomial::vertex(base), 1));
        images.emplace(
            Generator::ghost(e),
            TensorElement<K>::monomial(cod, Monomial::vertex(base), -1));
        continue;
      }
      index_type f = h.checked_edge(q.edge_id(e));
      Path       p = Path::edge(h, f);
      Path       t = Path::vertex(h.target(f));
      images.emplace(Generator::edge(e),
                     TensorElement<K>::monomial(cod, Monomial{p, t}, 1));
      images.emplace(Generator::ghost(e),
                     TensorElement<K>::monomial(cod, Monomial{t, p}, -1));
    }
    return GeneratorMap<TensorElement<K>>("f", dom, cod, std::move(images));
  }

  // delta : L(Q') -> L(Q') (x) k[u, u^-1], the coaction v -> v (x) 1,
  // e -> e (x) u, e^* -> e^* (x) u^-1.
  template <typename K = Rational>
  GeneratorMap<TensorElement<K>>
  make_delta(Graph const&      qp,
             SpecialEdgePolicy policy = SpecialEdgePolicy::lexicographic) {
    auto alg = make_algebra(qp, policy);
    std::map<Generator, TensorElement<K>> images;
    for (auto x : all_generators(qp)) {
      auto nf = generator_element<K>(alg, x);
      TensorElement<K> img(alg);
      for (auto const& [m, c] : nf.terms()) {
        img.add_term(TensorKey{m, x.degree()}, c);
      }
      images.emplace(x, std::move(img));
    }
    return GeneratorMap<TensorElement<K>>("delta", alg, alg, std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Spanning set of the ideal generated by a sink or loop base
  ////////////////////////////////////////////////////////////////////////

  // Normal forms of x y^* over paths x, y ending at v with |x| + |y| <= L,
  // deduplicated, zeros dropped, in enumeration order.
  template <typename K = Rational>
  std::vector<Element<K>> ideal_span(AlgebraPtr const&  alg,
                                     std::string const& v,
                                     std::size_t        max_length) {
    Graph const& g  = alg->graph;
    index_type   vi = g.checked_vertex(v);
    bool loop_base = std::any_of(g.out_edges(vi).begin(), g.out_edges(vi).end(),
                                 [&](index_type e) { return g.target(e) == vi; });
    if (!g.out_edges(vi).empty() && !loop_base) {
      throw std::invalid_argument("ideal_span: " + v
                                  + " is neither a sink nor the base of a loop");
    }
    auto                    paths = paths_ending_at(g, vi, max_length);
    std::vector<Element<K>> out;
    std::set<std::string>   seen;
    for (auto const& x : paths) {
      for (auto const& y : paths) {
        if (x.length() + y.length() > max_length) {
          continue;
        }
        auto nf = normal_form<K>(alg, Monomial{x, y}.word());
        if (nf.is_zero() || !seen.insert(to_string(nf)).second) {
          continue;
        }
        out.push_back(std::move(nf));
      }
    }
    return out;
  }

  template <typename K = Rational>
  std::vector<Element<K>> ideal_span(Graph const&       g,
                                     std::string const& v,
                                     std::size_t        max_length,
                                     SpecialEdgePolicy  policy
                                     = SpecialEdgePolicy::lexicographic) {
    return ideal_span<K>(make_algebra(g, policy), v, max_length);
  }

}  // namespace leavitt

#endif  // LEAVITT_MORPHISMS_HPP_
