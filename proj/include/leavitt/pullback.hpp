// Windowed verification of the trimming square
//
//                     L(Q)
//              pi1 /        \ f
//            L(Q')            L(Q'') (x) k[u, u^-1]
//          delta \            / pi2 (x) id
//                L(Q') (x) k[u, u^-1]
//
// as a pullback of graded algebras.  Writing P, A1, A2, B for the four
// corners and p1, p2, q1, q2 for pi1, f, delta, pi2 (x) id, the square is a
// pullback iff it commutes and
//
//   ker p1 /\ ker p2 = 0,     q1^-1(q2(A2)) = p1(P),     p2(ker p1) = ker q2.
//
// All maps are graded, so each condition is checked degree by degree, on
// subspaces spanned by basis monomials of bounded length.  Searches for
// preimages use a larger length bound (the slack); a failure that
// disappears once the slack is raised to a bound covering every preimage
// is reported as a window-boundary effect rather than a genuine failure.

#ifndef LEAVITT_PULLBACK_HPP_
#define LEAVITT_PULLBACK_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "element.hpp"
#include "graph.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "morphisms.hpp"
#include "rewrite.hpp"
#include "text.hpp"

namespace leavitt {

  struct TruncationWindow {
    // Maximum total monomial length on the source side.
    std::size_t length = 4;
    // Length bound for preimage searches; at least `length`.
    std::size_t slack = 6;
    // Degrees -degree .. degree are checked.
    int degree = 2;

    void validate() const {
      if (slack < length) {
        throw std::invalid_argument("window slack must be at least the length");
      }
      if (degree < 0) {
        throw std::invalid_argument("window degree bound must be nonnegative");
      }
    }

    friend bool operator==(TruncationWindow const&, TruncationWindow const&)
        = default;
  };

  enum class FailureKind { none, genuine, window_boundary };

  inline char const* to_string(FailureKind k) {
    switch (k) {
      case FailureKind::none:
        return "none";
      case FailureKind::genuine:
        return "genuine";
      case FailureKind::window_boundary:
        return "window-boundary";
    }
    return "unknown";
  }

  struct Witness {
    std::string text;
    std::size_t length = 0;
    int         degree = 0;

    // Shorter first, then smaller degree, then text.
    friend bool operator<(Witness const& a, Witness const& b) {
      return std::tie(a.length, a.degree, a.text)
             < std::tie(b.length, b.degree, b.text);
    }
  };

  struct DegreeVerdict {
    int                    degree = 0;
    bool                   ok     = true;
    FailureKind            kind   = FailureKind::none;
    std::optional<Witness> witness;
  };

  struct CheckResult {
    bool                       ok = true;
    std::vector<DegreeVerdict> degrees;
    std::optional<Witness>     witness;
    FailureKind                kind = FailureKind::none;

    void record(DegreeVerdict v) {
      if (!v.ok) {
        ok = false;
        if (v.witness && (!witness || *v.witness < *witness)) {
          witness = v.witness;
          kind    = v.kind;
        }
      }
      degrees.push_back(std::move(v));
    }
  };

  template <typename K = Rational>
  struct MapSet {
    GeneratorMap<Element<K>>       pi1;
    GeneratorMap<TensorElement<K>> f;
    GeneratorMap<Element<K>>       pi2;
    GeneratorMap<TensorElement<K>> delta;
  };

  template <typename K = Rational>
  MapSet<K> standard_maps(Graph const&       q,
                          std::string const& v0,
                          SpecialEdgePolicy  policy) {
    auto rep = detail::require_trimmable(q, v0);
    return MapSet<K>{make_pi1<K>(q, v0, policy), make_f<K>(q, v0, policy),
                     make_pi2<K>(*rep.q_double_prime, v0, policy),
                     make_delta<K>(*rep.q_prime, policy)};
  }

  // Replacement generator images for one of the four maps, in text form.
  // Keys are "[v]" or "v" for vertices, "e" for edges, "e*" or "e^*" for
  // ghost edges; values use the element grammar of the map's codomain.
  struct MapOverride {
    std::string                        target;  // pi1, pi2, f or delta
    std::map<std::string, std::string> images;
  };

  namespace detail {

    inline Generator parse_generator(Graph const& g, std::string key) {
      auto strip = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      key = strip(key);
      if (key.size() > 2 && key.front() == '[' && key.back() == ']') {
        return Generator::vertex(g.checked_vertex(key.substr(1, key.size() - 2)));
      }
      if (key.size() > 2 && key.compare(key.size() - 2, 2, "^*") == 0) {
        return Generator::ghost(g.checked_edge(key.substr(0, key.size() - 2)));
      }
      if (key.size() > 1 && key.back() == '*') {
        return Generator::ghost(g.checked_edge(key.substr(0, key.size() - 1)));
      }
      if (auto e = g.edge_index(key)) {
        return Generator::edge(*e);
      }
      if (auto v = g.vertex_index(key)) {
        return Generator::vertex(*v);
      }
      throw GraphError("unknown generator \"" + key + "\"");
    }

    template <typename Image>
    GeneratorMap<Image> override_map(GeneratorMap<Image> const&                h,
                                     std::map<std::string, std::string> const& in) {
      using K = typename Image::scalar_type;
      std::map<Generator, Image> repl;
      for (auto const& [key, text] : in) {
        Generator x = parse_generator(h.domain()->graph, key);
        if constexpr (is_tensor_image<Image>::value) {
          repl.insert_or_assign(x, parse_tensor<K>(h.codomain(), text));
        } else {
          repl.insert_or_assign(x, parse_element<K>(h.codomain(), text));
        }
      }
      return h.with_images(repl);
    }

  }  // namespace detail

  template <typename K>
  MapSet<K> apply_overrides(MapSet<K> maps, std::vector<MapOverride> const& ov) {
    for (auto const& o : ov) {
      if (o.target == "pi1") {
        maps.pi1 = detail::override_map(maps.pi1, o.images);
      } else if (o.target == "pi2") {
        maps.pi2 = detail::override_map(maps.pi2, o.images);
      } else if (o.target == "f") {
        maps.f = detail::override_map(maps.f, o.images);
      } else if (o.target == "delta") {
        maps.delta = detail::override_map(maps.delta, o.images);
      } else {
        throw std::invalid_argument("unknown map \"" + o.target + "\"");
      }
    }
    return maps;
  }

  ////////////////////////////////////////////////////////////////////////
  // Individual checks
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    constexpr MapUse kUse = MapUse::allow_invalid;

    inline std::vector<Monomial> basis_in_degree(LeavittAlgebra const& alg,
                                                 std::size_t           len,
                                                 int                   degree) {
      std::vector<Monomial> out;
      for (auto& m : basis_monomials(alg, len)) {
        if (m.degree() == degree) {
          out.push_back(std::move(m));
        }
      }
      return out;
    }

    template <typename K>
    Witness witness_of(Element<K> const& a) {
      Witness w{to_string(a), 0, 0};
      for (auto const& [m, c] : a.terms()) {
        w.length = std::max(w.length, m.length());
      }
      w.degree = a.is_zero() ? 0 : a.terms().rbegin()->first.degree();
      return w;
    }

    template <typename K>
    Witness witness_of(TensorElement<K> const& a) {
      Witness w{to_string(a), 0, 0};
      for (auto const& [k, c] : a.terms()) {
        w.length = std::max(w.length, k.mono.length());
      }
      w.degree = a.is_zero() ? 0 : a.terms().rbegin()->first.exponent;
      return w;
    }

    template <typename K>
    Element<K> element_of(AlgebraPtr const& alg, SparseVector<Monomial, K> v) {
      return Element<K>(alg, std::move(v));
    }

    template <typename K>
    TensorElement<K> tensor_of(AlgebraPtr const&          alg,
                               SparseVector<TensorKey, K> v) {
      TensorElement<K> out(alg);
      for (auto const& [k, c] : v) {
        out.add_term(k, c);
      }
      return out;
    }

    // Coordinates of `v` with the keys outside the window ordered first, so
    // that echelon rows led by an inside key span the intersection with the
    // window.
    template <typename Key, typename K, typename Inside>
    SparseVector<std::pair<int, Key>, K>
    tag_window(SparseVector<Key, K> const& v, Inside&& inside) {
      SparseVector<std::pair<int, Key>, K> out;
      for (auto const& [k, c] : v) {
        out.emplace(std::make_pair(inside(k) ? 1 : 0, k), c);
      }
      return out;
    }

    template <typename Key, typename K>
    Echelon<Key, K> window_part(Echelon<std::pair<int, Key>, K> const& e) {
      Echelon<Key, K> out;
      for (auto const& [pivot, row] : e.rows()) {
        if (pivot.first != 1) {
          continue;
        }
        SparseVector<Key, K> v;
        for (auto const& [k, c] : row) {
          v.emplace(k.second, c);
        }
        out.insert(v);
      }
      return out;
    }

  }  // namespace detail

  // delta(pi1(m)) == (pi2 (x) id)(f(m)) for every basis monomial m of L(Q)
  // of length at most the window length.
  template <typename K>
  CheckResult check_commutes(MapSet<K> const& maps, TruncationWindow const& w) {
    CheckResult out;
    for (auto const& m : basis_monomials(*maps.pi1.domain(), w.length)) {
      auto src   = Element<K>::monomial(maps.pi1.domain(), m);
      auto left  = apply(maps.delta, apply(maps.pi1, src, detail::kUse),
                         detail::kUse);
      auto right = apply_tensored(maps.pi2, apply(maps.f, src, detail::kUse),
                                  detail::kUse);
      if (!(left == right)) {
        out.ok   = false;
        out.kind = FailureKind::genuine;
        auto wit = detail::witness_of(src);
        if (!out.witness || wit < *out.witness) {
          out.witness = wit;
        }
      }
    }
    return out;
  }

  // ker pi1 /\ ker f = 0 on each degree of the window.
  template <typename K>
  DegreeVerdict check_con1_degree(MapSet<K> const&        maps,
                                  TruncationWindow const& w,
                                  int                     d) {
    using ImageKey = std::pair<int, TensorKey>;
    KernelTracker<Monomial, ImageKey, K> tracker;
    AlgebraPtr const&                    dom = maps.pi1.domain();
    for (auto const& m : detail::basis_in_degree(*dom, w.length, d)) {
      auto src = Element<K>::monomial(dom, m);
      SparseVector<ImageKey, K> img;
      auto const p1 = apply(maps.pi1, src, detail::kUse);
      auto const p2 = apply(maps.f, src, detail::kUse);
      for (auto const& [mm, c] : p1.terms()) {
        img.emplace(ImageKey{0, TensorKey{mm, 0}}, c);
      }
      for (auto const& [k, c] : p2.terms()) {
        img.emplace(ImageKey{1, k}, c);
      }
      tracker.add({{m, K(1)}}, std::move(img));
    }
    DegreeVerdict v;
    v.degree = d;
    for (auto const& k : tracker.kernel()) {
      v.ok   = false;
      v.kind = FailureKind::genuine;
      auto wit = detail::witness_of(detail::element_of<K>(dom, k));
      if (!v.witness || wit < *v.witness) {
        v.witness = wit;
      }
    }
    return v;
  }

  template <typename K>
  CheckResult check_con1(MapSet<K> const& maps, TruncationWindow const& w) {
    CheckResult out;
    for (int d = -w.degree; d <= w.degree; ++d) {
      out.record(check_con1_degree(maps, w, d));
    }
    return out;
  }

  namespace detail {

    // delta^-1((pi2 (x) id)(A2)) and pi1(P) inside the degree-d window of
    // L(Q'), with `slack` bounding the monomials of A2 and P.
    template <typename K>
    DegreeVerdict con2_at(MapSet<K> const&        maps,
                          TruncationWindow const& w,
                          int                     d,
                          std::size_t             slack) {
      AlgebraPtr const& p_alg  = maps.pi1.domain();
      AlgebraPtr const& a1_alg = maps.pi1.codomain();
      AlgebraPtr const& a2_alg = maps.pi2.domain();

      Echelon<TensorKey, K> image_q2;
      for (auto const& m : basis_monomials(*a2_alg, slack)) {
        auto t = TensorElement<K>::monomial(a2_alg, m, d);
        image_q2.insert(apply_tensored(maps.pi2, t, kUse).terms());
      }

      KernelTracker<Monomial, TensorKey, K> pre;
      for (auto const& a : basis_in_degree(*a1_alg, w.length, d)) {
        auto img = apply(maps.delta, Element<K>::monomial(a1_alg, a), kUse);
        pre.add({{a, K(1)}}, image_q2.reduce(img.terms()));
      }
      Echelon<Monomial, K> lhs;
      for (auto const& k : pre.kernel()) {
        lhs.insert(k);
      }

      auto inside = [&](Monomial const& m) {
        return m.length() <= w.length && m.degree() == d;
      };
      Echelon<std::pair<int, Monomial>, K> tagged;
      for (auto const& m : basis_in_degree(*p_alg, slack, d)) {
        auto img = apply(maps.pi1, Element<K>::monomial(p_alg, m), kUse);
        tagged.insert(tag_window(img.terms(), inside));
      }
      Echelon<Monomial, K> rhs = window_part<Monomial, K>(tagged);

      DegreeVerdict v;
      v.degree = d;
      auto missing = rhs.first_missing(lhs);
      if (!missing) {
        missing = lhs.first_missing(rhs);
      }
      if (missing) {
        v.ok      = false;
        v.kind    = FailureKind::genuine;
        v.witness = witness_of(element_of<K>(a1_alg, *missing));
      }
      return v;
    }

    // f(ker pi1) and ker(pi2 (x) id) inside the degree-d window of
    // L(Q'') (x) k[u, u^-1], with `slack` bounding the kernel search in P.
    template <typename K>
    DegreeVerdict con3_at(MapSet<K> const&        maps,
                          TruncationWindow const& w,
                          int                     d,
                          std::size_t             slack) {
      AlgebraPtr const& p_alg  = maps.pi1.domain();
      AlgebraPtr const& a2_alg = maps.pi2.domain();

      KernelTracker<Monomial, Monomial, K> ker_p1;
      for (auto const& m : basis_in_degree(*p_alg, slack, d)) {
        auto img = apply(maps.pi1, Element<K>::monomial(p_alg, m), kUse);
        ker_p1.add({{m, K(1)}}, img.terms());
      }
      auto inside = [&](TensorKey const& k) {
        return k.mono.length() <= w.length && k.exponent == d;
      };
      Echelon<std::pair<int, TensorKey>, K> tagged;
      for (auto const& k : ker_p1.kernel()) {
        auto img = apply(maps.f, element_of<K>(p_alg, k), kUse);
        tagged.insert(tag_window(img.terms(), inside));
      }
      Echelon<TensorKey, K> lhs = window_part<TensorKey, K>(tagged);

      KernelTracker<TensorKey, Monomial, K> ker_q2;
      for (auto const& m : basis_monomials(*a2_alg, w.length)) {
        auto t   = TensorElement<K>::monomial(a2_alg, m, d);
        auto img = apply_tensored(maps.pi2, t, kUse);
        SparseVector<Monomial, K> flat;
        for (auto const& [key, c] : img.terms()) {
          flat.emplace(key.mono, c);
        }
        ker_q2.add({{TensorKey{m, d}, K(1)}}, std::move(flat));
      }
      Echelon<TensorKey, K> rhs;
      for (auto const& k : ker_q2.kernel()) {
        rhs.insert(k);
      }

      DegreeVerdict v;
      v.degree     = d;
      auto missing = lhs.first_missing(rhs);
      if (!missing) {
        missing = rhs.first_missing(lhs);
      }
      if (missing) {
        v.ok      = false;
        v.kind    = FailureKind::genuine;
        v.witness = witness_of(tensor_of<K>(a2_alg, *missing));
      }
      return v;
    }

    // Slack that covers every preimage needed in degrees -D..D: a monomial
    // of length at most L changes its length by at most L + D when loop
    // powers are inserted to shift its degree.
    inline std::size_t generous_slack(TruncationWindow const& w) {
      return std::max(w.slack, 2 * w.length + static_cast<std::size_t>(w.degree));
    }

    template <typename K, typename Fn>
    CheckResult slack_check(MapSet<K> const&        maps,
                            TruncationWindow const& w,
                            Fn&&                    at) {
      CheckResult out;
      for (int d = -w.degree; d <= w.degree; ++d) {
        DegreeVerdict v = at(maps, w, d, w.slack);
        if (!v.ok && generous_slack(w) > w.slack
            && at(maps, w, d, generous_slack(w)).ok) {
          v.kind = FailureKind::window_boundary;
        }
        out.record(std::move(v));
      }
      return out;
    }

  }  // namespace detail

  template <typename K>
  CheckResult check_con2(MapSet<K> const& maps, TruncationWindow const& w) {
    return detail::slack_check(maps, w, [](auto const&... a) {
      return detail::con2_at(a...);
    });
  }

  template <typename K>
  CheckResult check_con3(MapSet<K> const& maps, TruncationWindow const& w) {
    return detail::slack_check(maps, w, [](auto const&... a) {
      return detail::con3_at(a...);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Surjectivity and injectivity of the four maps
  ////////////////////////////////////////////////////////////////////////

  struct MapProperty {
    bool                   ok = true;
    std::optional<Witness> witness;
  };

  struct LemmaMapsReport {
    MapProperty pi1_surjective;
    MapProperty pi2_surjective;
    MapProperty f_injective;
    MapProperty delta_injective;
    // Graded maps that are nonzero on every vertex are injective on the
    // window; pi1 and pi2, which vanish on v0, have a nonzero kernel.
    bool pi1_kernel_nonzero = false;
    bool pi2_kernel_nonzero = false;
    bool graded_uniqueness  = false;

    bool ok() const {
      return pi1_surjective.ok && pi2_surjective.ok && f_injective.ok
             && delta_injective.ok && graded_uniqueness;
    }
  };

  namespace detail {

    template <typename Image>
    std::vector<SparseVector<Monomial, typename Image::scalar_type>>
    window_kernel(GeneratorMap<Image> const& h, std::size_t len) {
      using K  = typename Image::scalar_type;
      using IK = typename Image::key_type;
      KernelTracker<Monomial, IK, K> tracker;
      for (auto const& m : basis_monomials(*h.domain(), len)) {
        auto img = apply(h, Element<K>::monomial(h.domain(), m), kUse);
        tracker.add({{m, K(1)}}, img.terms());
      }
      return tracker.kernel();
    }

    template <typename K>
    MapProperty injective(GeneratorMap<Element<K>> const& h, std::size_t len) {
      MapProperty p;
      for (auto const& k : window_kernel(h, len)) {
        p.ok     = false;
        auto wit = witness_of(element_of<K>(h.domain(), k));
        if (!p.witness || wit < *p.witness) {
          p.witness = wit;
        }
      }
      return p;
    }

    template <typename K>
    MapProperty injective(GeneratorMap<TensorElement<K>> const& h,
                          std::size_t                           len) {
      MapProperty p;
      for (auto const& k : window_kernel(h, len)) {
        p.ok     = false;
        auto wit = witness_of(element_of<K>(h.domain(), k));
        if (!p.witness || wit < *p.witness) {
          p.witness = wit;
        }
      }
      return p;
    }

    // Every codomain basis monomial of length <= len is the image of
    // something in the span of domain basis monomials of length <= len.
    template <typename K>
    MapProperty surjective(GeneratorMap<Element<K>> const& h, std::size_t len) {
      Echelon<Monomial, K> image;
      for (auto const& m : basis_monomials(*h.domain(), len)) {
        image.insert(apply(h, Element<K>::monomial(h.domain(), m), kUse).terms());
      }
      MapProperty p;
      for (auto const& m : basis_monomials(*h.codomain(), len)) {
        if (!image.contains({{m, K(1)}})) {
          p.ok      = false;
          p.witness = witness_of(Element<K>::monomial(h.codomain(), m));
          break;
        }
      }
      return p;
    }

  }  // namespace detail

  template <typename K>
  LemmaMapsReport check_lemma_maps(MapSet<K> const& maps, TruncationWindow const& w) {
    LemmaMapsReport r;
    r.pi1_surjective  = detail::surjective(maps.pi1, w.length);
    r.pi2_surjective  = detail::surjective(maps.pi2, w.length);
    r.f_injective     = detail::injective(maps.f, w.length);
    r.delta_injective = detail::injective(maps.delta, w.length);
    r.pi1_kernel_nonzero = !detail::injective(maps.pi1, w.length).ok;
    r.pi2_kernel_nonzero = !detail::injective(maps.pi2, w.length).ok;

    auto nonvanishing = [](HomReport const& h) {
      return h.relations_ok() && h.graded && h.vertex_images_nonzero;
    };
    bool ok = nonvanishing(maps.f.report()) && r.f_injective.ok
              && nonvanishing(maps.delta.report()) && r.delta_injective.ok;
    ok = ok && !maps.pi1.report().vertex_images_nonzero && r.pi1_kernel_nonzero;
    ok = ok && !maps.pi2.report().vertex_images_nonzero && r.pi2_kernel_nonzero;
    r.graded_uniqueness = ok;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernel of pi1 against the ideal generated by v0
  ////////////////////////////////////////////////////////////////////////

  struct KernelIdealReport {
    bool                   ok            = true;
    std::size_t            kernel_rank   = 0;
    std::size_t            ideal_rank    = 0;
    std::optional<Witness> witness;  // a vector in one span but not the other
  };

  // Compares ker pi1, restricted to basis monomials of length <= len, with
  // the span of ideal_span(Q, v0, len).
  template <typename K>
  KernelIdealReport check_kernel_ideal(GeneratorMap<Element<K>> const& pi1,
                                       std::string const&              v0,
                                       std::size_t                     len) {
    Echelon<Monomial, K> kernel;
    for (auto const& k : detail::window_kernel(pi1, len)) {
      kernel.insert(k);
    }
    Echelon<Monomial, K> ideal;
    for (auto const& e : ideal_span<K>(pi1.domain(), v0, len)) {
      ideal.insert(e.terms());
    }
    KernelIdealReport r;
    r.kernel_rank = kernel.rank();
    r.ideal_rank  = ideal.rank();
    auto missing  = kernel.first_missing(ideal);
    if (!missing) {
      missing = ideal.first_missing(kernel);
    }
    if (missing) {
      r.ok      = false;
      r.witness = detail::witness_of(detail::element_of<K>(pi1.domain(), *missing));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Full verification
  ////////////////////////////////////////////////////////////////////////

  struct NamedHomReport {
    std::string name;
    HomReport   report;
  };

  struct PullbackReport {
    std::string        graph_name;
    std::string        v0;
    TruncationWindow   window;
    SpecialEdgePolicy  policy = SpecialEdgePolicy::lexicographic;
    TrimmabilityReport trimmability;

    std::vector<NamedHomReport> maps;
    CheckResult                 commutes;
    CheckResult                 con1;
    CheckResult                 con2;
    CheckResult                 con3;
    LemmaMapsReport             lemma;

    // Set when the run was repeated with the other special-edge policy.
    std::optional<bool>                          rotated_consistent;
    std::vector<std::pair<std::string, double>>  timings_ms;

    bool trimmable() const {
      return trimmability.verdict;
    }

    bool maps_ok() const {
      return std::all_of(maps.begin(), maps.end(), [](auto const& m) {
        return m.report.relations_ok() && m.report.graded;
      });
    }

    bool ok() const {
      return trimmable() && maps_ok() && commutes.ok && con1.ok && con2.ok
             && con3.ok && lemma.ok() && rotated_consistent.value_or(true);
    }

    // Verdicts only; used to compare runs under different special edges.
    std::vector<bool> signature() const {
      std::vector<bool> s{trimmable(), maps_ok(), commutes.ok, con1.ok,
                          con2.ok,     con3.ok,   lemma.pi1_surjective.ok,
                          lemma.pi2_surjective.ok, lemma.f_injective.ok,
                          lemma.delta_injective.ok, lemma.graded_uniqueness};
      for (auto const* c : {&con1, &con2, &con3}) {
        for (auto const& d : c->degrees) {
          s.push_back(d.ok);
        }
      }
      return s;
    }
  };

  struct VerifyOptions {
    SpecialEdgePolicy        policy        = SpecialEdgePolicy::lexicographic;
    bool                     rerun_rotated = true;
    std::vector<MapOverride> overrides;
  };

  template <typename K = Rational>
  PullbackReport verify_theorem(Graph const&            q,
                                std::string const&      v0,
                                TruncationWindow const& w,
                                VerifyOptions const&    opts = {}) {
    w.validate();
    PullbackReport rep;
    rep.v0           = v0;
    rep.window       = w;
    rep.policy       = opts.policy;
    rep.trimmability = is_trimmable(q, v0);
    if (!rep.trimmability.verdict) {
      return rep;
    }

    using clock = std::chrono::steady_clock;
    auto stage  = [&](char const* name, auto&& fn) {
      auto t0 = clock::now();
      fn();
      std::chrono::duration<double, std::milli> dt = clock::now() - t0;
      rep.timings_ms.emplace_back(name, dt.count());
    };

    std::optional<MapSet<K>> maps;
    stage("maps", [&] {
      maps = apply_overrides(standard_maps<K>(q, v0, opts.policy), opts.overrides);
      rep.maps = {{"pi1", maps->pi1.report()},
                  {"pi2", maps->pi2.report()},
                  {"f", maps->f.report()},
                  {"delta", maps->delta.report()}};
    });
    stage("commutes", [&] { rep.commutes = check_commutes(*maps, w); });
    stage("con1", [&] { rep.con1 = check_con1(*maps, w); });
    stage("con2", [&] { rep.con2 = check_con2(*maps, w); });
    stage("con3", [&] { rep.con3 = check_con3(*maps, w); });
    stage("lemma-maps", [&] { rep.lemma = check_lemma_maps(*maps, w); });

    if (opts.rerun_rotated) {
      stage("rotated-rerun", [&] {
        VerifyOptions other = opts;
        other.rerun_rotated = false;
        other.policy        = opts.policy == SpecialEdgePolicy::lexicographic
                                  ? SpecialEdgePolicy::rotated
                                  : SpecialEdgePolicy::lexicographic;
        auto again = verify_theorem<K>(q, v0, w, other);
        rep.rotated_consistent = again.signature() == rep.signature();
      });
    }
    return rep;
  }

  // Exit status contract: 0 all checks pass, 2 trimmability rejected,
  // 3 any check failed.
  inline int exit_code(PullbackReport const& rep) {
    if (!rep.trimmable()) {
      return 2;
    }
    return rep.ok() ? 0 : 3;
  }

}  // namespace leavitt

#endif  // LEAVITT_PULLBACK_HPP_
