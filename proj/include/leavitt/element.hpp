// Linear combinations of monomials with exact coefficients, Laurent
// polynomials, and elements of the tensor product L(Q) (x) k[u, u^-1].

#ifndef LEAVITT_ELEMENT_HPP_
#define LEAVITT_ELEMENT_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "algebra.hpp"
#include "monomial.hpp"
#include "scalar.hpp"

namespace leavitt {

  class AlgebraMismatch : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  namespace detail {
    template <typename Key, typename K>
    void add_to(std::map<Key, K>& terms, Key const& key, K const& coef) {
      if (is_zero(coef)) {
        return;
      }
      auto [it, inserted] = terms.try_emplace(key, coef);
      if (!inserted) {
        it->second += coef;
        if (is_zero(it->second)) {
          terms.erase(it);
        }
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Element
  ////////////////////////////////////////////////////////////////////////

  template <typename K>
  class Element {
   public:
    using scalar_type = K;
    using key_type    = Monomial;
    using term_map    = std::map<Monomial, K>;

    Element() = default;

    explicit Element(AlgebraPtr alg) : _alg(std::move(alg)) {}

    Element(AlgebraPtr alg, term_map terms) : _alg(std::move(alg)) {
      for (auto& [m, c] : terms) {
        detail::add_to(_terms, m, c);
      }
    }

    static Element monomial(AlgebraPtr alg, Monomial m, K coef = K(1)) {
      Element out(std::move(alg));
      detail::add_to(out._terms, m, coef);
      return out;
    }

    // Sum of all vertices.
    static Element unit(AlgebraPtr alg) {
      Element out(alg);
      for (index_type v = 0; v < alg->graph.number_of_vertices(); ++v) {
        detail::add_to(out._terms, Monomial::vertex(v), K(1));
      }
      return out;
    }

    AlgebraPtr const& algebra() const noexcept {
      return _alg;
    }

    term_map const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    void add_term(Monomial const& m, K const& coef) {
      detail::add_to(_terms, m, coef);
    }

    // True when every monomial belongs to the special-edge basis.
    bool is_normalized() const {
      for (auto const& [m, c] : _terms) {
        if (!is_basis_monomial(*_alg, m)) {
          return false;
        }
      }
      return true;
    }

    std::optional<int> homogeneous_degree() const {
      if (_terms.empty()) {
        return std::nullopt;
      }
      int d = _terms.begin()->first.degree();
      for (auto const& [m, c] : _terms) {
        if (m.degree() != d) {
          return std::nullopt;
        }
      }
      return d;
    }

    Element& operator+=(Element const& o) {
      check(o);
      for (auto const& [m, c] : o._terms) {
        detail::add_to(_terms, m, c);
      }
      return *this;
    }

    Element& operator-=(Element const& o) {
      check(o);
      for (auto const& [m, c] : o._terms) {
        detail::add_to(_terms, m, K(-c));
      }
      return *this;
    }

    Element& operator*=(K const& s) {
      if (leavitt::is_zero(s)) {
        _terms.clear();
        return *this;
      }
      for (auto& [m, c] : _terms) {
        c *= s;
      }
      return *this;
    }

    friend Element operator+(Element a, Element const& b) {
      return a += b;
    }
    friend Element operator-(Element a, Element const& b) {
      return a -= b;
    }
    friend Element operator-(Element a) {
      return a *= K(-1);
    }
    friend Element operator*(K const& s, Element a) {
      return a *= s;
    }

    friend bool operator==(Element const& a, Element const& b) {
      return same_algebra(a._alg, b._alg) && a._terms == b._terms;
    }

   private:
    void check(Element const& o) const {
      if (!same_algebra(_alg, o._alg)) {
        throw AlgebraMismatch("elements belong to different algebras");
      }
    }

    AlgebraPtr _alg;
    term_map   _terms;
  };

  // Partition by degree.  Summing the parts recovers the element.
  template <typename K>
  std::map<int, Element<K>> degree_split(Element<K> const& a) {
    std::map<int, Element<K>> out;
    for (auto const& [m, c] : a.terms()) {
      auto [it, _] = out.try_emplace(m.degree(), a.algebra());
      it->second.add_term(m, c);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Laurent polynomials k[u, u^-1]
  ////////////////////////////////////////////////////////////////////////

  template <typename K>
  class LaurentPoly {
   public:
    using term_map = std::map<int, K>;

    LaurentPoly() = default;

    static LaurentPoly monomial(int exponent, K coef = K(1)) {
      LaurentPoly p;
      detail::add_to(p._terms, exponent, coef);
      return p;
    }

    term_map const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    LaurentPoly& operator+=(LaurentPoly const& o) {
      for (auto const& [e, c] : o._terms) {
        detail::add_to(_terms, e, c);
      }
      return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) {
      return a += b;
    }

    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
      LaurentPoly out;
      for (auto const& [e1, c1] : a._terms) {
        for (auto const& [e2, c2] : b._terms) {
          detail::add_to(out._terms, e1 + e2, K(c1 * c2));
        }
      }
      return out;
    }

    friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;

   private:
    term_map _terms;
  };

  ////////////////////////////////////////////////////////////////////////
  // TensorElement: L(Q) (x) k[u, u^-1]
  ////////////////////////////////////////////////////////////////////////

  // m (x) u^n.  The tensor product is graded by the Laurent factor alone,
  // so the exponent is the degree and orders first.
  struct TensorKey {
    Monomial mono;
    int      exponent = 0;

    int degree() const noexcept {
      return exponent;
    }

    std::size_t length() const noexcept {
      return mono.length();
    }

    friend bool operator==(TensorKey const&, TensorKey const&) = default;

    friend bool operator<(TensorKey const& a, TensorKey const& b) {
      if (a.exponent != b.exponent) {
        return a.exponent < b.exponent;
      }
      return a.mono < b.mono;
    }
  };

  template <typename K>
  class TensorElement {
   public:
    using scalar_type = K;
    using key_type    = TensorKey;
    using term_map    = std::map<TensorKey, K>;

    TensorElement() = default;

    explicit TensorElement(AlgebraPtr alg) : _alg(std::move(alg)) {}

    static TensorElement
    monomial(AlgebraPtr alg, Monomial m, int exponent, K coef = K(1)) {
      TensorElement out(std::move(alg));
      detail::add_to(out._terms, TensorKey{std::move(m), exponent}, coef);
      return out;
    }

    AlgebraPtr const& algebra() const noexcept {
      return _alg;
    }

    term_map const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    void add_term(TensorKey const& k, K const& coef) {
      detail::add_to(_terms, k, coef);
    }

    std::optional<int> homogeneous_degree() const {
      if (_terms.empty()) {
        return std::nullopt;
      }
      int d = _terms.begin()->first.exponent;
      for (auto const& [k, c] : _terms) {
        if (k.exponent != d) {
          return std::nullopt;
        }
      }
      return d;
    }

    TensorElement& operator+=(TensorElement const& o) {
      check(o);
      for (auto const& [k, c] : o._terms) {
        detail::add_to(_terms, k, c);
      }
      return *this;
    }

    TensorElement& operator-=(TensorElement const& o) {
      check(o);
      for (auto const& [k, c] : o._terms) {
        detail::add_to(_terms, k, K(-c));
      }
      return *this;
    }

    TensorElement& operator*=(K const& s) {
      if (leavitt::is_zero(s)) {
        _terms.clear();
        return *this;
      }
      for (auto& [k, c] : _terms) {
        c *= s;
      }
      return *this;
    }

    friend TensorElement operator+(TensorElement a, TensorElement const& b) {
      return a += b;
    }
    friend TensorElement operator-(TensorElement a, TensorElement const& b) {
      return a -= b;
    }
    friend TensorElement operator-(TensorElement a) {
      return a *= K(-1);
    }
    friend TensorElement operator*(K const& s, TensorElement a) {
      return a *= s;
    }

    friend bool operator==(TensorElement const& a, TensorElement const& b) {
      return same_algebra(a._alg, b._alg) && a._terms == b._terms;
    }

   private:
    void check(TensorElement const& o) const {
      if (!same_algebra(_alg, o._alg)) {
        throw AlgebraMismatch("tensor elements belong to different algebras");
      }
    }

    AlgebraPtr _alg;
    term_map   _terms;
  };

  template <typename K>
  TensorElement<K> tensor(Element<K> const& a, LaurentPoly<K> const& p) {
    TensorElement<K> out(a.algebra());
    for (auto const& [m, c] : a.terms()) {
      for (auto const& [e, d] : p.terms()) {
        out.add_term(TensorKey{m, e}, K(c * d));
      }
    }
    return out;
  }

  template <typename K>
  std::map<int, TensorElement<K>> degree_split(TensorElement<K> const& a) {
    std::map<int, TensorElement<K>> out;
    for (auto const& [k, c] : a.terms()) {
      auto [it, _] = out.try_emplace(k.exponent, a.algebra());
      it->second.add_term(k, c);
    }
    return out;
  }

}  // namespace leavitt

#endif  // LEAVITT_ELEMENT_HPP_
