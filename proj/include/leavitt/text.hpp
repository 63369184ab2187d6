// Text form of elements.
//
//   element := "0" | ["-"] term (("+" | "-") term)*
//   term    := [coef "*"] factor ("." factor)* [tensor]
//   coef    := integer ["/" integer]
//   factor  := "[" id "]" | id ("/" id)* ["^*" | "*"]
//   tensor  := "(x)" ("1" | "u" | "u^" integer)
//
// "a/b" is the real path ab, "a/b^*" its ghost b^* a^*.  Whitespace is
// ignored between tokens.  Identifiers match [A-Za-z_][A-Za-z0-9_']*.

#ifndef LEAVITT_TEXT_HPP_
#define LEAVITT_TEXT_HPP_

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "graph.hpp"
#include "monomial.hpp"
#include "rewrite.hpp"
#include "scalar.hpp"

namespace leavitt {

  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename K, typename Map, typename Body>
    std::string format_terms(Map const& terms, Body&& body) {
      if (terms.empty()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& [key, coef] : terms) {
        bool negative = scalar_traits<K>::is_negative(coef);
        K    mag      = negative ? K(-coef) : coef;
        if (first) {
          out += negative ? "-" : "";
        } else {
          out += negative ? " - " : " + ";
        }
        if (!(mag == K(1))) {
          out += scalar_traits<K>::to_string(mag) + " * ";
        }
        out += body(key);
        first = false;
      }
      return out;
    }
  }  // namespace detail

  template <typename K>
  std::string to_string(Element<K> const& a) {
    Graph const& g = a.algebra()->graph;
    return detail::format_terms<K>(
        a.terms(), [&](Monomial const& m) { return to_string(g, m); });
  }

  template <typename K>
  std::string to_string(TensorElement<K> const& a) {
    Graph const& g = a.algebra()->graph;
    return detail::format_terms<K>(a.terms(), [&](TensorKey const& k) {
      std::string u = k.exponent == 0   ? "1"
                      : k.exponent == 1 ? "u"
                                        : "u^" + std::to_string(k.exponent);
      return to_string(g, k.mono) + " (x) " + u;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  template <typename K>
  struct ParsedTerm {
    K                  coef = K(1);
    Word               word;
    std::optional<int> exponent;
  };

  namespace detail {

    class ExprParser {
     public:
      ExprParser(Graph const& g, std::string const& text)
          : _g(g), _s(text), _i(0) {}

      template <typename K>
      std::vector<ParsedTerm<K>> parse() {
        std::vector<ParsedTerm<K>> out;
        skip();
        if (peek() == '0') {
          std::size_t save = _i;
          ++_i;
          skip();
          if (_i == _s.size()) {
            return out;
          }
          _i = save;
        }
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
          negative = take() == '-';
        }
        while (true) {
          auto t = term<K>();
          if (negative) {
            t.coef = K(-t.coef);
          }
          out.push_back(std::move(t));
          skip();
          if (_i == _s.size()) {
            break;
          }
          char c = take();
          if (c != '+' && c != '-') {
            fail("expected '+' or '-'");
          }
          negative = c == '-';
        }
        return out;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what + " at offset " + std::to_string(_i) + " in \""
                         + _s + "\"");
      }

      void skip() {
        while (_i < _s.size()
               && std::isspace(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
      }

      char peek() {
        skip();
        return _i < _s.size() ? _s[_i] : '\0';
      }

      char take() {
        char c = peek();
        if (c == '\0') {
          fail("unexpected end of input");
        }
        ++_i;
        return c;
      }

      bool accept(std::string const& tok) {
        skip();
        if (_s.compare(_i, tok.size(), tok) == 0) {
          _i += tok.size();
          return true;
        }
        return false;
      }

      static bool id_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
      }

      static bool id_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_'
               || c == '\'';
      }

      std::string identifier() {
        skip();
        if (_i >= _s.size() || !id_start(_s[_i])) {
          fail("expected identifier");
        }
        std::size_t b = _i;
        while (_i < _s.size() && id_char(_s[_i])) {
          ++_i;
        }
        return _s.substr(b, _i - b);
      }

      std::string integer() {
        skip();
        std::size_t b = _i;
        if (_i < _s.size() && (_s[_i] == '-' || _s[_i] == '+')) {
          ++_i;
        }
        std::size_t digits = _i;
        while (_i < _s.size()
               && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
        if (_i == digits) {
          fail("expected integer");
        }
        return _s.substr(b, _i - b);
      }

      template <typename K>
      ParsedTerm<K> term() {
        ParsedTerm<K> t;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          std::string num = integer();
          if (peek() == '/') {
            ++_i;
            num += "/" + integer();
          }
          t.coef = scalar_traits<K>::parse(num);
          if (take() != '*') {
            fail("expected '*' after coefficient");
          }
        }
        factor(t.word);
        while (peek() == '.') {
          ++_i;
          factor(t.word);
        }
        if (accept("(x)")) {
          if (accept("u^")) {
            t.exponent = std::stoi(integer());
          } else if (accept("u")) {
            t.exponent = 1;
          } else if (accept("1")) {
            t.exponent = 0;
          } else {
            fail("expected Laurent monomial after '(x)'");
          }
        }
        return t;
      }

      void factor(Word& w) {
        if (peek() == '[') {
          ++_i;
          std::string v = identifier();
          if (take() != ']') {
            fail("expected ']'");
          }
          auto vi = _g.vertex_index(v);
          if (!vi) {
            fail("unknown vertex \"" + v + "\"");
          }
          w.push_back(Generator::vertex(*vi));
          return;
        }
        std::vector<index_type> path;
        while (true) {
          std::string e  = identifier();
          auto        ei = _g.edge_index(e);
          if (!ei) {
            fail("unknown edge \"" + e + "\"");
          }
          if (!path.empty() && _g.target(path.back()) != _g.source(*ei)) {
            fail("\"" + e + "\" does not continue the path");
          }
          path.push_back(*ei);
          if (peek() != '/') {
            break;
          }
          ++_i;
        }
        bool ghost = accept("^*");
        if (!ghost && _i < _s.size() && _s[_i] == '*') {
          ++_i;
          ghost = true;
        }
        if (ghost) {
          for (auto it = path.rbegin(); it != path.rend(); ++it) {
            w.push_back(Generator::ghost(*it));
          }
        } else {
          for (auto e : path) {
            w.push_back(Generator::edge(e));
          }
        }
      }

      Graph const& _g;
      std::string  _s;
      std::size_t  _i;
    };

  }  // namespace detail

  template <typename K>
  std::vector<ParsedTerm<K>> parse_terms(Graph const& g, std::string const& text) {
    return detail::ExprParser(g, text).template parse<K>();
  }

  template <typename K>
  Element<K> parse_element(AlgebraPtr const& alg, std::string const& text) {
    std::vector<std::pair<Word, K>> combination;
    for (auto& t : parse_terms<K>(alg->graph, text)) {
      if (t.exponent) {
        throw ParseError("unexpected tensor factor in \"" + text + "\"");
      }
      combination.emplace_back(std::move(t.word), t.coef);
    }
    if (combination.empty()) {
      return Element<K>(alg);
    }
    return normal_form<K>(alg, combination);
  }

  template <typename K>
  TensorElement<K> parse_tensor(AlgebraPtr const& alg, std::string const& text) {
    TensorElement<K> out(alg);
    for (auto& t : parse_terms<K>(alg->graph, text)) {
      auto nf = normal_form<K>(alg, t.word);
      for (auto const& [m, c] : nf.terms()) {
        out.add_term(TensorKey{m, t.exponent.value_or(0)}, K(c * t.coef));
      }
    }
    return out;
  }

}  // namespace leavitt

#endif  // LEAVITT_TEXT_HPP_
