// Coefficient fields.
//
// Everything downstream is templated on the scalar type K.  A scalar needs
// construction from int, the four field operations, equality, and a
// scalar_traits specialisation for text conversion.

#ifndef LEAVITT_SCALAR_HPP_
#define LEAVITT_SCALAR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace leavitt {

  using Rational = boost::multiprecision::cpp_rational;

  template <typename K>
  struct scalar_traits;

  template <>
  struct scalar_traits<Rational> {
    static std::string to_string(Rational const& q) {
      return q.str();
    }

    static bool is_negative(Rational const& q) {
      return q < 0;
    }

    // Accepts "p" or "p/q" with an optional sign.
    static Rational parse(std::string const& text) {
      try {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
          return Rational(boost::multiprecision::cpp_int(text));
        }
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) {
          throw std::invalid_argument("zero denominator in \"" + text + "\"");
        }
        return Rational(num, den);
      } catch (std::runtime_error const&) {
        throw std::invalid_argument("malformed rational \"" + text + "\"");
      }
    }
  };

  // The prime field Z/PZ.
  template <std::uint32_t P>
  class ModP {
    static_assert(P >= 2, "modulus must be at least 2");

   public:
    ModP() = default;

    ModP(long long v)  // NOLINT(runtime/explicit)
        : _v(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P)
                                        % P)) {}

    std::uint32_t value() const noexcept {
      return _v;
    }

    ModP& operator+=(ModP o) {
      _v = static_cast<std::uint32_t>((std::uint64_t{_v} + o._v) % P);
      return *this;
    }

    ModP& operator-=(ModP o) {
      _v = static_cast<std::uint32_t>((std::uint64_t{_v} + P - o._v) % P);
      return *this;
    }

    ModP& operator*=(ModP o) {
      _v = static_cast<std::uint32_t>((std::uint64_t{_v} * o._v) % P);
      return *this;
    }

    ModP& operator/=(ModP o) {
      return *this *= o.inverse();
    }

    ModP inverse() const {
      if (_v == 0) {
        throw std::domain_error("division by zero in prime field");
      }
      // Fermat.
      ModP          result(1);
      ModP          base = *this;
      std::uint64_t e    = P - 2;
      while (e > 0) {
        if (e & 1) {
          result *= base;
        }
        base *= base;
        e >>= 1;
      }
      return result;
    }

    friend ModP operator+(ModP a, ModP b) {
      return a += b;
    }
    friend ModP operator-(ModP a, ModP b) {
      return a -= b;
    }
    friend ModP operator*(ModP a, ModP b) {
      return a *= b;
    }
    friend ModP operator/(ModP a, ModP b) {
      return a /= b;
    }
    friend ModP operator-(ModP a) {
      return ModP(0) - a;
    }
    friend bool operator==(ModP, ModP) = default;

   private:
    std::uint32_t _v = 0;
  };

  template <std::uint32_t P>
  struct scalar_traits<ModP<P>> {
    static std::string to_string(ModP<P> const& x) {
      return std::to_string(x.value());
    }

    static bool is_negative(ModP<P> const&) {
      return false;
    }

    static ModP<P> parse(std::string const& text) {
      auto slash = text.find('/');
      if (slash == std::string::npos) {
        return ModP<P>(std::stoll(text));
      }
      return ModP<P>(std::stoll(text.substr(0, slash)))
             / ModP<P>(std::stoll(text.substr(slash + 1)));
    }
  };

  template <typename K>
  bool is_zero(K const& x) {
    return x == K(0);
  }

}  // namespace leavitt

#endif  // LEAVITT_SCALAR_HPP_
