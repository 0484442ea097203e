#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mac {

enum class FieldTag { F2, Q };

inline const char* field_name(FieldTag f) { return f == FieldTag::F2 ? "f2" : "q"; }

inline FieldTag parse_field(const std::string& s) {
  if (s == "f2" || s == "F2") return FieldTag::F2;
  if (s == "q" || s == "Q") return FieldTag::Q;
  throw std::invalid_argument("unknown field '" + s + "' (expected f2 or q)");
}

struct Gf2 {
  std::uint8_t v = 0;
  Gf2() = default;
  Gf2(int x) : v(static_cast<std::uint8_t>(x & 1)) {}
  friend Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.v ^ b.v); }
  friend Gf2 operator-(Gf2 a, Gf2 b) { return Gf2(a.v ^ b.v); }
  friend Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.v & b.v); }
  friend Gf2 operator/(Gf2 a, Gf2 b) {
    if (!b.v) throw std::domain_error("division by zero in F2");
    return a;
  }
  Gf2 operator-() const { return *this; }
  Gf2& operator+=(Gf2 b) { v ^= b.v; return *this; }
  Gf2& operator-=(Gf2 b) { v ^= b.v; return *this; }
  Gf2& operator*=(Gf2 b) { v &= b.v; return *this; }
  friend bool operator==(Gf2 a, Gf2 b) { return a.v == b.v; }
};

using Rational = mpq_class;

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Gf2> {
  static constexpr FieldTag tag = FieldTag::F2;
  static bool is_zero(Gf2 x) { return x.v == 0; }
  static Gf2 from_int(long x) { return Gf2(static_cast<int>(x & 1)); }
  static Gf2 from_rational(const Rational& q) {
    // denominators must be odd; reduce numerator * den^{-1} = numerator mod 2
    if (mpz_even_p(q.get_den().get_mpz_t())) throw std::domain_error("rational with even denominator has no F2 image");
    return Gf2(mpz_odd_p(q.get_num().get_mpz_t()) ? 1 : 0);
  }
  static std::string to_string(Gf2 x) { return x.v ? "1" : "0"; }
  static Gf2 parse(const std::string& s) { return from_rational(Rational(s)); }
};

template <>
struct FieldTraits<Rational> {
  static constexpr FieldTag tag = FieldTag::Q;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from_int(long x) { return Rational(x); }
  static Rational from_rational(const Rational& q) { return q; }
  static std::string to_string(const Rational& x) { return x.get_str(); }
  static Rational parse(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return q;
  }
};

template <class F>
inline bool is_zero(const F& x) { return FieldTraits<F>::is_zero(x); }

// Calls fn.template operator()<F>() with the field type selected by tag.
template <class Fn>
decltype(auto) with_field(FieldTag tag, Fn&& fn) {
  if (tag == FieldTag::F2) return fn.template operator()<Gf2>();
  return fn.template operator()<Rational>();
}

}  // namespace mac
