#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qtwist/error.hpp"
#include "qtwist/scalars/qcoeff.hpp"

namespace qtwist {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QCoeff& x) { return x.is_zero(); }

inline std::string format_scalar(const Rational& x, int = 0) { return x.get_str(); }
inline std::string format_scalar(const QCoeff& x, int context_root = 0) {
  return x.to_string(context_root);
}

/// Rational number from "a" or "a/b".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.back() == ' ') s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational: " + std::string(text));
  if (r.get_den() == 0) throw DivisionByZero("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

template <class R>
R parse_scalar(std::string_view text, int context_root = 0);
template <>
inline Rational parse_scalar<Rational>(std::string_view text, int) {
  return parse_rational(text);
}
template <>
inline QCoeff parse_scalar<QCoeff>(std::string_view text, int context_root) {
  return QCoeff::parse(text, context_root);
}

/// Compile-time facts about a coefficient ring.
template <class R>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool quantum = false;
  static Rational q(int) { throw Error("q is not available over the rationals"); }
  static Rational t(int) { throw Error("t is not available over the rationals"); }
};

template <>
struct ScalarTraits<QCoeff> {
  static constexpr bool quantum = true;
  static QCoeff q(int d) { return QCoeff::q(d); }
  static QCoeff t(int d) { return QCoeff::t(d); }
};

inline Rational inverse(const Rational& x) {
  if (is_zero(x)) throw DivisionByZero("division by zero rational");
  return 1 / x;
}
inline QCoeff inverse(const QCoeff& x) { return x.inverse(); }

}  // namespace qtwist
