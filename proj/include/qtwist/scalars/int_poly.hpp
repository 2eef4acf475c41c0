#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"

namespace qtwist {

/// Dense polynomial in one variable with arbitrary precision integer
/// coefficients. c_[i] multiplies t^i and the top coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c) {
    if (c != 0) c_.emplace_back(c);
  }
  explicit IntPoly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit IntPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }

  static IntPoly monomial(const mpz_class& c, int degree) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(degree + 1, mpz_class(0));
    p.c_[degree] = c;
    return p;
  }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int i) const {
    return (i >= 0 && i < int(c_.size())) ? c_[i] : mpz_class(0);
  }
  const mpz_class& lead() const { return c_.back(); }

  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return int(i);
    return 0;
  }

  /// Divides by t^k; the caller guarantees k <= low_degree().
  IntPoly shifted_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    return IntPoly(std::vector<mpz_class>(c_.begin() + k, c_.end()));
  }
  IntPoly shifted_up(int k) const {
    if (k == 0 || is_zero()) return *this;
    std::vector<mpz_class> v(k, mpz_class(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  IntPoly& operator+=(const IntPoly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
    trim();
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() == 1) return b * a.c_[0];
    if (b.c_.size() == 1) return a * b.c_[0];
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(IntPoly a, const mpz_class& s) {
    if (s == 0) return {};
    for (auto& x : a.c_) x *= s;
    return a;
  }

  /// gcd of the coefficients, carrying the sign of the leading coefficient.
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
  }
  void divide_exact(const mpz_class& s) {
    for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  }
  IntPoly primitive_part() const {
    if (is_zero()) return {};
    IntPoly r = *this;
    r.divide_exact(content());
    return r;
  }

  /// Pseudo-remainder of a by b: lc(b)^k a = q b + r with deg r < deg b.
  static IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    while (!a.is_zero() && a.degree() >= db) {
      const int shift = a.degree() - db;
      mpz_class la = a.lead();
      for (auto& x : a.c_) x *= lb;
      for (int j = 0; j <= db; ++j) a.c_[j + shift] -= la * b.c_[j];
      a.trim();
    }
    return a;
  }

  /// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
  static IntPoly gcd(const IntPoly& x, const IntPoly& y) {
    if (x.is_zero()) return y.is_zero() ? IntPoly{} : y.primitive_part();
    if (y.is_zero()) return x.primitive_part();
    if (x.is_constant() || y.is_constant()) return IntPoly(1);
    IntPoly a = x.primitive_part(), b = y.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      IntPoly r = pseudo_remainder(a, b);
      a = std::move(b);
      b = r.is_zero() ? IntPoly{} : r.primitive_part();
      if (!b.is_zero() && b.is_constant()) return IntPoly(1);
    }
    return a.primitive_part();
  }

  /// Exact quotient a / b over the integers; throws if b does not divide a.
  static IntPoly divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return {};
    if (b.is_constant()) {
      IntPoly r = a;
      for (auto& x : r.c_) {
        if (!mpz_divisible_p(x.get_mpz_t(), b.c_[0].get_mpz_t()))
          throw Error("inexact polynomial division");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), b.c_[0].get_mpz_t());
      }
      return r;
    }
    IntPoly rem = a;
    const int db = b.degree();
    if (a.degree() < db) throw Error("inexact polynomial division");
    std::vector<mpz_class> q(a.degree() - db + 1, mpz_class(0));
    while (!rem.is_zero() && rem.degree() >= db) {
      const int shift = rem.degree() - db;
      if (!mpz_divisible_p(rem.lead().get_mpz_t(), b.lead().get_mpz_t()))
        throw Error("inexact polynomial division");
      mpz_class f = rem.lead() / b.lead();
      q[shift] = f;
      for (int j = 0; j <= db; ++j) rem.c_[j + shift] -= f * b.c_[j];
      rem.trim();
    }
    if (!rem.is_zero()) throw Error("inexact polynomial division");
    return IntPoly(std::move(q));
  }

  mpz_class value_at_one() const {
    mpz_class s = 0;
    for (const auto& x : c_) s += x;
    return s;
  }
  /// Multiplicity of t = 1 as a root.
  int multiplicity_at_one() const {
    if (is_zero()) throw Error("multiplicity of the zero polynomial");
    IntPoly p = *this;
    const IntPoly lin(std::vector<mpz_class>{-1, 1});
    int k = 0;
    while (p.value_at_one() == 0) {
      p = divide(p, lin);
      ++k;
    }
    return k;
  }
  mpq_class value_at(const mpq_class& x) const {
    mpq_class s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + mpq_class(*it);
    return s;
  }

  /// Descending powers, e.g. "3*t^2-t+1".
  std::string to_string(char var = 't') const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const mpz_class& c = c_[i];
      if (c == 0) continue;
      mpz_class a = abs(c);
      if (c < 0)
        s += "-";
      else if (!s.empty())
        s += "+";
      if (i == 0) {
        s += a.get_str();
        continue;
      }
      if (a != 1) s += a.get_str() + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

  /// Inverse of to_string; accepts any order of terms and repeated powers.
  static IntPoly parse(std::string_view text, char var = 't') {
    IntPoly r;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (i == text.size()) break;
      int sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-' in polynomial: " + std::string(text));
      }
      first = false;
      mpz_class c = 1;
      bool have_num = false;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i > start) {
        c = mpz_class(std::string(text.substr(start, i - start)));
        have_num = true;
      }
      skip();
      int power = 0;
      if (have_num && i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
      if (i < text.size() && text[i] == var) {
        ++i;
        power = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          std::size_t s2 = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (i == s2) throw ParseError("missing exponent in polynomial");
          power = std::stoi(std::string(text.substr(s2, i - s2)));
        }
      } else if (!have_num) {
        throw ParseError("malformed polynomial term: " + std::string(text));
      }
      r += monomial(sign * c, power);
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpz_class> c_;
};

}  // namespace qtwist
