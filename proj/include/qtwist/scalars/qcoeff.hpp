#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <ostream>
#include <string>
#include <string_view>

#include "qtwist/error.hpp"
#include "qtwist/scalars/int_poly.hpp"

namespace qtwist {

/// Exact element of Q(t) where the deformation parameter is q = t^d.
///
/// Stored as t^shift * num / den with num(0) != 0, den(0) != 0, gcd(num, den) = 1,
/// coprime integer contents and a positive leading coefficient in den. The
/// root degree d is 0 for constants, which combine with any d.
class QCoeff {
 public:
  QCoeff() = default;
  QCoeff(long c) : num_(c), den_(1) {}
  QCoeff(const mpz_class& c) : num_(c), den_(1) {}
  QCoeff(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

  QCoeff(IntPoly num, IntPoly den, int root_degree, int shift = 0)
      : num_(std::move(num)), den_(std::move(den)), shift_(shift), root_(root_degree) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator in QCoeff");
    canonicalize();
  }

  /// The variable t with q = t^d.
  static QCoeff t(int root_degree) { return QCoeff(IntPoly(1), IntPoly(1), root_degree, 1); }
  /// q = t^d.
  static QCoeff q(int root_degree) {
    return QCoeff(IntPoly(1), IntPoly(1), root_degree, root_degree);
  }
  /// t^k for any integer k.
  static QCoeff t_power(int k, int root_degree) {
    return QCoeff(IntPoly(1), IntPoly(1), root_degree, k);
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_ == IntPoly(1) && den_ == IntPoly(1); }
  bool is_constant() const { return shift_ == 0 && num_.is_constant() && den_.is_constant(); }
  int root_degree() const { return root_; }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  int shift() const { return shift_; }

  /// Full numerator and denominator polynomials with the t-power folded in.
  IntPoly full_num() const { return shift_ > 0 ? num_.shifted_up(shift_) : num_; }
  IntPoly full_den() const { return shift_ < 0 ? den_.shifted_up(-shift_) : den_; }

  mpq_class to_rational() const {
    if (!is_constant()) throw Error("QCoeff is not a constant: " + to_string());
    if (is_zero()) return 0;
    mpq_class r(num_.coeff(0), den_.coeff(0));
    r.canonicalize();
    return r;
  }

  /// Value at t = 1 (so q = 1); throws PoleAtOne if the denominator vanishes there.
  mpq_class specialize_q1() const {
    if (is_zero()) return 0;
    mpz_class d = den_.value_at_one();
    if (d == 0) throw PoleAtOne("pole at q=1: " + to_string());
    mpq_class r(num_.value_at_one(), d);
    r.canonicalize();
    return r;
  }

  /// Order of the pole at q = 1 (0 when regular there).
  int pole_order_at_one() const {
    if (is_zero()) return 0;
    return std::max(0, den_.multiplicity_at_one() - num_.multiplicity_at_one());
  }

  friend bool operator==(const QCoeff& a, const QCoeff& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_ &&
           (a.root_ == b.root_ || a.root_ == 0 || b.root_ == 0);
  }
  friend bool operator!=(const QCoeff& a, const QCoeff& b) { return !(a == b); }

  QCoeff operator-() const {
    QCoeff r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend QCoeff operator+(const QCoeff& a, const QCoeff& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int root = combine_roots(a, b);
    const int s = std::min(a.shift_, b.shift_);
    IntPoly an = a.num_.shifted_up(a.shift_ - s);
    IntPoly bn = b.num_.shifted_up(b.shift_ - s);
    QCoeff r;
    r.root_ = root;
    r.shift_ = s;
    if (a.den_ == b.den_) {
      r.num_ = an + bn;
      r.den_ = a.den_;
    } else if (a.den_.is_constant() && b.den_.is_constant()) {
      r.num_ = an * b.den_.coeff(0) + bn * a.den_.coeff(0);
      r.den_ = IntPoly(a.den_.coeff(0) * b.den_.coeff(0));
    } else {
      r.num_ = an * b.den_ + bn * a.den_;
      r.den_ = a.den_ * b.den_;
    }
    r.canonicalize();
    return r;
  }
  friend QCoeff operator-(const QCoeff& a, const QCoeff& b) { return a + (-b); }

  friend QCoeff operator*(const QCoeff& a, const QCoeff& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QCoeff r;
    r.root_ = combine_roots(a, b);
    r.shift_ = a.shift_ + b.shift_;
    if (a.den_.is_constant() && b.den_.is_constant() &&
        (a.num_.is_constant() || b.num_.is_constant())) {
      r.num_ = a.num_ * b.num_;
      r.den_ = IntPoly(a.den_.coeff(0) * b.den_.coeff(0));
      r.fix_content();
      return r;
    }
    IntPoly g1 = IntPoly::gcd(a.num_, b.den_);
    IntPoly g2 = IntPoly::gcd(b.num_, a.den_);
    IntPoly an = g1.is_constant() ? a.num_ : IntPoly::divide(a.num_, g1);
    IntPoly bd = g1.is_constant() ? b.den_ : IntPoly::divide(b.den_, g1);
    IntPoly bn = g2.is_constant() ? b.num_ : IntPoly::divide(b.num_, g2);
    IntPoly ad = g2.is_constant() ? a.den_ : IntPoly::divide(a.den_, g2);
    r.num_ = an * bn;
    r.den_ = ad * bd;
    r.fix_content();
    return r;
  }

  QCoeff inverse() const {
    if (is_zero()) throw DivisionByZero("division by zero QCoeff");
    QCoeff r;
    r.root_ = root_;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lead() < 0) {
      r.num_ = -r.num_;
      r.den_ = -r.den_;
    }
    return r;
  }
  friend QCoeff operator/(const QCoeff& a, const QCoeff& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero QCoeff");
    return a * b.inverse();
  }

  QCoeff& operator+=(const QCoeff& b) { return *this = *this + b; }
  QCoeff& operator-=(const QCoeff& b) { return *this = *this - b; }
  QCoeff& operator*=(const QCoeff& b) { return *this = *this * b; }
  QCoeff& operator/=(const QCoeff& b) { return *this = *this / b; }

  QCoeff pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    QCoeff r(1), base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  /// Text form "(p(t))/(q(t)) [q=t^d]"; constants use the supplied context degree.
  std::string to_string(int context_root = 0) const {
    int d = root_ != 0 ? root_ : (context_root != 0 ? context_root : 1);
    return "(" + full_num().to_string() + ")/(" + full_den().to_string() + ") [q=t^" +
           std::to_string(d) + "]";
  }

  /// Parses "(p)/(q) [q=t^d]"; the denominator and the bracket are optional.
  static QCoeff parse(std::string_view text, int context_root = 0) {
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && text[i] == ' ') ++i;
    };
    auto group = [&]() -> IntPoly {
      skip();
      if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' in QCoeff: " + std::string(text));
      std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw ParseError("unbalanced QCoeff: " + std::string(text));
      IntPoly p = IntPoly::parse(text.substr(i + 1, close - i - 1));
      i = close + 1;
      return p;
    };
    IntPoly num = group(), den(1);
    skip();
    if (i < text.size() && text[i] == '/') {
      ++i;
      den = group();
    }
    skip();
    int d = context_root;
    if (i < text.size()) {
      const std::string_view tag = "[q=t^";
      if (text.substr(i, tag.size()) != tag) throw ParseError("bad root tag in QCoeff: " + std::string(text));
      i += tag.size();
      std::size_t close = text.find(']', i);
      if (close == std::string_view::npos) throw ParseError("bad root tag in QCoeff: " + std::string(text));
      d = std::stoi(std::string(text.substr(i, close - i)));
      i = close + 1;
      skip();
      if (i != text.size()) throw ParseError("trailing text in QCoeff: " + std::string(text));
      if (context_root != 0 && d != context_root)
        throw RootDegreeMismatch("root degree " + std::to_string(d) + " in a q=t^" +
                                 std::to_string(context_root) + " context");
    }
    if (den.is_zero()) throw DivisionByZero("zero denominator in QCoeff: " + std::string(text));
    return QCoeff(num, den, d == 0 ? 1 : d);
  }

  friend std::ostream& operator<<(std::ostream& os, const QCoeff& c) { return os << c.to_string(); }

 private:
  static int combine_roots(const QCoeff& a, const QCoeff& b) {
    if (a.root_ == 0) return b.root_;
    if (b.root_ == 0 || a.root_ == b.root_) return a.root_;
    throw RootDegreeMismatch("mixing q=t^" + std::to_string(a.root_) + " and q=t^" +
                             std::to_string(b.root_));
  }

  void canonicalize() {
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      shift_ = 0;
      root_ = 0;
      return;
    }
    int ln = num_.low_degree(), ld = den_.low_degree();
    if (ln) num_ = num_.shifted_down(ln);
    if (ld) den_ = den_.shifted_down(ld);
    shift_ += ln - ld;
    if (!num_.is_constant() && !den_.is_constant()) {
      IntPoly g = IntPoly::gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = IntPoly::divide(num_, g);
        den_ = IntPoly::divide(den_, g);
      }
    }
    fix_content();
  }

  void fix_content() {
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      shift_ = 0;
      root_ = 0;
      return;
    }
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cd < 0) g = -g;
    if (g != 1) {
      num_.divide_exact(g);
      den_.divide_exact(g);
    }
    if (shift_ == 0 && num_.is_constant() && den_.is_constant()) root_ = 0;
  }

  IntPoly num_;
  IntPoly den_{1};
  int shift_ = 0;
  int root_ = 0;
};

}  // namespace qtwist
