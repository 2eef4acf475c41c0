#include <gtest/gtest.h>

#include <random>

#include "qtwist/scalars/int_poly.hpp"
#include "qtwist/scalars/qcoeff.hpp"
#include "qtwist/scalars/qnumbers.hpp"
#include "qtwist/scalars/zeta_series.hpp"

using namespace qtwist;

namespace {

// Evaluating at a rational point is a ring map Q(t) -> Q; this is the oracle
// for the field operations below.
mpq_class eval(const QCoeff& c, const mpq_class& x) {
  mpq_class n = c.full_num().value_at(x), d = c.full_den().value_at(x);
  return n / d;
}

QCoeff random_qcoeff(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3), shift(-2, 2);
  auto poly = [&] {
    std::vector<mpz_class> c;
    int n = deg(rng);
    for (int i = 0; i <= n; ++i) c.emplace_back(coef(rng));
    return IntPoly(c);
  };
  IntPoly num = poly(), den = poly();
  while (den.is_zero()) den = poly();
  return QCoeff(num, den, d, shift(rng));
}

}  // namespace

TEST(IntPoly, ParseFormatRoundTrip) {
  for (const char* s : {"3*t^2-t+1", "-t^5+7", "t", "0", "-12*t^3+t^2-2*t"}) {
    EXPECT_EQ(IntPoly::parse(s).to_string(), s);
  }
  EXPECT_EQ(IntPoly::parse("1 + t + t").to_string(), "2*t+1");
}

TEST(IntPoly, GcdAndExactDivision) {
  IntPoly a = IntPoly::parse("t^2-1"), b = IntPoly::parse("2*t^2+4*t+2");
  EXPECT_EQ(IntPoly::gcd(a, b).to_string(), "t+1");
  EXPECT_EQ(IntPoly::divide(a, IntPoly::parse("t-1")).to_string(), "t+1");
  EXPECT_THROW(IntPoly::divide(a, IntPoly::parse("t+2")), Error);
}

TEST(QCoeff, CanonicalForm) {
  QCoeff c(IntPoly::parse("t^2-1"), IntPoly::parse("t-1"), 1);
  EXPECT_EQ(c.to_string(), "(t+1)/(1) [q=t^1]");
  QCoeff d(IntPoly::parse("-4*t^3"), IntPoly::parse("-6*t"), 3);
  EXPECT_EQ(d.to_string(), "(2*t^2)/(3) [q=t^3]");
  EXPECT_EQ(QCoeff::q(3).to_string(), "(t^3)/(1) [q=t^3]");
  EXPECT_EQ(QCoeff::q(1).inverse().to_string(), "(1)/(t) [q=t^1]");
}

TEST(QCoeff, TextRoundTrip) {
  std::mt19937 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    QCoeff c = random_qcoeff(rng, 3);
    std::string s = c.to_string(3);
    EXPECT_EQ(QCoeff::parse(s, 3), c) << s;
    EXPECT_EQ(QCoeff::parse(s, 3).to_string(3), s);
  }
}

TEST(QCoeff, FieldOperationsAgreeWithEvaluation) {
  std::mt19937 rng(7);
  const mpq_class points[] = {mpq_class(2), mpq_class(-3, 5), mpq_class(7, 2)};
  for (int i = 0; i < 300; ++i) {
    QCoeff a = random_qcoeff(rng, 1), b = random_qcoeff(rng, 1);
    for (const auto& x : points) {
      auto ok = [&](const QCoeff& v) { return v.full_den().value_at(x) != 0; };
      if (!ok(a) || !ok(b) || !ok(a * b) || !ok(a + b) || !ok(a - b)) continue;
      EXPECT_EQ(eval(a + b, x), eval(a, x) + eval(b, x));
      EXPECT_EQ(eval(a - b, x), eval(a, x) - eval(b, x));
      EXPECT_EQ(eval(a * b, x), eval(a, x) * eval(b, x));
      if (!b.is_zero() && eval(b, x) != 0 && ok(a / b)) EXPECT_EQ(eval(a / b, x), eval(a, x) / eval(b, x));
    }
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(QCoeff, Errors) {
  EXPECT_THROW(QCoeff(1) / QCoeff(0), DivisionByZero);
  EXPECT_THROW(QCoeff::q(1) + QCoeff::q(3), RootDegreeMismatch);
  QCoeff q = QCoeff::q(1);
  QCoeff pole = QCoeff(1) / (q - QCoeff(1));
  EXPECT_THROW(pole.specialize_q1(), PoleAtOne);
  EXPECT_THROW(QCoeff::parse("(t)/(0) [q=t^1]"), DivisionByZero);
  EXPECT_THROW(QCoeff::parse("(t)/(1) [q=t^3]", 1), RootDegreeMismatch);
}

TEST(QCoeff, SpecializeAtOne) {
  QCoeff q = QCoeff::q(3);
  QCoeff c = (q * q - QCoeff(1)) / (q - QCoeff(1));  // q + 1
  EXPECT_EQ(c.specialize_q1(), mpq_class(2));
  // (q^{-2} - 1)/(q - 1) -> -2
  QCoeff e = (q.pow(-2) - QCoeff(1)) / (q - QCoeff(1));
  EXPECT_EQ(e.specialize_q1(), mpq_class(-2));
}

TEST(QNumbers, Factorials) {
  // (3)_{q^2}! = (1)(1+q^2)(1+q^2+q^4)
  QCoeff q = QCoeff::q(1), q2 = q * q, one(1);
  QCoeff expected = (one + q2) * (one + q2 + q2 * q2);
  EXPECT_EQ(qint_factorial(3, 1), expected);
  EXPECT_EQ(qint_factorial(5, 1).specialize_q1(), mpq_class(120));
  EXPECT_EQ(q_factorial<Rational>(6, Rational(1)), Rational(720));
  // (k)_Q = (Q^k - 1)/(Q - 1)
  for (int k = 0; k < 7; ++k) EXPECT_EQ(q_number(k, q2), (q2.pow(k) - one) / (q2 - one));
}

TEST(ZetaSeries, InverseAndTruncation) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    ZetaSeries<Rational> s(Rational(1 + (trial % 3)));
    for (int k = 1; k <= 6; ++k) { Rational c(coef(rng), 1 + trial % 4); c.canonicalize(); s.add_term(k, c); }
    const int n = 6;
    auto prod = s.mul(s.inverse(n), n);
    EXPECT_EQ(prod, ZetaSeries<Rational>(Rational(1)));
  }
  ZetaSeries<Rational> z = ZetaSeries<Rational>::zeta_power(2);
  EXPECT_TRUE(z.mul(z, 3).is_zero_series());
  EXPECT_EQ(z.mul(z, 4), ZetaSeries<Rational>::zeta_power(4));
  EXPECT_THROW(z.inverse(4), NotInvertible);
}
