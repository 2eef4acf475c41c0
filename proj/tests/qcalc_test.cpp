#include <gtest/gtest.h>

#include <random>

#include "qtwist/qcalc/qexp.hpp"
#include "qtwist/twists/presentations.hpp"
#include "qtwist/twists/registry.hpp"
#include "qtwist/verify/checks.hpp"
#include "test_support.hpp"

using namespace qtwist;

namespace {

QCoeff q2() { return QCoeff::q(1) * QCoeff::q(1); }

struct Plane {
  Algebra<QCoeff> alg;
  TensorAlgebra<QCoeff> T;
  explicit Plane(int order, std::shared_ptr<const Presentation<QCoeff>> p = qplane_presentation())
      : alg(std::move(p), order), T({&alg}) {}
  Element<QCoeff> gen(const char* g, int k = 1) const { return T.gen(0, g).zeta_shifted(k, T.order()); }
};

}  // namespace

TEST(QExp, ZeroArgumentIsUnit) {
  Plane P(4);
  EXPECT_EQ(qexp(P.T, Element<QCoeff>(1), q2()), P.T.unit());
  EXPECT_EQ(qpow(P.T, Element<QCoeff>(1), P.T.scalar(q2()), q2()), P.T.unit());
}

TEST(QExp, SecondOrderCoefficient) {
  Plane P(2);
  auto z = P.gen("x");
  auto want = P.T.unit() + z + P.T.mul(z, z).scaled(inverse(QCoeff(1) + q2()));
  EXPECT_EQ(qexp(P.T, z, q2()), want);
}

TEST(QExp, ArgumentWithoutZetaIsRejected) {
  Plane P(3);
  EXPECT_THROW(qexp(P.T, P.T.gen(0, "x"), q2()), ZeroOrderArgument);
}

TEST(QExp, OrdinaryExponentialOfCommutingVariables) {
  Registry reg;
  auto& c = reg.context<Rational>("Usl3", 6);
  const auto& T = c.legs(1);
  auto x = c.gen("E12").zeta_shifted(1, 6), y = c.gen("E13").zeta_shifted(1, 6);
  const Rational one(1);
  EXPECT_EQ(qexp(T, x + y, one), T.mul(qexp(T, x, one), qexp(T, y, one)));
}

TEST(QExp, MergeNeedsTheQCommutationHypothesis) {
  Plane P(4);
  auto x = P.gen("x"), y = P.gen("y");
  EXPECT_NO_THROW(qexp_merge(P.T, y, x, q2()));
  EXPECT_THROW(qexp_merge(P.T, x, x, q2()), HypothesisViolation);
  EXPECT_THROW(qexp_merge(P.T, x, y, q2()), HypothesisViolation);
}

TEST(QExp, MergeOrderMatters) {
  // e(x) e(y) and e(y) e(x) differ once the q-commutation contributes.
  Plane P(4);
  auto x = P.gen("x"), y = P.gen("y");
  auto sum = qexp_singular(P.T, x + y, q2());
  EXPECT_EQ(sum, P.T.mul(qexp_singular(P.T, x, q2()), qexp_singular(P.T, y, q2())));
  EXPECT_NE(sum, P.T.mul(qexp_singular(P.T, y, q2()), qexp_singular(P.T, x, q2())));
}

TEST(QCalculusIdentities, HoldAtModerateOrder) {
  Registry reg;
  EXPECT_TRUE(verify::detail::identity_merge(6).passed);
  EXPECT_TRUE(verify::detail::identity_inverse(6).passed);
  EXPECT_TRUE(verify::detail::identity_heine(6).passed);
  EXPECT_TRUE(verify::detail::identity_heine_cartan(reg, 4).passed);
  EXPECT_TRUE(verify::detail::identity_five_term(6).passed);
}

TEST(QCalculusIdentities, FiveTermWithSwappedFactorsFails) {
  Plane P(5, five_term_presentation());
  auto u = P.gen("u"), v = P.gen("v");
  auto r = five_term_flip(P.T, u, v, q2());
  EXPECT_TRUE(r.residual.is_zero());
  auto swapped = P.T.mul(qexp_singular(P.T, v, q2()), qexp_singular(P.T, u, q2()));
  EXPECT_FALSE((swapped - r.rhs).is_zero());
}

TEST(QCalculusIdentities, FiveTermRejectsAlgebraWithoutHypotheses) {
  Plane P(4);
  EXPECT_THROW(five_term_flip(P.T, P.gen("x"), P.gen("x") + P.gen("y"), q2()), HypothesisViolation);
}

// Heine in a single variable: (1 - u)^{(v)} = e(u) e(q^{-2v} u)^{-1} for
// random integer v and random u = a zeta x with rational a.
TEST(QCalculusIdentities, HeineRandomScalarExponents) {
  std::mt19937 rng(test_support::kPropertySeed);
  std::uniform_int_distribution<int> vdist(-3, 3), num(-5, 5), den(1, 4);
  Plane P(6);
  for (int s = 0; s < 10; ++s) {
    const int v = vdist(rng);
    int n = num(rng);
    if (n == 0) n = 1;
    auto u = P.gen("x").scaled(QCoeff(Rational(Rational(n) / den(rng))));
    const QCoeff G = q2().pow(-v);
    auto lhs = qpow(P.T, u, P.T.scalar(G), q2());
    auto rhs = P.T.mul(qexp_singular(P.T, u, q2()), P.T.inverse(qexp_singular(P.T, u.scaled(G), q2())));
    EXPECT_EQ(lhs, rhs) << "v=" << v << " sample " << s;
    if (v != 0) {
      // exponent with the wrong sign
      auto wrong = P.T.mul(qexp_singular(P.T, u, q2()), P.T.inverse(qexp_singular(P.T, u.scaled(G.inverse()), q2())));
      EXPECT_NE(lhs, wrong) << "v=" << v;
    }
  }
}

TEST(QPower, ZeroExponentIsUnit) {
  Plane P(5);
  EXPECT_EQ(qpow(P.T, P.gen("x") + P.gen("y", 2), P.T.unit(), q2()), P.T.unit());
}

TEST(QPower, ClassicalPowerIsTheBinomialSeries) {
  Registry reg;
  auto& c = reg.context<Rational>("Usl3", 5);
  const auto& T = c.legs(1);
  auto u = c.gen("E12").zeta_shifted(1, 5) + c.gen("E13").zeta_shifted(2, 5);
  const Rational V(1, 2);
  Element<Rational> want = T.unit(), power = T.unit();
  Rational binom(1);
  for (int k = 1; k <= 5; ++k) {
    binom = binom * (V - (k - 1)) / k;
    power = T.mul(power, u);
    want += power.scaled(k % 2 ? Rational(-binom) : binom);
  }
  EXPECT_EQ(classical_pow(T, u, T.scalar(V)), want);
}
