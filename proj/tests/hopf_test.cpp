#include <gtest/gtest.h>

#include "qtwist/hopf/cocycle.hpp"
#include "qtwist/twists/registry.hpp"
#include "qtwist/verify/checks.hpp"
#include "test_support.hpp"

using namespace qtwist;

TEST(Coproduct, PrimitiveSquared) {
  Registry reg;
  auto& c = reg.context<Rational>("Usl3", 2);
  const auto& T2 = c.legs(2);
  auto x = c.legs(1).mul(c.gen("E12"), c.gen("E12"));
  auto want = T2.parse_monomial({"E12 E12", ""}) + T2.parse_monomial({"E12", "E12"}).scaled(Rational(2)) +
              T2.parse_monomial({"", "E12 E12"});
  EXPECT_EQ(c.delta(x), want);
}

TEST(Coproduct, QuantumGenerators) {
  Registry reg;
  auto& c = reg.context<QCoeff>("D2", 2);
  const auto& T2 = c.legs(2);
  EXPECT_EQ(c.delta(c.gen("e_d-a")), T2.parse_monomial({"K", "e_d-a"}) + T2.parse_monomial({"e_d-a", ""}));
  EXPECT_EQ(c.delta(c.gen("K")), T2.parse_monomial({"K", "K"}));
}

TEST(Coproduct, ShippedTablesAreAlgebraMapsAndCoassociative) {
  Registry reg;
  for (const auto& a : {"D2", "F2cl", "F3cl", "Usl3"}) {
    auto o = is_quantum_algebra(a) ? verify::detail::coproduct_structure<QCoeff>(reg, a, 3)
                                   : verify::detail::coproduct_structure<Rational>(reg, a, 3);
    EXPECT_TRUE(o.passed) << a << ": " << o.detail;
  }
}

TEST(Cocycle, UnitTwistHasZeroResidual) {
  Registry reg;
  auto& c = reg.context<Rational>("Usl3", 3);
  EXPECT_TRUE(cocycle_residual(c, c.legs(2).unit()).is_zero());
  EXPECT_EQ(associator(c, c.legs(2).unit()), c.legs(3).unit());
}

TEST(Cocycle, ComposingWithTheUnitTwistChangesNothing) {
  Registry reg;
  auto& c = reg.context<Rational>("Usl3", 3);
  const auto& psi = reg.evaluator<Rational>(3).twist("jordanian_3");
  Twist<Rational> unit("unit", 2);
  EXPECT_EQ(twist_compose(psi, unit).expand(c.legs(2)), psi.expand(c.legs(2)));
  EXPECT_EQ(twist_compose(unit, psi).expand(c.legs(2)), psi.expand(c.legs(2)));
}

TEST(Cocycle, JordanianFirstOrder) {
  Registry reg;
  auto& c = reg.context<Rational>("Usl3", 3);
  const auto& T2 = c.legs(2);
  auto F = reg.evaluator<Rational>(3).twist("jordanian_3").expand(T2);
  auto want = T2.parse_monomial({"E32", "E13"}) - T2.parse_monomial({"D1", "E12"});
  EXPECT_EQ(F.zeta_component(0), T2.unit());
  EXPECT_EQ(F.zeta_component(1), want);
  EXPECT_TRUE(cocycle_residual(c, F).is_zero());
}

TEST(Cocycle, AffineSl2TwistHasTrivialAssociator) {
  Registry reg;
  auto& c = reg.context<QCoeff>("D2", 4);
  auto F = reg.evaluator<QCoeff>(4).twist("affine_twist_2").expand(c.legs(2));
  EXPECT_EQ(associator(c, F), c.legs(3).unit());
}

TEST(Cocycle, SignFlippedFactorBreaksTheEquation) {
  test_support::ScratchData data;
  data.replace("catalog/twists.cat", "twist jordanian_3 on Usl3 = exp(zeta [E32 | E13 einv]) * exp([D1 | sigma])",
               "twist jordanian_3 on Usl3 = exp(zeta [E32 | E13 einv]) * exp(-[D1 | sigma])");
  Registry reg(data.path());
  auto& c = reg.context<Rational>("Usl3", 4);
  auto d = cocycle_residual(c, reg.evaluator<Rational>(4).twist("jordanian_3").expand(c.legs(2)));
  ASSERT_FALSE(d.is_zero());
  EXPECT_EQ(d.min_zeta_power(), 2);
}

TEST(TwistedCoproduct, JordanianDisplays) {
  Registry reg;
  auto sl3 = verify::detail::psi_coproduct(reg, "Usl3", "jordanian_3",
                                           {{"E23", "jordanian_3_coproduct_E23"},
                                            {"D2", "jordanian_3_coproduct_D2"},
                                            {"E13 einv", "jordanian_3_coproduct_E13einv"}},
                                           4);
  EXPECT_TRUE(sl3.passed) << sl3.detail;
  auto sl4 = verify::detail::psi_coproduct(
      reg, "Usl4", "jordanian_4", {{"E23", "jordanian_4_coproduct_E23"}, {"E24p", "jordanian_4_coproduct_E24p"}}, 3);
  EXPECT_TRUE(sl4.passed) << sl4.detail;
}

TEST(TwistedCoproduct, PrintedPrimitiveCartanIsNotPrimitive) {
  Registry reg;
  auto d = twisted_coproduct_residual<Rational>(reg, "Usl3", "jordanian_3", "D1", "jordanian_3_coproduct_D1_printed", 3);
  EXPECT_FALSE(d.is_zero());
  EXPECT_EQ(d.min_zeta_power(), 1);
}

// Multiplicativity on random words, fixed seed.
TEST(Properties, CoproductIsMultiplicativeOnRandomWords) {
  Registry reg;
  const auto seed = test_support::kPropertySeed;
  auto d2 = verify::detail::random_multiplicativity<QCoeff>(reg, "D2", "", 4, seed, 12);
  EXPECT_TRUE(d2.passed) << d2.detail;
  auto f3 = verify::detail::random_multiplicativity<Rational>(reg, "F3cl", "", 3, seed + 1, 10);
  EXPECT_TRUE(f3.passed) << f3.detail;
  auto psi = verify::detail::random_multiplicativity<Rational>(reg, "Usl3", "jordanian_3", 3, seed + 2, 10);
  EXPECT_TRUE(psi.passed) << psi.detail;
}
