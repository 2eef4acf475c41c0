#include <gtest/gtest.h>

#include <random>

#include "qtwist/ncalg/confluence.hpp"
#include "qtwist/ncalg/rule_io.hpp"
#include "qtwist/reps/fundamental.hpp"
#include "qtwist/twists/builders.hpp"
#include "qtwist/twists/registry.hpp"
#include "qtwist/verify/checks.hpp"
#include "test_support.hpp"

using namespace qtwist;

namespace {

std::string read(const std::string& rel) { return verify::detail::read_file(default_data_dir() + "/" + rel); }

std::vector<std::string> shipped_algebras() {
  auto v = shipped_quantum_algebras();
  for (const auto& a : shipped_classical_algebras()) v.push_back(a);
  return v;
}

}  // namespace

TEST(RuleTables, ShippedFilesRebuildFromConstruction) {
  Registry reg;
  for (const auto& a : shipped_algebras()) {
    auto o = verify::detail::rules_rebuild(reg, a);
    EXPECT_TRUE(o.passed) << a << ": " << o.detail;
  }
}

TEST(RuleTables, FormatParseRoundTrip) {
  for (const auto& a : {"D2", "D3", "F3A", "F3cl", "Usl4"}) {
    const std::string text = read(std::string("rules/") + a + ".rules");
    if (is_quantum_algebra(a)) EXPECT_EQ(format_rule_table(*parse_rule_table<QCoeff>(text)), text) << a;
    else EXPECT_EQ(format_rule_table(*parse_rule_table<Rational>(text)), text) << a;
  }
}

TEST(RuleTables, MalformedInputIsRejected) {
  std::string text = read("rules/F2cl.rules");
  EXPECT_THROW(parse_rule_table<Rational>("qtwist-rules v0\n"), Error);
  auto at = text.find("f1 f0 ->");
  ASSERT_NE(at, std::string::npos);
  std::string bad = text;
  bad.replace(at, 2, "g9");
  EXPECT_THROW(parse_rule_table<Rational>(bad), Error);
}

TEST(Confluence, ShippedTablesResolveEveryOverlap) {
  Registry reg;
  for (const auto& a : {"D2", "F2A", "F2cl", "F3cl", "Usl3", "Usl4"}) {
    if (is_quantum_algebra(a)) EXPECT_TRUE(check_local_confluence<QCoeff>(reg.presentation<QCoeff>(a), 4).empty()) << a;
    else EXPECT_TRUE(check_local_confluence<Rational>(reg.presentation<Rational>(a), 4).empty()) << a;
  }
}

TEST(Confluence, SignFlippedRuleNamesTheOverlap) {
  std::string text = read("rules/D2.rules");
  const std::string rule = "e_d-a K -> [(t^2)/(1) [q=t^1]] K e_d-a";
  auto at = text.find(rule);
  ASSERT_NE(at, std::string::npos);
  text.replace(at, rule.size(), "e_d-a K -> [(-t^2)/(1) [q=t^1]] K e_d-a");
  auto amb = check_local_confluence<QCoeff>(parse_rule_table<QCoeff>(text), 3);
  ASSERT_FALSE(amb.empty());
  bool names_pair = false;
  for (const auto& a : amb) names_pair = names_pair || a.overlap.find("e_d-a K") != std::string::npos;
  EXPECT_TRUE(names_pair) << amb.front().overlap;
}

TEST(Confluence, CorruptedShippedRuleFailsBothChecks) {
  test_support::ScratchData data;
  data.replace("rules/Usl3.rules", "E12 E21 -> [2] D1 ; [-1] D2 ; [1] E21 E12", "E12 E21 -> [2] D1 ; [1] D2 ; [1] E21 E12");
  Registry reg(data.path());
  auto conf = verify::detail::confluence<Rational>(reg, "Usl3", 2);
  EXPECT_FALSE(conf.passed);
  EXPECT_GT(conf.residual_terms, 0u);
  EXPECT_FALSE(verify::detail::rules_rebuild(reg, "Usl3").passed);
}

TEST(NormalForm, RuleExamples) {
  Registry reg;
  {
    auto& c = reg.context<Rational>("F2cl", 3);
    const auto& T = c.legs(1);
    auto got = T.mul(c.gen("f1"), c.gen("f0"));
    auto want = T.mul(c.gen("f0"), c.gen("f1")) - T.mul(c.gen("f0"), c.gen("f0")).zeta_shifted(1, 3);
    EXPECT_EQ(got, want) << T.format(got);
  }
  {
    auto& c = reg.context<QCoeff>("D2", 3);
    const auto& T = c.legs(1);
    EXPECT_EQ(T.mul(c.gen("e_d-a"), c.gen("e_-a")), T.parse_monomial({"e_-a e_d-a"}));
  }
  {
    auto& c = reg.context<Rational>("Usl3", 2);
    const auto& T = c.legs(1);
    // E11 - E22 = 2 D1 - D2 in the D_p basis
    auto want = T.parse_monomial({"E21 E12"}) + c.gen("D1").scaled(Rational(2)) - c.gen("D2");
    EXPECT_EQ(T.mul(c.gen("E12"), c.gen("E21")), want);
  }
}

// The fundamental representation is an algebra map, so normal ordering must
// not change the matrix of a word. Random words in U(sl3) and U(sl4).
TEST(NormalForm, AgreesWithMatrixProductsOnRandomWords) {
  Registry reg;
  std::mt19937 rng(test_support::kPropertySeed);
  for (int n : {3, 4}) {
    auto& c = reg.context<Rational>("Usl" + std::to_string(n), 1);
    const auto& T = c.legs(1);
    FundamentalRep rep(c.presentation_ptr());
    const auto& names = c.presentation().generator_names();
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::uniform_int_distribution<int> length(2, 5);
    for (int s = 0; s < 25; ++s) {
      Element<Rational> product = T.unit();
      PolyMatrix direct = PolyMatrix::identity(n);
      for (int i = length(rng); i > 0; --i) {
        auto g = c.gen(names[pick(rng)]);
        product = T.mul(product, g);
        direct = direct * rep.evaluate(g);
      }
      EXPECT_TRUE((rep.evaluate(product) - direct).is_zero()) << "n=" << n << " sample " << s;
    }
  }
}

TEST(TensorElements, LegOperations) {
  Registry reg;
  auto& c = reg.context<Rational>("Usl3", 2);
  const auto& T2 = c.legs(2);
  const auto& T3 = c.legs(3);
  auto a = T2.gen(0, "E12"), b = T2.gen(1, "E23");
  EXPECT_EQ(T2.mul(a, b), T2.parse_monomial({"E12", "E23"}));
  auto ab = T2.parse_monomial({"E12", "E23"});
  EXPECT_EQ(ab.embedded(3, {0, 2}), T3.parse_monomial({"E12", "", "E23"}));
  EXPECT_EQ(ab.permuted({1, 0}), T2.parse_monomial({"E23", "E12"}));
  auto cd = T2.parse_monomial({"E21", "E32"});
  EXPECT_EQ(T2.mul(ab, cd), tensor(c.legs(1).mul(c.gen("E12"), c.gen("E21")), c.legs(1).mul(c.gen("E23"), c.gen("E32")), 2));
}

TEST(TensorElements, InverseOfUnitPlusNilpotentSeries) {
  Registry reg;
  auto& c = reg.context<QCoeff>("D2", 5);
  const auto& T2 = c.legs(2);
  auto x = T2.unit() + T2.parse_monomial({"K", "e_d-a"}).zeta_shifted(1, 5) + T2.parse_monomial({"e_-a", "Kinv"}).zeta_shifted(2, 5);
  EXPECT_EQ(T2.mul(x, T2.inverse(x)), T2.unit());
  EXPECT_EQ(T2.mul(T2.inverse(x), x), T2.unit());
}
