#include <gtest/gtest.h>

#include <set>

#include "json.hpp"

#include "qtwist/twists/verify.hpp"
#include "qtwist/verify/checks.hpp"
#include "test_support.hpp"

using namespace qtwist;

namespace {

QCoeff q_of(const HopfContext<QCoeff>& c) { return QCoeff::q(c.presentation().root_degree()); }

}  // namespace

TEST(AffineSl2, GaugeElementFirstOrder) {
  Registry reg;
  auto& c = reg.context<QCoeff>("D2", 3);
  auto W = reg.evaluator<QCoeff>(3).eval("D2", "gauge_2").e;
  const QCoeff q = q_of(c);
  EXPECT_EQ(W.zeta_component(0), c.legs(1).unit());
  EXPECT_EQ(W.zeta_component(1), c.gen("e_d-a").scaled(inverse(QCoeff(1) - q * q)));
}

TEST(AffineSl2, CoreTwistStartsAtThirdOrder) {
  Registry reg;
  auto& c = reg.context<QCoeff>("D2", 4);
  const auto& T2 = c.legs(2);
  auto phi = reg.evaluator<QCoeff>(4).twist("core_twist_2").expand(T2);
  EXPECT_EQ(phi.truncated(2), T2.unit());
  EXPECT_FALSE(phi.zeta_component(3).is_zero());
}

TEST(AffineSl2, FactorizationHoldsAtOrderSix) {
  Registry reg;
  EXPECT_TRUE(factorization_residual(reg, affine_factorization(2), 6).is_zero());
}

TEST(AffineSl2, CoreTwistSignFlipIsDetectedAtThirdOrder) {
  test_support::ScratchData data;
  data.replace("catalog/twists.cat", "sexp(q^2, -zeta^3 [e_d-a Kinv | Kinv e_-a])",
               "sexp(q^2, zeta^3 [e_d-a Kinv | Kinv e_-a])");
  Registry reg(data.path());
  auto d = factorization_residual(reg, affine_factorization(2), 4);
  ASSERT_FALSE(d.is_zero());
  EXPECT_EQ(d.min_zeta_power(), 3);
}

TEST(AffineSl2, AFormAndSpecialization) {
  Registry reg;
  auto a = verify::detail::aform(reg, 2, 4);
  EXPECT_TRUE(a.passed) << a.detail;
  auto s = verify::detail::specialization(reg, 2, 4);
  EXPECT_TRUE(s.passed) << s.detail;
}

TEST(AffineSl2, SpecializationDetectsAWrongRationalTwist) {
  test_support::ScratchData data;
  data.replace("catalog/twists.cat", "cpow([-1/2 H | 1], zeta [1 | f1] + 1/2 zeta^2 [H | f0])",
               "cpow([-1/2 H | 1], zeta [1 | f1] - 1/2 zeta^2 [H | f0])");
  Registry reg(data.path());
  auto s = verify::detail::specialization(reg, 2, 4);
  EXPECT_FALSE(s.passed);
  EXPECT_GT(s.residual_terms, 0u);
}

TEST(AffineSl3, ThirdFactorFirstOrder) {
  Registry reg;
  auto& c = reg.context<QCoeff>("D3", 1);
  const auto& T2 = c.legs(2);
  auto L = reg.evaluator<QCoeff>(1).twist("lambda_3").expand(T2);
  const QCoeff q = q_of(c);
  auto want = T2.parse_monomial({"eh_a", "eh_-b"}).scaled(-(q - q.inverse()));
  EXPECT_EQ(L.zeta_component(1), want);
}

TEST(Embeddings, RationalSl2IntoSl3) {
  Registry reg;
  auto r = verify_iota(reg, "iota_2", "jordanian_3", {}, 3);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_EQ(r.coproducts, 3u);
  auto printed = verify_iota(reg, "iota_2_printed", "jordanian_3", {}, 3);
  EXPECT_FALSE(printed.ok());
  auto& ev = reg.evaluator<Rational>(3);
  auto& src = reg.context<Rational>("F2cl", 3);
  auto& dst = reg.context<Rational>("Usl3", 3);
  EXPECT_EQ(ev.apply_map("iota_2", src.gen("H")), dst.gen("D2").scaled(Rational(-2)));
}

TEST(Embeddings, FamilyScalesLinearly) {
  Registry reg;
  auto& src = reg.context<Rational>("F3cl", 2);
  auto one = reg.evaluator<Rational>(2, {{"a", Rational(1)}}).apply_map("iota_3", src.gen("e_a"));
  auto two = reg.evaluator<Rational>(2, {{"a", Rational(2)}}).apply_map("iota_3", src.gen("e_a"));
  EXPECT_FALSE(one.is_zero());
  EXPECT_EQ(two, one.scaled(Rational(2)));
}

TEST(Embeddings, FamilyMemberIsAHomomorphism) {
  Registry reg;
  auto r = verify_iota(reg, "iota_3", "jordanian_4", {{"a", Rational(1, 3)}}, 2);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  // every ordered pair of the eight generators, the tabulated commutators included
  EXPECT_EQ(r.relations, 28u);
}

TEST(Catalog, UnknownNamesAreReported) {
  Registry reg;
  EXPECT_THROW(reg.evaluator<Rational>(2).twist("no_such_twist"), Error);
  EXPECT_THROW(reg.catalog().map("no_such_map"), Error);
  expr::Catalog cat;
  EXPECT_THROW(cat.parse("twist broken on Usl3 = exp(", "inline"), Error);
}

TEST(Errata, LogIsWellFormedAndReferencesRealChecks) {
  const auto log = nlohmann::json::parse(verify::detail::read_file(default_data_dir() + "/errata.json"));
  EXPECT_EQ(log.at("format"), "qtwist-errata v1");
  std::set<std::string> ids;
  for (const auto& c : verify::all_checks())
    if (c.group == "errata") ids.insert(c.id);
  std::set<std::string> referenced;
  for (const auto& e : log.at("entries")) {
    for (const char* field : {"id", "location", "printed", "corrected", "evidence"})
      EXPECT_TRUE(e.at(field).is_string()) << field;
    const auto& fc = e.at("failing_check");
    if (fc.is_null()) continue;
    EXPECT_TRUE(ids.count(fc.get<std::string>())) << fc;
    referenced.insert(fc.get<std::string>());
  }
  EXPECT_EQ(referenced, ids);
}
