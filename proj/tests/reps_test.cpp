#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "qtwist/reps/classical.hpp"
#include "qtwist/reps/rmatrix.hpp"
#include "qtwist/twists/registry.hpp"
#include "qtwist/verify/checks.hpp"
#include "qtwist/verify/export.hpp"

using namespace qtwist;

namespace {

PolyMatrix rmatrix(Registry& reg, int n, const Rational& a, int order) {
  std::map<std::string, Rational> params;
  if (n == 4) params["a"] = a;
  auto& c = reg.context<Rational>("Usl" + std::to_string(n), order);
  FundamentalRep rep(c.presentation_ptr());
  return r_matrix(rep, reg.evaluator<Rational>(order, params).twist("parabolic_" + std::to_string(n)));
}

// Dense three-leg products written out index by index, independent of the
// library's kron and swap helpers.
PolyMatrix embed(const PolyMatrix& R, int n, int first, int second) {
  const int d = n * n * n;
  PolyMatrix out(d);
  for (int row = 0; row < d; ++row)
    for (int col = 0; col < d; ++col) {
      int r[3] = {row / (n * n), (row / n) % n, row % n};
      int c[3] = {col / (n * n), (col / n) % n, col % n};
      const int other = 3 - first - second;
      if (r[other] != c[other]) continue;
      out.at(row, col) = R.at(r[first] * n + r[second], c[first] * n + c[second]);
    }
  return out;
}

PolyMatrix naive_product(const PolyMatrix& a, const PolyMatrix& b) {
  const int d = a.dim();
  PolyMatrix out(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (a.at(i, k).is_zero_series()) continue;
      for (int j = 0; j < d; ++j)
        if (!b.at(k, j).is_zero_series()) out.at(i, j) += exact_mul(a.at(i, k), b.at(k, j));
    }
  return out;
}

}  // namespace

TEST(FundamentalRep, CartanImages) {
  Registry reg;
  {
    FundamentalRep rep(reg.presentation<Rational>("Usl3"));
    auto& c = reg.context<Rational>("Usl3", 1);
    PolyMatrix m = rep.evaluate(c.gen("D1"));
    const Rational want[3] = {Rational(2, 3), Rational(-1, 3), Rational(-1, 3)};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_EQ(m.at(i, j).coeff(0), i == j ? want[i] : Rational(0)) << i << j;
  }
  {
    FundamentalRep rep(reg.presentation<Rational>("Usl4"));
    auto& c = reg.context<Rational>("Usl4", 1);
    PolyMatrix m = rep.evaluate(c.gen("D3"));
    const Rational want[4] = {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(-3, 4)};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_EQ(m.at(i, j).coeff(0), i == j ? want[i] : Rational(0)) << i << j;
  }
}

TEST(FundamentalRep, LogarithmTruncatesToOneTerm) {
  Registry reg;
  auto& c = reg.context<Rational>("Usl3", 5);
  FundamentalRep rep(c.presentation_ptr());
  PolyMatrix m = rep.evaluate(reg.evaluator<Rational>(5).eval("Usl3", "sigma").e);
  PolyMatrix want(3);
  want.at(0, 1) = ZetaPoly(Rational(-1), 1);
  EXPECT_TRUE(m == want);
}

TEST(FundamentalRep, RejectsNonSlPresentations) {
  Registry reg;
  EXPECT_THROW(FundamentalRep(reg.presentation<Rational>("F2cl")), ConfigError);
}

TEST(ClassicalR, ThreeTermsForSl3) {
  std::set<std::tuple<std::string, std::string, std::string>> got;
  for (const auto& t : classical_r_terms(3)) got.insert({t.coeff.get_str(), t.left, t.right});
  std::set<std::tuple<std::string, std::string, std::string>> want = {
      {"1", "D1", "E12"}, {"1", "D2", "E23"}, {"1", "E13", "E32"}};
  EXPECT_EQ(got, want);
}

TEST(ClassicalR, SevenTermDisplayForSl4) {
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& t : classical_r_terms(4)) {
    EXPECT_EQ(t.coeff, 1);
    got.insert({t.left, t.right});
  }
  std::set<std::pair<std::string, std::string>> want = {{"D1", "E12"},  {"E14", "E42"}, {"E13", "E32"}, {"D2", "E23"},
                                                        {"E24", "E43"}, {"D3", "E34"},  {"E13", "E43"}};
  EXPECT_EQ(got, want);
}

TEST(ClassicalR, LatexExport) {
  Registry reg;
  verify::ExportRequest req{"r-classical", 4, "1", "", 0, verify::Format::latex};
  EXPECT_EQ(verify::export_object(reg, req),
            "r = D_{1}\\wedge E_{12} + D_{2}\\wedge E_{23} + D_{3}\\wedge E_{34} + E_{13}\\wedge E_{32}"
            " + E_{14}\\wedge E_{42} + E_{13}\\wedge E_{43} + E_{24}\\wedge E_{43}\n");
  req.a = "1/3";
  EXPECT_EQ(verify::export_object(reg, req),
            "r = D_{1}\\wedge E_{12} + D_{2}\\wedge E_{23} + 3\\,D_{3}\\wedge E_{34} + E_{13}\\wedge E_{32}"
            " + E_{14}\\wedge E_{42} + \\frac{1}{3}\\,E_{13}\\wedge E_{43} + E_{24}\\wedge E_{43}\n");
}

TEST(ClassicalR, ParameterRestrictions) {
  EXPECT_THROW(classical_r_terms(3, Rational(2)), ConfigError);
  EXPECT_THROW(classical_r_terms(4, Rational(0)), ConfigError);
  EXPECT_THROW(classical_r_terms(1), UnknownObject);
}

TEST(ClassicalR, TraceOfTheFundamentalImageVanishes) {
  Registry reg;
  auto& c = reg.context<Rational>("Usl3", 1);
  FundamentalRep rep(c.presentation_ptr());
  PolyMatrix m = rep.evaluate(classical_r(c));
  Rational trace = 0;
  for (int i = 0; i < m.dim(); ++i) trace += m.at(i, i).coeff(0);
  EXPECT_EQ(trace, 0);
}

// det of the coefficient matrix of r on the parabolic; values from an
// independent symbolic computation of the wedge-term matrix.
TEST(ClassicalR, FrobeniusDeterminants) {
  Registry reg;
  const std::vector<std::tuple<int, std::string, Rational>> cases = {
      {3, "1", Rational(1)}, {4, "1", Rational(1)}, {4, "2", Rational(1, 4)}, {4, "-1", Rational(1)}, {4, "1/3", Rational(9)}};
  for (const auto& [n, a, det] : cases) {
    auto& c = reg.context<Rational>("Usl" + std::to_string(n), 1);
    auto f = frobenius_check(c, classical_r(c, parse_rational(a)), n);
    EXPECT_TRUE(f.outside.empty()) << n << " " << a;
    EXPECT_EQ(f.basis.size(), std::size_t(n == 3 ? 6 : 12));
    EXPECT_EQ(f.determinant, det) << n << " " << a;
  }
}

TEST(RMatrix, ExactAndIndependentOfTheExpansionOrder) {
  Registry reg;
  for (int n : {3, 4}) {
    PolyMatrix R4 = rmatrix(reg, n, 1, 4), R6 = rmatrix(reg, n, 1, 6);
    EXPECT_TRUE(R4 == R6) << "n=" << n;
    PolyMatrix zero(R4.dim());
    for (int i = 0; i < R4.dim(); ++i)
      for (int j = 0; j < R4.dim(); ++j) zero.at(i, j) = ZetaPoly(R4.at(i, j).coeff(0));
    EXPECT_TRUE(zero == PolyMatrix::identity(R4.dim())) << "n=" << n;
  }
}

TEST(RMatrix, YangBaxterWithDenseProducts) {
  Registry reg;
  for (auto [n, a] : {std::pair{3, Rational(1)}, std::pair{4, Rational(2)}}) {
    PolyMatrix R = rmatrix(reg, n, a, 4);
    PolyMatrix R12 = embed(R, n, 0, 1), R13 = embed(R, n, 0, 2), R23 = embed(R, n, 1, 2);
    PolyMatrix lhs = naive_product(naive_product(R12, R13), R23);
    PolyMatrix rhs = naive_product(naive_product(R23, R13), R12);
    EXPECT_TRUE(lhs == rhs) << "n=" << n;
    EXPECT_TRUE(qybe_residual(R, n).is_zero()) << "n=" << n;
  }
}

TEST(RMatrix, YangBaxterFailsForASwappedFamilyParameter) {
  // r(a) and R(-a) mixed: first-order part of one, higher part of the other
  Registry reg;
  PolyMatrix Ra = rmatrix(reg, 4, 2, 4), Rb = rmatrix(reg, 4, -2, 4);
  PolyMatrix mixed(Ra.dim());
  for (int i = 0; i < Ra.dim(); ++i)
    for (int j = 0; j < Ra.dim(); ++j) {
      ZetaPoly p;
      for (const auto& [k, c] : Ra.at(i, j).terms())
        if (k <= 1) p.add_term(k, c);
      for (const auto& [k, c] : Rb.at(i, j).terms())
        if (k >= 2) p.add_term(k, c);
      mixed.at(i, j) = p;
    }
  EXPECT_FALSE(qybe_residual(mixed, 4).is_zero());
}

TEST(RMatrix, ExportIsDeterministic) {
  Registry one, two;
  verify::ExportRequest req{"rmatrix", 4, "1/3", "", 0, verify::Format::json};
  const std::string a = verify::export_object(one, req);
  EXPECT_EQ(a, verify::export_object(two, req));
  req.order = 6;
  EXPECT_EQ(a, verify::export_object(two, req));
  EXPECT_EQ(verify::export_file_name(req), "rmatrix-n4-a1_3.json");
}
