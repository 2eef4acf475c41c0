#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qtwist/verify/export.hpp"
#include "qtwist/verify/runner.hpp"

using namespace qtwist;
using namespace qtwist::verify;

namespace {

std::vector<std::string> ids(const std::vector<Selected>& s) {
  std::vector<std::string> out;
  for (const auto& x : s) out.push_back(x.check->id);
  return out;
}

RunConfig suite(std::vector<std::string> sel, std::map<std::string, int> orders = {}) {
  RunConfig c;
  c.suite = std::move(sel);
  c.orders = std::move(orders);
  return c;
}

struct Shell {
  int status;
  std::string out;
};

Shell cli(const std::string& args) {
  const std::string cmd = std::string(QTWIST_CLI_PATH) + " " + args + " 2>&1";
  Shell r{0, ""};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Registry, IdsAreUniqueAndGroupPrefixed) {
  const auto checks = all_checks();
  std::set<std::string> seen;
  for (const auto& c : checks) {
    EXPECT_TRUE(seen.insert(c.id).second) << c.id;
    const std::string prefix = c.group == "identities" ? "identity" : c.group == "errata" ? "erratum" : c.group;
    EXPECT_EQ(c.id.rfind(prefix, 0), 0u) << c.id;
    EXPECT_EQ(c.uses_order, c.default_order > 0) << c.id;
  }
}

TEST(Selectors, ExactIdGroupAndFilter) {
  const auto checks = all_checks();
  EXPECT_EQ(ids(resolve(checks, suite({"qybe-sl3"}))), std::vector<std::string>{"qybe-sl3"});
  EXPECT_EQ(ids(resolve(checks, suite({"qybe:n=4:a=1/3"}))), std::vector<std::string>{"qybe-sl4@a=1/3"});
  EXPECT_EQ(resolve(checks, suite({"qybe:n=4"})).size(), 4u);
  EXPECT_EQ(resolve(checks, suite({"all"})).size(), checks.size());
  // duplicates collapse, output sorted by id
  auto both = ids(resolve(checks, suite({"qybe-sl3", "qybe", "cybe-sl3"})));
  EXPECT_EQ(both.size(), 6u);
  EXPECT_TRUE(std::is_sorted(both.begin(), both.end()));
}

TEST(Selectors, ErrorsComeBeforeAnyComputation) {
  const auto checks = all_checks();
  EXPECT_THROW(resolve(checks, suite({"bogus"})), ConfigError);
  EXPECT_THROW(resolve(checks, suite({"qybe:n=7"})), ConfigError);
  EXPECT_THROW(resolve(checks, suite({"qybe:n"})), ConfigError);
  EXPECT_THROW(resolve(checks, suite({})), ConfigError);
  EXPECT_THROW(resolve(checks, suite({"all"}, {{"bogus", 3}})), ConfigError);
  EXPECT_THROW(resolve(checks, suite({"all"}, {{"cybe-sl3", 3}})), ConfigError);
  EXPECT_THROW(resolve(checks, suite({"all"}, {{"qybe", 0}})), ConfigError);
  RunConfig bad = suite({"all"});
  bad.workers = 0;
  EXPECT_THROW(resolve(checks, bad), ConfigError);
}

TEST(Selectors, OrderOverrides) {
  const auto checks = all_checks();
  auto s = resolve(checks, suite({"factorization", "frobenius-sl3"}, {{"factorization-sl3", 2}, {"all", 5}}));
  std::map<std::string, int> order;
  for (const auto& x : s) order[x.check->id] = x.order;
  // the exact id beats "all"; "all" leaves order-less checks alone
  EXPECT_EQ(order.at("factorization-sl3"), 2);
  EXPECT_EQ(order.at("factorization-sl2"), 5);
  EXPECT_EQ(order.at("frobenius-sl3"), 0);
  auto filtered = resolve(checks, suite({"qybe"}, {{"qybe:n=4", 3}, {"qybe", 6}, {"qybe-sl4@a=2", 2}}));
  std::map<std::string, int> q;
  for (const auto& x : filtered) q[x.check->id] = x.order;
  EXPECT_EQ(q.at("qybe-sl3"), 6);
  EXPECT_EQ(q.at("qybe-sl4@a=1"), 3);
  EXPECT_EQ(q.at("qybe-sl4@a=2"), 2);
}

TEST(Runner, ReportIsIndependentOfWorkerCount) {
  const auto checks = all_checks();
  auto sel = resolve(checks, suite({"cybe", "frobenius", "identity-heine-cartan", "coproduct-Usl3", "rules"}));
  const auto one = report_json(run(sel, 1, kDefaultSeed), kDefaultSeed, false).dump(2);
  const auto three = report_json(run(sel, 3, kDefaultSeed), kDefaultSeed, false).dump(2);
  EXPECT_EQ(one, three);
  auto j = nlohmann::json::parse(one);
  EXPECT_EQ(j.at("failed"), 0);
  for (const auto& c : j.at("checks")) {
    EXPECT_FALSE(c.contains("millis"));
    EXPECT_TRUE(c.contains("zeta_order"));
  }
}

TEST(Runner, ErrorsBecomeErrorStatus) {
  Check boom{"boom", "test", {}, 1, true, "", [](Env&) -> Outcome { throw Error("exploded"); }};
  auto rs = run({{&boom, 1}}, 1, kDefaultSeed);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].status, "error");
  EXPECT_EQ(rs[0].detail, "exploded");
  EXPECT_FALSE(all_passed(rs));
  const std::string text = format_report(rs, Format::text, kDefaultSeed, false);
  EXPECT_NE(text.find("ERROR boom"), std::string::npos);
  const std::string latex = format_report(rs, Format::latex, kDefaultSeed, false);
  EXPECT_NE(latex.find("\\texttt{boom} & error"), std::string::npos);
}

TEST(Export, ObjectsAndErrors) {
  Registry reg;
  ExportRequest req{"twist", 3, "1", "", 2, Format::json};
  auto j = nlohmann::json::parse(export_object(reg, req));
  EXPECT_EQ(j.at("name"), "parabolic_3");
  EXPECT_EQ(j.at("zeta_order"), 2);
  EXPECT_EQ(j.at("terms").at(0).at("zeta"), 0);
  req.name = "no_such_twist";
  EXPECT_THROW(export_object(reg, req), UnknownObject);
  req = {"rmatrix", 5, "1", "", 0, Format::json};
  EXPECT_THROW(export_object(reg, req), UnknownObject);
  req = {"rmatrix", 3, "2", "", 0, Format::json};
  EXPECT_THROW(export_object(reg, req), ConfigError);
  req = {"widget", 3, "1", "", 0, Format::json};
  EXPECT_THROW(export_object(reg, req), UnknownObject);
}

TEST(CommandLine, ExitCodes) {
  auto ok = cli("verify --suite cybe-sl3 --format json");
  EXPECT_EQ(ok.status, 0) << ok.out;
  EXPECT_EQ(nlohmann::json::parse(ok.out).at("passed"), 1);
  auto bogus = cli("verify --suite bogus");
  EXPECT_EQ(bogus.status, 2) << bogus.out;
  EXPECT_NE(bogus.out.find("unknown check identifier 'bogus'"), std::string::npos);
  EXPECT_EQ(cli("verify --suite qybe --order qybe=x").status, 2);
  EXPECT_EQ(cli("verify --suite cybe --order cybe-sl3=2").status, 2);
  EXPECT_EQ(cli("export rmatrix --n 5").status, 3);
  EXPECT_NE(cli("verify --workers 0").status, 0);
}

TEST(CommandLine, HelpListsEveryCheck) {
  auto help = cli("verify --help");
  EXPECT_EQ(help.status, 0);
  for (const auto& c : all_checks()) EXPECT_NE(help.out.find(c.id), std::string::npos) << c.id;
}

TEST(CommandLine, OutputDirectoryFromTheEnvironment) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("qtwist-cli-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  auto r = cli("export r-classical --n 4 --a 1/3 --format latex >/dev/null; QTWIST_OUTPUT_DIR=" + dir.string() + " " +
               QTWIST_CLI_PATH + " export r-classical --n 4 --a 1/3 --format latex");
  EXPECT_EQ(r.status, 0) << r.out;
  std::ifstream in(dir / "r-classical-n4-a1_3.tex");
  ASSERT_TRUE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_NE(s.str().find("\\frac{1}{3}\\,E_{13}\\wedge E_{43}"), std::string::npos);
  fs::remove_all(dir);
}

TEST(CommandLine, ErrataLog) {
  auto text = cli("errata");
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("affine-sl3-undefined-generator"), std::string::npos);
  auto j = cli("errata --json");
  EXPECT_EQ(j.status, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out).at("entries").size(), 10u);
}
