// qtwist command line: verify, export, identities, errata.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qtwist/verify/export.hpp"
#include "qtwist/verify/runner.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qtwist;
using namespace qtwist::verify;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitUnknown = 3;

/// QTWIST_OUTPUT_DIR, when set, receives reports and exports that have no
/// explicit --output.
std::string output_dir() {
  const char* env = std::getenv("QTWIST_OUTPUT_DIR");
  return env && *env ? env : "";
}

const char* extension(Format f) {
  switch (f) {
    case Format::json: return ".json";
    case Format::latex: return ".tex";
    case Format::text: return ".txt";
  }
  return "";
}

/// Writes to `path` ("-" is stdout), or into the output directory under
/// `default_name`, or to stdout.
void emit(const std::string& text, const std::string& path, const std::string& default_name) {
  std::string target = path;
  if (target.empty() && !output_dir().empty()) target = (fs::path(output_dir()) / default_name).string();
  if (target.empty() || target == "-") {
    std::cout << text;
    return;
  }
  if (auto parent = fs::path(target).parent_path(); !parent.empty()) fs::create_directories(parent);
  std::ofstream out(target, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + target);
  out << text;
  std::cerr << "wrote " << target << "\n";
}

std::map<std::string, int> parse_orders(const std::vector<std::string>& items) {
  std::map<std::string, int> out;
  for (const auto& item : items) {
    auto eq = item.rfind('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw ConfigError("--order expects SELECTOR=N, got '" + item + "'");
    const std::string sel = item.substr(0, eq);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError("--order value in '" + item + "' is not an integer");
    }
    out[sel] = n;
  }
  return out;
}

std::string check_listing() {
  std::ostringstream s;
  s << "Selectors: all | CHECK_ID | GROUP | GROUP:key=value[:key=value]\n"
       "  e.g. --suite qybe:n=4 --suite factorization-sl3 --order factorization-sl3=4\n\nChecks:\n";
  for (const auto& c : all_checks()) {
    s << "  " << c.id;
    const std::size_t width = 38;
    s << std::string(c.id.size() < width ? width - c.id.size() : 1, ' ');
    s << (c.uses_order ? "order " + std::to_string(c.default_order) : "exact  ") << "  " << c.summary << "\n";
  }
  return s.str();
}

struct VerifyOptions {
  std::vector<std::string> suite{"all"};
  std::vector<std::string> orders;
  int workers = 1;
  std::uint64_t seed = kDefaultSeed;
  bool timings = false;
  std::string format = "text";
  std::string output;
};

int run_verify(const VerifyOptions& o, const std::string& default_name) {
  RunConfig cfg;
  cfg.suite = o.suite;
  cfg.orders = parse_orders(o.orders);
  cfg.workers = o.workers;
  cfg.seed = o.seed;
  cfg.timings = o.timings;
  const Format f = parse_format(o.format);
  const auto checks = all_checks();
  const auto selection = resolve(checks, cfg);  // all validation happens before this returns
  const auto results = run(selection, cfg.workers, cfg.seed);
  emit(format_report(results, f, cfg.seed, cfg.timings), o.output, default_name + extension(f));
  return all_passed(results) ? 0 : kExitFail;
}

int run_errata(bool as_json, bool verify, int workers) {
  const std::string path = (fs::path(default_data_dir()) / "errata.json").string();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  nlohmann::ordered_json log = nlohmann::ordered_json::parse(in);
  if (as_json) {
    std::cout << log.dump(2) << "\n";
  } else {
    for (const auto& e : log.at("entries")) {
      std::cout << e.at("id").get<std::string>() << "\n";
      std::cout << "  where:     " << e.at("location").get<std::string>() << "\n";
      std::cout << "  printed:   " << e.at("printed").get<std::string>() << "\n";
      std::cout << "  corrected: " << e.at("corrected").get<std::string>() << "\n";
      if (e.contains("evidence")) std::cout << "  evidence:  " << e.at("evidence").get<std::string>() << "\n";
      const auto& fc = e.at("failing_check");
      std::cout << "  check:     " << (fc.is_null() ? "(textual, no check)" : fc.get<std::string>()) << "\n\n";
    }
  }
  if (!verify) return 0;
  VerifyOptions o;
  o.suite = {"errata"};
  o.workers = workers;
  o.output = "-";
  return run_verify(o, "errata-report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtwist: exact verification of quantized boundary r-matrices and their twists"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run verification checks and print a report");
  verify->add_option("--suite,-s", vo.suite, "check selectors (repeatable or comma separated)")->delimiter(',');
  verify->add_option("--order", vo.orders, "zeta-order override SELECTOR=N (repeatable)");
  verify->add_option("--workers,-j", vo.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vo.seed, "seed of the randomized property checks");
  verify->add_flag("--timings", vo.timings, "include per-check milliseconds (reports are then not byte-stable)");
  verify->add_option("--format,-f", vo.format, "json | latex | text")->check(CLI::IsMember({"json", "latex", "text"}));
  verify->add_option("--output,-o", vo.output, "report path ('-' for stdout)");
  verify->footer(check_listing());

  ExportRequest er;
  std::string export_format = "json", export_output;
  auto* exp = app.add_subcommand("export", "write an R-matrix, twist expansion or classical r-matrix");
  exp->add_option("object", er.what, "rmatrix | twist | r-classical")->required();
  exp->add_option("--n", er.n, "rank index n (3 or 4; twists also 2)");
  exp->add_option("--a", er.a, "family parameter for n = 4, e.g. 2 or 1/3");
  exp->add_option("--name", er.name, "catalog twist name (twist only)");
  exp->add_option("--order", er.order, "zeta order used to expand series")->check(CLI::PositiveNumber);
  exp->add_option("--format,-f", export_format, "json | latex | text")->check(CLI::IsMember({"json", "latex", "text"}));
  exp->add_option("--output,-o", export_output, "output path ('-' for stdout)");

  VerifyOptions io;
  io.suite = {"identities"};
  int identity_order = 0;
  auto* ids = app.add_subcommand("identities", "check the q-calculus identities in their test algebras");
  ids->add_option("--order", identity_order, "zeta order for every identity")->check(CLI::PositiveNumber);
  ids->add_option("--format,-f", io.format, "json | latex | text")->check(CLI::IsMember({"json", "latex", "text"}));
  ids->add_option("--output,-o", io.output, "report path ('-' for stdout)");
  ids->add_flag("--timings", io.timings, "include per-check milliseconds");

  bool errata_json = false, errata_verify = false;
  int errata_workers = 1;
  auto* err = app.add_subcommand("errata", "print the correction log");
  err->add_flag("--json", errata_json, "print the log as JSON");
  err->add_flag("--verify", errata_verify, "also run the errata checks");
  err->add_option("--workers,-j", errata_workers, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (verify->parsed()) return run_verify(vo, "verify-report");
    if (ids->parsed()) {
      if (identity_order > 0) io.orders = {"identities=" + std::to_string(identity_order)};
      return run_verify(io, "identities-report");
    }
    if (exp->parsed()) {
      er.format = parse_format(export_format);
      Registry reg;
      emit(export_object(reg, er), export_output, export_file_name(er));
      return 0;
    }
    if (err->parsed()) return run_errata(errata_json, errata_verify, errata_workers);
  } catch (const UnknownObject& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
