// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qtwist/verify/runner.hpp"

namespace {

using namespace qtwist::verify;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> selectors;
  double limit_seconds;  // 0: no runtime limit
};

struct Verdict {
  bool ok = false;
  std::string note;
};

Verdict run_criterion(const std::vector<Check>& checks, const Criterion& c) {
  RunConfig cfg;
  cfg.suite = c.selectors;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckResult> rs;
  try {
    rs = run(resolve(checks, cfg), 1, cfg.seed);
  } catch (const std::exception& e) {
    return {false, std::string("setup error: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t passed = 0;
  std::string failing;
  for (const auto& r : rs) {
    if (r.passed()) ++passed;
    else failing += (failing.empty() ? "" : ",") + r.id;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu checks, %.2f s", passed, rs.size(), secs);
  std::string note = buf;
  if (c.limit_seconds > 0) {
    std::snprintf(buf, sizeof buf, " (limit %.0f s)", c.limit_seconds);
    note += buf;
  }
  if (!failing.empty()) note += "; failing: " + failing;
  const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
  if (!in_time) note += "; over the time limit";
  return {passed == rs.size() && in_time, note};
}

Verdict determinism(const std::vector<Check>& checks) {
  RunConfig cfg;
  const auto sel = resolve(checks, cfg);
  const std::string one = report_json(run(sel, 1, cfg.seed), cfg.seed, false).dump(2);
  const std::string three = report_json(run(sel, 3, cfg.seed), cfg.seed, false).dump(2);
  if (one != three) return {false, "reports with 1 and 3 workers differ"};
  return {true, "reports with 1 and 3 workers are byte-identical (" + std::to_string(one.size()) + " bytes)"};
}

}  // namespace

int main() {
  const auto checks = all_checks();
  const std::vector<Criterion> criteria = {
      {1, "q-calculus identities", {"identities"}, 10},
      {2, "affine sl2 factorization", {"factorization-sl2"}, 60},
      {3, "affine sl3 factorization", {"factorization-sl3"}, 600},
      {4, "cocycle equations", {"cocycle"}, 0},
      {5, "matrix-level cocycle", {"matrix-cocycle"}, 0},
      {6, "specialization at q = 1", {"aform", "specialization"}, 0},
      {7, "embedding homomorphisms", {"iota"}, 0},
      {8, "quantum Yang-Baxter equation", {"qybe"}, 60},
      {9, "classical limit", {"classical-limit"}, 0},
      {10, "classical Yang-Baxter and Frobenius", {"cybe", "frobenius"}, 0},
      {11, "confluence and rule rederivation", {"confluence", "rules"}, 0},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    Verdict v = run_criterion(checks, c);
    all_ok = all_ok && v.ok;
    std::printf("%s  criterion %2d  %-38s %s\n", v.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), v.note.c_str());
    std::fflush(stdout);
  }
  Verdict v;
  try {
    v = determinism(checks);
  } catch (const std::exception& e) {
    v = {false, e.what()};
  }
  all_ok = all_ok && v.ok;
  std::printf("%s  criterion 12  %-38s %s\n", v.ok ? "PASS" : "FAIL", "deterministic reports", v.note.c_str());
  return all_ok ? 0 : 1;
}
