#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "qtwist/error.hpp"
#include "qtwist/verify/checks.hpp"

namespace qtwist::verify {

enum class Format { json, latex, text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  if (s == "text") return Format::text;
  throw ConfigError("unknown format '" + s + "' (json, latex, text)");
}

struct RunConfig {
  std::vector<std::string> suite{"all"};
  std::map<std::string, int> orders;  // selector -> zeta order
  int workers = 1;
  std::uint64_t seed = kDefaultSeed;
  bool timings = false;
};

struct Selected {
  const Check* check = nullptr;
  int order = 0;
};

struct CheckResult {
  std::string id;
  std::string status;  // pass, fail, error
  int zeta_order = 0;  // 0 when the check has no truncation order
  std::size_t residual_terms = 0;
  long long millis = 0;
  std::string detail;
  bool passed() const { return status == "pass"; }
};

namespace detail {

/// Checks matched by one selector: "all", a check id, a group, or
/// group:key=value[:key=value...].
inline std::vector<const Check*> match(const std::vector<Check>& checks, const std::string& sel) {
  std::vector<const Check*> out;
  if (sel == "all") {
    for (const auto& c : checks) out.push_back(&c);
    return out;
  }
  for (const auto& c : checks)
    if (c.id == sel) return {&c};
  std::string group = sel;
  std::map<std::string, std::string> filter;
  if (auto colon = sel.find(':'); colon != std::string::npos) {
    group = sel.substr(0, colon);
    std::stringstream rest(sel.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ':')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw ConfigError("bad filter '" + item + "' in selector '" + sel + "'");
      filter[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  bool group_known = false;
  for (const auto& c : checks) {
    if (c.group != group) continue;
    group_known = true;
    bool ok = true;
    for (const auto& [k, v] : filter) {
      auto it = c.params.find(k);
      ok = ok && it != c.params.end() && it->second == v;
    }
    if (ok) out.push_back(&c);
  }
  if (!group_known) throw ConfigError("unknown check identifier '" + sel + "'");
  if (out.empty()) throw ConfigError("selector '" + sel + "' matches no check");
  return out;
}

}  // namespace detail

/// Resolves the suite and order overrides. Everything is validated here,
/// before any check runs. The result is sorted by check id.
inline std::vector<Selected> resolve(const std::vector<Check>& checks, const RunConfig& cfg) {
  if (cfg.workers < 1) throw ConfigError("worker count must be at least 1");
  if (cfg.suite.empty()) throw ConfigError("empty suite selection");
  std::set<const Check*> chosen;
  for (const auto& s : cfg.suite)
    for (const Check* c : detail::match(checks, s)) chosen.insert(c);
  std::map<const Check*, int> order;
  for (const auto& c : checks) order[&c] = c.default_order;
  // more specific selectors win: all, then groups, then filtered groups, then ids
  auto rank = [&](const std::string& sel) {
    if (sel == "all") return 0;
    for (const auto& c : checks)
      if (c.id == sel) return 3;
    return sel.find(':') == std::string::npos ? 1 : 2;
  };
  std::vector<std::pair<std::string, int>> overrides(cfg.orders.begin(), cfg.orders.end());
  std::stable_sort(overrides.begin(), overrides.end(),
                   [&](const auto& a, const auto& b) { return rank(a.first) < rank(b.first); });
  for (const auto& [sel, n] : overrides) {
    if (n < 1) throw ConfigError("zeta order for '" + sel + "' must be positive");
    for (const Check* c : detail::match(checks, sel)) {
      if (!c->uses_order) {
        if (sel == c->id) throw ConfigError("check '" + c->id + "' has no zeta order to override");
        continue;
      }
      order[c] = n;
    }
  }
  std::vector<Selected> out;
  for (const Check* c : chosen) out.push_back({c, order[c]});
  std::sort(out.begin(), out.end(), [](const Selected& a, const Selected& b) { return a.check->id < b.check->id; });
  return out;
}

/// Runs the selection on a pool of `workers` threads, each with its own
/// registry. Results come back in selection order whatever the completion order.
inline std::vector<CheckResult> run(const std::vector<Selected>& sel, int workers, std::uint64_t seed,
                                    const std::string& data_dir = default_data_dir()) {
  std::vector<CheckResult> results(sel.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::unique_ptr<Registry> reg;
    std::string setup_error;
    try {
      reg = std::make_unique<Registry>(data_dir);
    } catch (const std::exception& e) {
      setup_error = e.what();
    }
    for (std::size_t i = next++; i < sel.size(); i = next++) {
      const Check& c = *sel[i].check;
      CheckResult& r = results[i];
      r.id = c.id;
      r.zeta_order = c.uses_order ? sel[i].order : 0;
      auto t0 = std::chrono::steady_clock::now();
      if (!reg) {
        r.status = "error";
        r.detail = setup_error;
        continue;
      }
      try {
        Env env{*reg, sel[i].order, seed};
        Outcome o = c.run(env);
        r.status = o.passed ? "pass" : "fail";
        r.residual_terms = o.residual_terms;
        r.detail = o.detail;
      } catch (const std::exception& e) {
        r.status = "error";
        r.detail = e.what();
      }
      r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, std::min<int>(workers, int(sel.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

inline bool all_passed(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.passed(); });
}

inline nlohmann::ordered_json report_json(const std::vector<CheckResult>& rs, std::uint64_t seed, bool timings) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& r : rs) {
    nlohmann::ordered_json j;
    j["check_id"] = r.id;
    j["status"] = r.status;
    if (r.zeta_order > 0) j["zeta_order"] = r.zeta_order;
    else j["zeta_order"] = nullptr;
    j["residual_term_count"] = r.residual_terms;
    if (timings) j["millis"] = r.millis;
    if (!r.detail.empty()) j["detail"] = r.detail;
    checks.push_back(std::move(j));
    passed += r.passed();
  }
  nlohmann::ordered_json out;
  out["seed"] = seed;
  out["checks"] = std::move(checks);
  out["passed"] = passed;
  out["failed"] = rs.size() - passed;
  return out;
}

inline std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

inline std::string format_report(const std::vector<CheckResult>& rs, Format f, std::uint64_t seed, bool timings) {
  std::ostringstream s;
  switch (f) {
    case Format::json: s << report_json(rs, seed, timings).dump(2) << "\n"; break;
    case Format::text: {
      std::size_t passed = 0;
      for (const auto& r : rs) {
        s << (r.status == "pass" ? "PASS " : r.status == "fail" ? "FAIL " : "ERROR") << " " << r.id;
        s << "  order=" << (r.zeta_order > 0 ? std::to_string(r.zeta_order) : "-");
        s << "  residual=" << r.residual_terms;
        if (timings) s << "  " << r.millis << " ms";
        if (!r.detail.empty()) s << "  (" << r.detail << ")";
        s << "\n";
        passed += r.passed();
      }
      s << passed << "/" << rs.size() << " checks passed (seed " << seed << ")\n";
      break;
    }
    case Format::latex: {
      s << "\\begin{tabular}{llrr" << (timings ? "r" : "") << "}\n";
      s << "check & status & $\\zeta$-order & residual terms" << (timings ? " & ms" : "") << " \\\\\n\\hline\n";
      for (const auto& r : rs) {
        s << "\\texttt{" << latex_escape(r.id) << "} & " << r.status << " & "
          << (r.zeta_order > 0 ? std::to_string(r.zeta_order) : "--") << " & " << r.residual_terms;
        if (timings) s << " & " << r.millis;
        s << " \\\\\n";
      }
      s << "\\end{tabular}\n";
      break;
    }
  }
  return s.str();
}

}  // namespace qtwist::verify
