#pragma once

#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "qtwist/error.hpp"
#include "qtwist/expr/evaluate.hpp"
#include "qtwist/ncalg/rule_io.hpp"

#ifndef QTWIST_DATA_DIR
#define QTWIST_DATA_DIR "data"
#endif

namespace qtwist {

/// Directory with rules/ and catalog/; QTWIST_DATA_DIR in the environment
/// overrides the compiled-in location.
inline std::string default_data_dir() {
  if (const char* env = std::getenv("QTWIST_DATA_DIR"); env && *env) return env;
  return QTWIST_DATA_DIR;
}

/// Coefficient ring of a named algebra: quantum algebras use QCoeff.
inline bool is_quantum_algebra(const std::string& name) {
  return name == "D2" || name == "D3" || name == "F2A" || name == "F3A";
}

/// Loads shipped rule tables and the catalog, and hands out Hopf contexts and
/// evaluators per truncation order. One registry per thread.
class Registry {
 public:
  explicit Registry(std::string data_dir = default_data_dir()) : dir_(std::move(data_dir)) {
    namespace fs = std::filesystem;
    const fs::path cat = fs::path(dir_) / "catalog";
    if (!fs::is_directory(cat)) throw ConfigError("catalog directory missing: " + cat.string());
    std::map<std::string, fs::path> files;
    for (const auto& e : fs::directory_iterator(cat))
      if (e.path().extension() == ".cat") files[e.path().filename().string()] = e.path();
    for (const auto& [n, p] : files) catalog_.load(p.string());
  }
  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

  const std::string& data_dir() const { return dir_; }
  const expr::Catalog& catalog() const { return catalog_; }

  template <class R>
  std::shared_ptr<const Presentation<R>> presentation(const std::string& name) {
    auto& cache = presentations<R>();
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    check_ring<R>(name);
    auto p = load_rule_table<R>((std::filesystem::path(dir_) / "rules" / (name + ".rules")).string());
    if (p->name() != name) throw ConfigError("rule table for " + name + " names " + p->name());
    return cache.emplace(name, std::move(p)).first->second;
  }

  /// Hopf context at the given order, with the catalog coproduct installed
  /// when the catalog defines one.
  template <class R>
  HopfContext<R>& context(const std::string& name, int order) {
    auto& cache = contexts<R>();
    auto key = std::make_pair(name, order);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto ctx = std::make_unique<HopfContext<R>>(presentation<R>(name), order);
    auto& ref = *cache.emplace(key, std::move(ctx)).first->second;
    if (const auto* b = catalog_.coproduct(name)) ref.set_coproduct(evaluator<R>(order).coproduct_table(*b, ref));
    return ref;
  }

  /// Evaluator whose algebras all live at `order`; params bind free names.
  template <class R>
  expr::Evaluator<R>& evaluator(int order, const std::map<std::string, R>& params = {}) {
    auto& cache = evaluators<R>();
    std::string key = std::to_string(order);
    for (const auto& [k, v] : params) key += ";" + k + "=" + format_scalar(v);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto ev = std::make_unique<expr::Evaluator<R>>(
        catalog_, [this, order](const std::string& n) -> HopfContext<R>& { return context<R>(n, order); }, params);
    return *cache.emplace(key, std::move(ev)).first->second;
  }

 private:
  template <class R>
  static void check_ring(const std::string& name) {
    if (is_quantum_algebra(name) != ScalarTraits<R>::quantum)
      throw ConfigError("algebra " + name + " requested over the wrong coefficient ring");
  }

  template <class R>
  auto& presentations() {
    if constexpr (ScalarTraits<R>::quantum) return qpres_;
    else return cpres_;
  }
  template <class R>
  auto& contexts() {
    if constexpr (ScalarTraits<R>::quantum) return qctx_;
    else return cctx_;
  }
  template <class R>
  auto& evaluators() {
    if constexpr (ScalarTraits<R>::quantum) return qeval_;
    else return ceval_;
  }

  std::string dir_;
  expr::Catalog catalog_;
  std::map<std::string, std::shared_ptr<const Presentation<QCoeff>>> qpres_;
  std::map<std::string, std::shared_ptr<const Presentation<Rational>>> cpres_;
  std::map<std::pair<std::string, int>, std::unique_ptr<HopfContext<QCoeff>>> qctx_;
  std::map<std::pair<std::string, int>, std::unique_ptr<HopfContext<Rational>>> cctx_;
  std::map<std::string, std::unique_ptr<expr::Evaluator<QCoeff>>> qeval_;
  std::map<std::string, std::unique_ptr<expr::Evaluator<Rational>>> ceval_;
};

}  // namespace qtwist
