#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/algebra.hpp"

namespace qtwist {

enum class CoproductKind { standard, k_twisted, classical, psi_twisted };

inline std::string to_string(CoproductKind k) {
  switch (k) {
    case CoproductKind::standard: return "standard";
    case CoproductKind::k_twisted: return "K-twisted";
    case CoproductKind::classical: return "classical";
    case CoproductKind::psi_twisted: return "psi-twisted";
  }
  return "?";
}

/// Values of the coproduct on generators, as normal-ordered two-leg elements.
template <class R>
class CoproductTable {
 public:
  CoproductTable() = default;
  CoproductTable(std::shared_ptr<const Presentation<R>> p, CoproductKind kind) : pres_(std::move(p)), kind_(kind) {}

  CoproductKind kind() const { return kind_; }
  const Presentation<R>& presentation() const { return *pres_; }

  void set(Letter g, Element<R> value) {
    if (value.legs() != 2) throw LegMismatch("coproduct values need two legs");
    values_[g] = std::move(value);
  }
  bool has(Letter g) const { return values_.count(g) != 0; }
  const Element<R>& at(Letter g) const {
    auto it = values_.find(g);
    if (it == values_.end())
      throw MissingGenerator("no coproduct for generator '" + pres_->generator_name(g) + "' in " + pres_->name());
    return it->second;
  }
  const std::map<Letter, Element<R>>& values() const { return values_; }

 private:
  std::shared_ptr<const Presentation<R>> pres_;
  CoproductKind kind_ = CoproductKind::standard;
  std::map<Letter, Element<R>> values_;
};

/// A presentation with its coproduct at a fixed zeta order: normal forms on
/// one, two and three legs, the multiplicative extension of the coproduct
/// and the projected-leg operations. Not thread safe (memo tables); each
/// worker builds its own.
template <class R>
class HopfContext {
 public:
  HopfContext(std::shared_ptr<const Presentation<R>> p, int order)
      : alg_(p, order), t1_({&alg_}), t2_({&alg_, &alg_}), t3_({&alg_, &alg_, &alg_}), table_(p, CoproductKind::standard) {}
  HopfContext(const HopfContext&) = delete;
  HopfContext& operator=(const HopfContext&) = delete;

  const Presentation<R>& presentation() const { return alg_.presentation(); }
  std::shared_ptr<const Presentation<R>> presentation_ptr() const { return alg_.presentation_ptr(); }
  int order() const { return alg_.order(); }
  const std::string& name() const { return presentation().name(); }

  /// Normal-form arithmetic on 1, 2 or 3 legs.
  const TensorAlgebra<R>& legs(int k) const {
    switch (k) {
      case 1: return t1_;
      case 2: return t2_;
      case 3: return t3_;
    }
    throw LegMismatch("contexts provide 1 to 3 legs");
  }
  const TensorAlgebra<R>& on(const Element<R>& x) const { return legs(x.legs()); }

  void set_coproduct(CoproductTable<R> table) {
    table_ = std::move(table);
    delta_cache_.clear();
  }
  const CoproductTable<R>& coproduct() const { return table_; }
  bool has_coproduct() const { return !table_.values().empty(); }

  Element<R> gen(std::string_view name) const { return t1_.gen(0, name); }

  /// Coproduct of a word, multiplied out from the table and memoized by prefix.
  const Element<R>& delta_word(const Word& w) {
    auto it = delta_cache_.find(w);
    if (it != delta_cache_.end()) return it->second;
    Element<R> value(2);
    if (w.empty()) {
      value = Element<R>::unit(2);
    } else if (w.size() == 1) {
      value = t2_.normal_form(table_.at(static_cast<Letter>(w[0])).truncated(order()));
    } else {
      const Word head = w.substr(0, w.size() - 1);
      const Element<R>& a = delta_word(head);
      value = t2_.mul(a, delta_word(w.substr(w.size() - 1)));
    }
    return delta_cache_.emplace(w, std::move(value)).first->second;
  }

  /// Multiplicative, linear extension of the table to a one-leg element.
  Element<R> delta(const Element<R>& x) {
    if (x.legs() != 1) throw LegMismatch("delta expects a one-leg element");
    return apply_delta(x, 0);
  }

  /// Coproduct applied to leg `leg` of a k-leg element (k+1 legs result):
  /// leg 0 of a two-leg element gives (delta (x) id), leg 1 gives (id (x) delta).
  Element<R> apply_delta(const Element<R>& x, int leg) {
    if (leg < 0 || leg >= x.legs()) throw LegMismatch("delta leg out of range");
    Element<R> out(x.legs() + 1);
    const int n = order();
    for (const auto& [k, s] : x.terms()) {
      auto parts = keys::split(k);
      const Element<R>& d = delta_word(Word(parts[leg]));
      std::vector<std::string_view> views(x.legs() + 1);
      for (int i = 0, j = 0; i < x.legs(); ++i, ++j) {
        if (i == leg) {
          ++j;
          continue;
        }
        views[j] = parts[i];
      }
      for (const auto& [dk, ds] : d.terms()) {
        if (ds.min_power() + s.min_power() > n) continue;
        auto dp = keys::split(dk);
        views[leg] = dp[0];
        views[leg + 1] = dp[1];
        out.add(keys::make(views), ds.mul(s, n));
      }
    }
    return out;
  }

  /// Whether a letter belongs to the Cartan Laurent subalgebra.
  bool is_cartan(Letter l) const { return presentation().is_cartan(l); }

  /// Keeps the terms whose word on `leg` uses only letters accepted by `keep`
  /// (the empty word included), dropping the rest.
  template <class Pred>
  Element<R> project_leg(const Element<R>& x, int leg, Pred keep) const {
    Element<R> out(x.legs());
    for (const auto& [k, s] : x.terms()) {
      auto w = keys::leg(k, leg);
      bool ok = true;
      for (char c : w)
        if (!keep(static_cast<Letter>(c))) ok = false;
      if (ok) out.add(k, s);
    }
    return out;
  }
  Element<R> project_cartan(const Element<R>& x, int leg) const {
    return project_leg(x, leg, [this](Letter l) { return is_cartan(l); });
  }
  /// Projection (id - pr_K) on a leg.
  Element<R> project_off_cartan(const Element<R>& x, int leg) const { return x - project_cartan(x, leg); }

  /// The projected legs of a coproduct: which = 1 keeps Cartan words on the
  /// second leg, which = 2 keeps Cartan words on the first leg, which = 3
  /// removes Cartan words from both.
  Element<R> projected_legs(const Element<R>& x, int which) {
    Element<R> d = delta(x);
    switch (which) {
      case 1: return project_cartan(d, 1);
      case 2: return project_cartan(d, 0);
      case 3: return project_off_cartan(project_off_cartan(d, 0), 1);
    }
    throw ConfigError("projected leg index must be 1, 2 or 3");
  }

  /// Residuals of delta(b) delta(a) - delta(rhs) over all rules: empty when
  /// the table extends to an algebra map.
  std::vector<std::pair<std::string, Element<R>>> algebra_map_residuals() {
    std::vector<std::pair<std::string, Element<R>>> out;
    const auto& p = presentation();
    for (const auto& r : p.rules()) {
      Element<R> lhs = t2_.mul(delta_word(Word(1, char(r.left))), delta_word(Word(1, char(r.right))));
      for (const auto& [w, s] : r.rhs) lhs -= delta_word(w).scaled(s, order());
      if (!lhs.is_zero()) out.emplace_back(p.generator_name(r.left) + " " + p.generator_name(r.right), lhs);
    }
    return out;
  }

  /// Generators on which (delta (x) id) delta and (id (x) delta) delta differ.
  std::vector<std::pair<std::string, Element<R>>> coassociativity_residuals() {
    std::vector<std::pair<std::string, Element<R>>> out;
    for (const auto& [g, v] : table_.values()) {
      const Element<R>& d = delta_word(Word(1, char(g)));
      Element<R> diff = apply_delta(d, 0) - apply_delta(d, 1);
      if (!diff.is_zero()) out.emplace_back(presentation().generator_name(g), diff);
    }
    return out;
  }

 private:
  Algebra<R> alg_;
  TensorAlgebra<R> t1_, t2_, t3_;
  CoproductTable<R> table_;
  std::unordered_map<Word, Element<R>> delta_cache_;
};

}  // namespace qtwist
