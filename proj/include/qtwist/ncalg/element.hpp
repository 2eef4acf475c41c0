#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/presentation.hpp"
#include "qtwist/ncalg/word.hpp"
#include "qtwist/scalars/zeta_series.hpp"

namespace qtwist {

/// Element of a tensor power of algebras (one leg = a plain algebra element).
/// Terms map a tensor key (see keys::make) to a zeta series coefficient. The
/// element carries no presentation; products go through TensorAlgebra.
template <class R>
class Element {
 public:
  using Series = ZetaSeries<R>;
  using Map = std::unordered_map<std::string, Series>;

  Element() = default;
  explicit Element(int legs) : legs_(legs) {}

  static Element unit(int legs) {
    Element e(legs);
    e.add(keys::make(std::vector<std::string_view>(legs)), Series(R(1)));
    return e;
  }
  static Element scalar(int legs, const Series& s) {
    Element e(legs);
    e.add(keys::make(std::vector<std::string_view>(legs)), s);
    return e;
  }
  static Element monomial(const std::vector<std::string_view>& words, const Series& s) {
    Element e(int(words.size()));
    e.add(keys::make(words), s);
    return e;
  }

  int legs() const { return legs_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const std::string& key, const Series& s) {
    if (s.is_zero_series()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, s);
    } else {
      it->second += s;
      if (it->second.is_zero_series()) terms_.erase(it);
    }
  }
  void add(std::string&& key, Series&& s) {
    if (s.is_zero_series()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), std::move(s));
    if (!inserted) {
      it->second += s;
      if (it->second.is_zero_series()) terms_.erase(it);
    }
  }
  void add_term(const std::string& key, int zeta_power, const R& c) { add(key, Series(c, zeta_power)); }

  Series coefficient(const std::string& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Series() : it->second;
  }

  Element& operator+=(const Element& b) {
    check_legs(b);
    for (const auto& [k, s] : b.terms_) add(k, s);
    return *this;
  }
  Element& operator-=(const Element& b) {
    check_legs(b);
    for (const auto& [k, s] : b.terms_) add(k, -s);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const {
    Element r(legs_);
    for (const auto& [k, s] : terms_) r.terms_.emplace(k, -s);
    return r;
  }

  Element scaled(const R& c) const {
    Element r(legs_);
    if (qtwist::is_zero(c)) return r;
    for (const auto& [k, s] : terms_) r.terms_.emplace(k, s.scaled(c));
    return r;
  }
  Element scaled(const Series& c, int order) const {
    Element r(legs_);
    for (const auto& [k, s] : terms_) r.add(k, s.mul(c, order));
    return r;
  }
  /// Multiplies by zeta^k and truncates.
  Element zeta_shifted(int k, int order) const {
    Element r(legs_);
    for (const auto& [k2, s] : terms_) r.add(k2, s.shifted(k, order));
    return r;
  }
  Element truncated(int order) const {
    Element r(legs_);
    for (const auto& [k, s] : terms_) r.add(k, s.truncated(order));
    return r;
  }

  /// Lowest zeta power present (order+1 style sentinel `none` when zero).
  int min_zeta_power(int none = 1 << 20) const {
    int m = none;
    for (const auto& [k, s] : terms_) m = std::min(m, s.min_power());
    return m;
  }
  int max_zeta_power() const {
    int m = -1;
    for (const auto& [k, s] : terms_) m = std::max(m, s.max_power());
    return m;
  }

  /// Coefficient of zeta^k as a zeta-free element.
  Element zeta_component(int k) const {
    Element r(legs_);
    for (const auto& [key, s] : terms_) {
      R c = s.coeff(k);
      if (!qtwist::is_zero(c)) r.terms_.emplace(key, Series(c));
    }
    return r;
  }

  /// Number of (key, zeta power) pairs with nonzero coefficient.
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& [k, s] : terms_) n += s.terms().size();
    return n;
  }

  /// The scalar part, i.e. the coefficient of the empty key.
  Series scalar_part() const { return coefficient(keys::make(std::vector<std::string_view>(legs_))); }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.legs_ != b.legs_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, s] : a.terms_) {
      auto it = b.terms_.find(k);
      if (it == b.terms_.end() || it->second != s) return false;
    }
    return true;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// Keys sorted by (total length, bytes) for deterministic output.
  std::vector<std::string> sorted_keys() const {
    std::vector<std::string> ks;
    ks.reserve(terms_.size());
    for (const auto& [k, s] : terms_) ks.push_back(k);
    std::sort(ks.begin(), ks.end(), [](const std::string& x, const std::string& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x < y;
    });
    return ks;
  }

  /// Tensor product a (x) b as data (legs concatenated).
  friend Element tensor(const Element& a, const Element& b, int order) {
    Element r(a.legs_ + b.legs_);
    for (const auto& [ka, sa] : a.terms_)
      for (const auto& [kb, sb] : b.terms_) {
        if (sa.min_power() + sb.min_power() > order) continue;
        r.add(keys::concat(ka, kb), sa.mul(sb, order));
      }
    return r;
  }

  /// Places the legs of this element at the given positions of a `legs`-fold
  /// tensor, filling the rest with 1 (x_{12}, x_{13}, x_{23}, ...).
  Element embedded(int legs, const std::vector<int>& positions) const {
    if (int(positions.size()) != legs_) throw LegMismatch("embedding positions do not match leg count");
    Element r(legs);
    for (const auto& [k, s] : terms_) {
      auto parts = keys::split(k);
      std::vector<std::string_view> out(legs);
      for (int i = 0; i < legs_; ++i) {
        if (positions[i] < 0 || positions[i] >= legs) throw LegMismatch("embedding position out of range");
        out[positions[i]] = parts[i];
      }
      r.add(keys::make(out), s);
    }
    return r;
  }

  /// Leg permutation: leg i of the result is leg perm[i] of this.
  Element permuted(const std::vector<int>& perm) const {
    if (int(perm.size()) != legs_) throw LegMismatch("permutation does not match leg count");
    Element r(legs_);
    for (const auto& [k, s] : terms_) {
      auto parts = keys::split(k);
      std::vector<std::string_view> out(legs_);
      for (int i = 0; i < legs_; ++i) out[i] = parts[perm[i]];
      r.add(keys::make(out), s);
    }
    return r;
  }

 private:
  void check_legs(const Element& b) const {
    if (legs_ != b.legs_)
      throw LegMismatch("leg count mismatch: " + std::to_string(legs_) + " vs " + std::to_string(b.legs_));
  }

  int legs_ = 1;
  Map terms_;
};

}  // namespace qtwist
