#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/scalars/scalar.hpp"

namespace qtwist {

/// Truncated power series in the formal parameter zeta with coefficients in R.
///
/// Stored sparsely as (power, coefficient) pairs sorted by power with no zero
/// coefficients. Truncation is explicit: operations that can raise the degree
/// take the order N and drop every power above it.
template <class R>
class ZetaSeries {
 public:
  using Term = std::pair<int, R>;

  ZetaSeries() = default;
  explicit ZetaSeries(R c, int power = 0) {
    if (!is_zero(c)) terms_.emplace_back(power, std::move(c));
  }

  static ZetaSeries zeta_power(int k) { return ZetaSeries(R(1), k); }

  bool is_zero_series() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  int min_power() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_power() const { return terms_.empty() ? -1 : terms_.back().first; }

  R coeff(int k) const {
    for (const auto& [p, c] : terms_)
      if (p == k) return c;
    return R(0);
  }

  /// Adds c * zeta^k.
  void add_term(int k, const R& c) {
    if (is_zero(c)) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, int p) { return t.first < p; });
    if (it != terms_.end() && it->first == k) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    } else {
      terms_.insert(it, Term(k, c));
    }
  }

  ZetaSeries& operator+=(const ZetaSeries& b) {
    if (b.terms_.empty()) return *this;
    if (terms_.empty()) return *this = b;
    std::vector<Term> out;
    out.reserve(terms_.size() + b.terms_.size());
    auto i = terms_.begin(), j = b.terms_.begin();
    while (i != terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.push_back(*j++);
      } else {
        R s = i->second + j->second;
        if (!is_zero(s)) out.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  ZetaSeries& operator-=(const ZetaSeries& b) { return *this += -b; }
  ZetaSeries operator-() const {
    ZetaSeries r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend ZetaSeries operator+(ZetaSeries a, const ZetaSeries& b) { return a += b; }
  friend ZetaSeries operator-(ZetaSeries a, const ZetaSeries& b) { return a -= b; }

  ZetaSeries scaled(const R& s) const {
    if (is_zero(s)) return {};
    ZetaSeries r = *this;
    for (auto& t : r.terms_) t.second = t.second * s;
    return r;
  }

  /// Multiplies by zeta^k and drops powers above order.
  ZetaSeries shifted(int k, int order) const {
    ZetaSeries r;
    for (const auto& [p, c] : terms_)
      if (p + k <= order) r.terms_.emplace_back(p + k, c);
    return r;
  }

  ZetaSeries truncated(int order) const {
    ZetaSeries r;
    for (const auto& t : terms_)
      if (t.first <= order) r.terms_.push_back(t);
    return r;
  }

  /// Product truncated at zeta^order.
  ZetaSeries mul(const ZetaSeries& b, int order) const {
    ZetaSeries r;
    if (terms_.empty() || b.terms_.empty()) return r;
    if (terms_.size() == 1 && b.terms_.size() == 1) {
      int p = terms_[0].first + b.terms_[0].first;
      if (p <= order) r.terms_.emplace_back(p, terms_[0].second * b.terms_[0].second);
      return r;
    }
    std::vector<R> acc(order + 1, R(0));
    std::vector<char> used(order + 1, 0);
    for (const auto& [p, c] : terms_) {
      for (const auto& [p2, c2] : b.terms_) {
        int k = p + p2;
        if (k > order) break;
        acc[k] += c * c2;
        used[k] = 1;
      }
    }
    for (int k = 0; k <= order; ++k)
      if (used[k] && !is_zero(acc[k])) r.terms_.emplace_back(k, std::move(acc[k]));
    return r;
  }

  /// Inverse truncated at zeta^order; the constant term must be invertible.
  ZetaSeries inverse(int order) const {
    R c0 = coeff(0);
    if (terms_.empty() || terms_.front().first != 0 || is_zero(c0))
      throw NotInvertible("zeta series without invertible constant term");
    R inv0 = qtwist::inverse(c0);
    std::vector<R> out(order + 1, R(0));
    out[0] = inv0;
    for (int k = 1; k <= order; ++k) {
      R s(0);
      for (const auto& [p, c] : terms_) {
        if (p == 0) continue;
        if (p > k) break;
        s += c * out[k - p];
      }
      out[k] = -(s * inv0);
    }
    ZetaSeries r;
    for (int k = 0; k <= order; ++k)
      if (!is_zero(out[k])) r.terms_.emplace_back(k, out[k]);
    return r;
  }

  friend bool operator==(const ZetaSeries& a, const ZetaSeries& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second))
        return false;
    return true;
  }
  friend bool operator!=(const ZetaSeries& a, const ZetaSeries& b) { return !(a == b); }

  std::string to_string(int context_root = 0) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "[" + format_scalar(c, context_root) + "]";
      if (p == 1) s += " zeta";
      if (p > 1) s += " zeta^" + std::to_string(p);
    }
    return s;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace qtwist
