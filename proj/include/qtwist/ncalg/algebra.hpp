#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/element.hpp"
#include "qtwist/ncalg/presentation.hpp"

namespace qtwist {

/// Normal-form engine for one presentation at a fixed zeta truncation order.
///
/// Products are computed by folding letters from the right: NF(x w) for a
/// letter x and a normal word w is memoized, and NF(u v) is obtained by
/// applying x -> NF(x .) for the letters of u from right to left. Rules are
/// applied only at the front of x w, which is the only reducible position.
/// An Algebra is not thread safe; give each worker its own instance.
template <class R>
class Algebra {
 public:
  using Series = ZetaSeries<R>;

  Algebra(std::shared_ptr<const Presentation<R>> p, int order) : pres_(std::move(p)), order_(order) {
    if (order_ < 0) throw ConfigError("negative truncation order");
  }

  const Presentation<R>& presentation() const { return *pres_; }
  std::shared_ptr<const Presentation<R>> presentation_ptr() const { return pres_; }
  int order() const { return order_; }

  /// NF(x w) for a normal word w.
  const WordPoly<R>& left_mul(Letter x, const Word& w) {
    std::string key;
    key.reserve(w.size() + 1);
    key.push_back(static_cast<char>(x));
    key.append(w);
    auto it = left_cache_.find(key);
    if (it != left_cache_.end()) return it->second;
    if (++depth_ > kMaxDepth) {
      depth_ = 0;
      throw NonTerminating("rewriting did not terminate in presentation " + pres_->name());
    }
    WordPoly<R> result;
    if (w.empty()) {
      result.emplace_back(key, Series(R(1)));
    } else {
      const Letter y = static_cast<Letter>(w[0]);
      const Rule<R>* r = pres_->rule(x, y);
      if (!r) {
        if (x > y && !pres_->free_pairs())
          throw MissingRule("no rule for " + pres_->generator_name(x) + " " + pres_->generator_name(y) +
                            " in presentation " + pres_->name());
        result.emplace_back(key, Series(R(1)));
      } else {
        std::unordered_map<Word, Series> acc;
        const Word rest = w.substr(1);
        for (const auto& [rw, rc] : r->rhs) {
          if (rc.min_power() > order_) continue;
          for (auto& [v, cv] : fold(rw, rest)) {
            Series c = cv.mul(rc, order_);
            if (c.is_zero_series()) continue;
            auto [pos, inserted] = acc.try_emplace(v, c);
            if (!inserted) pos->second += c;
          }
        }
        for (auto& [v, c] : acc)
          if (!c.is_zero_series()) result.emplace_back(v, std::move(c));
      }
    }
    --depth_;
    return left_cache_.emplace(std::move(key), std::move(result)).first->second;
  }

  /// NF(u v) where v is normal and u is any word.
  WordPoly<R> fold(const Word& u, const Word& v) {
    WordPoly<R> cur{{v, Series(R(1))}};
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      const Letter x = static_cast<Letter>(*it);
      if (cur.size() == 1) {
        const Series c = cur[0].second;
        const WordPoly<R>& nf = left_mul(x, cur[0].first);
        WordPoly<R> next;
        next.reserve(nf.size());
        for (const auto& [w, cw] : nf) {
          Series s = cw.mul(c, order_);
          if (!s.is_zero_series()) next.emplace_back(w, std::move(s));
        }
        cur = std::move(next);
        continue;
      }
      std::unordered_map<Word, Series> acc;
      for (const auto& [w, c] : cur) {
        const WordPoly<R>& nf = left_mul(x, w);
        for (const auto& [w2, c2] : nf) {
          Series s = c2.mul(c, order_);
          if (s.is_zero_series()) continue;
          auto [pos, inserted] = acc.try_emplace(w2, s);
          if (!inserted) pos->second += s;
        }
      }
      cur.clear();
      for (auto& [w, c] : acc)
        if (!c.is_zero_series()) cur.emplace_back(w, std::move(c));
    }
    return cur;
  }

  /// NF(u v) for normal words, memoized.
  const WordPoly<R>& mul_words(const Word& u, const Word& v) {
    std::string key = u;
    key.push_back('\xff');
    key.append(v);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
    if (pair_cache_.size() > kPairCacheLimit) pair_cache_.clear();
    return pair_cache_.emplace(std::move(key), fold(u, v)).first->second;
  }

  /// Normal form of an arbitrary word.
  WordPoly<R> normal_form(const Word& w) { return fold(w, Word()); }

  std::size_t cache_size() const { return left_cache_.size() + pair_cache_.size(); }

 private:
  static constexpr int kMaxDepth = 100000;
  static constexpr std::size_t kPairCacheLimit = 2000000;

  std::shared_ptr<const Presentation<R>> pres_;
  int order_;
  int depth_ = 0;
  std::unordered_map<std::string, WordPoly<R>> left_cache_;
  std::unordered_map<std::string, WordPoly<R>> pair_cache_;
};

/// Tensor product of algebras (one per leg, possibly different presentations),
/// all truncated at the same zeta order.
template <class R>
class TensorAlgebra {
 public:
  using Series = ZetaSeries<R>;
  using Elem = Element<R>;

  TensorAlgebra() = default;
  explicit TensorAlgebra(std::vector<Algebra<R>*> legs) : legs_(std::move(legs)) {
    if (legs_.empty()) throw ConfigError("tensor algebra needs at least one leg");
    for (auto* a : legs_)
      if (a->order() != legs_[0]->order()) throw ConfigError("legs with different truncation orders");
  }

  int legs() const { return int(legs_.size()); }
  int order() const { return legs_[0]->order(); }
  Algebra<R>& leg(int i) const { return *legs_.at(i); }
  const Presentation<R>& presentation(int i) const { return legs_.at(i)->presentation(); }

  /// Sub-tensor algebra on the listed legs.
  TensorAlgebra sub(const std::vector<int>& which) const {
    std::vector<Algebra<R>*> v;
    for (int i : which) v.push_back(legs_.at(i));
    return TensorAlgebra(v);
  }

  Elem unit() const { return Elem::unit(legs()); }
  Elem scalar(const R& c) const { return Elem::scalar(legs(), Series(c)); }
  Elem zeta(int k = 1) const { return Elem::scalar(legs(), Series::zeta_power(k)); }

  /// Generator `name` on leg i, 1 elsewhere.
  Elem gen(int leg_index, std::string_view name) const {
    std::vector<std::string> words(legs());
    words[leg_index] = Word(1, static_cast<char>(presentation(leg_index).letter(name)));
    return from_words(words, Series(R(1)));
  }

  /// Monomial from per-leg words given as text; normal-ordered on construction.
  Elem parse_monomial(const std::vector<std::string>& leg_text, const Series& c = Series(R(1))) const {
    if (int(leg_text.size()) != legs()) throw LegMismatch("monomial leg count mismatch");
    std::vector<std::string> words;
    for (int i = 0; i < legs(); ++i) words.push_back(presentation(i).parse_word(leg_text[i]));
    return from_words(words, c);
  }

  Elem from_words(const std::vector<std::string>& words, const Series& c) const {
    Elem e(legs());
    std::vector<std::string_view> views(words.begin(), words.end());
    e.add(keys::make(views), c.truncated(order()));
    return normal_form(e);
  }

  /// Rewrites every leg word to normal form.
  Elem normal_form(const Elem& x) const {
    check(x);
    Elem r(legs());
    for (const auto& [k, s] : x.terms()) {
      auto parts = keys::split(k);
      bool normal = true;
      for (int i = 0; i < legs(); ++i)
        if (!presentation(i).is_normal(parts[i])) normal = false;
      if (normal) {
        r.add(k, s.truncated(order()));
        continue;
      }
      std::vector<WordPoly<R>> polys;
      for (int i = 0; i < legs(); ++i) polys.push_back(leg(i).normal_form(Word(parts[i])));
      combine(polys, s, r);
    }
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    check(a);
    check(b);
    Elem r(legs());
    const int n = order();
    if (a.is_zero() || b.is_zero()) return r;
    int bmin = b.min_zeta_power();
    std::vector<WordPoly<R>> polys(legs());
    for (const auto& [ka, sa] : a.terms()) {
      if (sa.min_power() + bmin > n) continue;
      auto pa = keys::split(ka);
      for (const auto& [kb, sb] : b.terms()) {
        if (sa.min_power() + sb.min_power() > n) continue;
        Series c = sa.mul(sb, n);
        if (c.is_zero_series()) continue;
        auto pb = keys::split(kb);
        if (legs() == 1) {
          for (const auto& [w, cw] : leg(0).mul_words(Word(pa[0]), Word(pb[0]))) {
            Series s = cw.mul(c, n);
            if (!s.is_zero_series()) r.add(keys::single(w), std::move(s));
          }
          continue;
        }
        for (int i = 0; i < legs(); ++i) polys[i] = leg(i).mul_words(Word(pa[i]), Word(pb[i]));
        combine(polys, c, r);
      }
    }
    return r;
  }

  Elem mul(const std::vector<Elem>& factors) const {
    if (factors.empty()) return unit();
    Elem r = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) r = mul(r, factors[i]);
    return r;
  }

  Elem pow(const Elem& a, int k) const {
    Elem r = unit();
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  Elem commutator(const Elem& a, const Elem& b) const { return mul(a, b) - mul(b, a); }

  /// Inverse of an element whose zeta^0 part is an invertible scalar.
  Elem inverse(const Elem& x) const {
    check(x);
    const int n = order();
    Elem zero_part = x.zeta_component(0);
    Series c0 = zero_part.scalar_part();
    if (zero_part.size() != 1 || c0.is_zero_series())
      throw NotInvertible("inverse needs an invertible scalar zeta^0 part");
    R inv0 = qtwist::inverse(c0.coeff(0));
    Elem y = x.scaled(inv0) - unit();  // x = c0 (1 + y), y of zeta order >= 1
    Elem r = unit(), p = unit();
    for (int k = 1; k <= n; ++k) {
      p = mul(p, y).scaled(R(-1));
      if (p.is_zero()) break;
      r += p;
    }
    return r.scaled(inv0);
  }

  std::string format(const Elem& x) const {
    check(x);
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& k : x.sorted_keys()) {
      auto parts = keys::split(k);
      std::string w;
      for (int i = 0; i < legs(); ++i) {
        if (i) w += " (x) ";
        w += presentation(i).format_word(parts[i]);
      }
      for (const auto& [p, c] : x.terms().at(k).terms()) {
        out += "[" + format_scalar(c, presentation(0).root_degree()) + "]";
        if (p == 1) out += " zeta";
        if (p > 1) out += " zeta^" + std::to_string(p);
        out += " " + w + "\n";
      }
    }
    return out;
  }

 private:
  void check(const Elem& x) const {
    if (x.legs() != legs())
      throw LegMismatch("element has " + std::to_string(x.legs()) + " legs, algebra has " +
                        std::to_string(legs()));
  }

  /// Adds c * (p_0 (x) p_1 (x) ...) to r.
  void combine(const std::vector<WordPoly<R>>& polys, const Series& c, Elem& r) const {
    const int n = order();
    std::vector<std::size_t> idx(polys.size(), 0);
    for (const auto& p : polys)
      if (p.empty()) return;
    std::vector<std::string_view> views(polys.size());
    while (true) {
      Series s = c;
      for (std::size_t i = 0; i < polys.size() && !s.is_zero_series(); ++i) {
        const auto& t = polys[i][idx[i]].second;
        if (!(t.terms().size() == 1 && t.terms()[0].first == 0 && t.terms()[0].second == R(1)))
          s = s.mul(t, n);
        views[i] = polys[i][idx[i]].first;
      }
      if (!s.is_zero_series()) r.add(keys::make(views), s);
      std::size_t i = polys.size();
      while (i > 0) {
        --i;
        if (++idx[i] < polys[i].size()) break;
        idx[i] = 0;
        if (i == 0) return;
      }
    }
  }

  std::vector<Algebra<R>*> legs_;
};

}  // namespace qtwist
