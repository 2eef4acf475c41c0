#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qtwist/ncalg/algebra.hpp"

namespace qtwist {

/// An overlap c b a whose two reductions disagree.
template <class R>
struct Ambiguity {
  std::string overlap;
  Element<R> difference;
};

/// Resolves every overlap c b a for which both c b and b a carry rules, once
/// by rewriting c b first and once by rewriting b a first, each followed by
/// full normal ordering at the given zeta order. Rules have quadratic left
/// sides, so overlaps have length three and this is the complete local
/// confluence test. An empty result means the table is confluent to `order`.
template <class R>
std::vector<Ambiguity<R>> check_local_confluence(std::shared_ptr<const Presentation<R>> p, int order) {
  Algebra<R> alg(p, order);
  std::vector<Ambiguity<R>> out;
  const int n = int(p->size());
  auto accumulate = [&](Element<R>& acc, const WordPoly<R>& poly, const ZetaSeries<R>& c) {
    for (const auto& [w, s] : poly) {
      ZetaSeries<R> t = s.mul(c, order);
      if (!t.is_zero_series()) acc.add(keys::single(w), t);
    }
  };
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      const Rule<R>* left = p->rule(Letter(c), Letter(b));
      if (!left) continue;
      for (int a = 0; a < n; ++a) {
        const Rule<R>* right = p->rule(Letter(b), Letter(a));
        if (!right) continue;
        Element<R> one(1), two(1);
        for (const auto& [w, s] : left->rhs) accumulate(one, alg.fold(w, Word(1, char(a))), s);
        for (const auto& [w, s] : right->rhs) accumulate(two, alg.fold(Word(1, char(c)), w), s);
        Element<R> diff = one - two;
        if (!diff.is_zero())
          out.push_back({p->format_word(Word{char(c), char(b), char(a)}), std::move(diff)});
      }
    }
  return out;
}

}  // namespace qtwist
