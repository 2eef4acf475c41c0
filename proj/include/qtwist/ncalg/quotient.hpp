#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/algebra.hpp"
#include "qtwist/ncalg/linear.hpp"

namespace qtwist {

/// An algebra in which products can be computed and reduced to canonical
/// coordinates. Elements are one-leg Elements over the base presentation.
template <class R>
class ReducingBase {
 public:
  virtual ~ReducingBase() = default;
  virtual const Presentation<R>& presentation() const = 0;
  virtual int order() const = 0;
  virtual Element<R> reduce(const Element<R>& x) = 0;
  virtual Element<R> mul(const Element<R>& a, const Element<R>& b) = 0;

  Element<R> letter(std::string_view name) {
    Word w(1, static_cast<char>(presentation().letter(name)));
    return Element<R>::monomial({w}, ZetaSeries<R>(R(1)));
  }
  Element<R> word(const Word& w) { return reduce(Element<R>::monomial({w}, ZetaSeries<R>(R(1)))); }
};

/// Base given by a confluent rewrite presentation.
template <class R>
class RewriteBase : public ReducingBase<R> {
 public:
  RewriteBase(std::shared_ptr<const Presentation<R>> p, int order) : alg_(std::move(p), order), tensor_({&alg_}) {}
  RewriteBase(const RewriteBase&) = delete;
  RewriteBase& operator=(const RewriteBase&) = delete;
  const Presentation<R>& presentation() const override { return alg_.presentation(); }
  int order() const override { return alg_.order(); }
  Element<R> reduce(const Element<R>& x) override { return tensor_.normal_form(x); }
  Element<R> mul(const Element<R>& a, const Element<R>& b) override { return tensor_.mul(a, b); }

 private:
  Algebra<R> alg_;
  TensorAlgebra<R> tensor_;
};

/// Graded quotient of the free algebra on a block of letters by homogeneous
/// relations, computed degree by degree up to a bound. Each multidegree gets
/// a reduced echelon basis of the ideal; words that are not pivots form the
/// remainder basis.
template <class R>
class GradedBlock {
 public:
  using Coords = std::vector<std::pair<Word, R>>;

  GradedBlock(std::vector<Letter> letters, std::vector<Coords> relations, int bound)
      : letters_(std::move(letters)), relations_(std::move(relations)), bound_(bound) {
    for (std::size_t i = 0; i < letters_.size(); ++i) slot_[letters_[i]] = int(i);
    for (const auto& r : relations_) {
      if (r.empty()) throw InconsistentIdeal("empty relation");
      auto c = content(r[0].first);
      for (const auto& [w, x] : r)
        if (content(w) != c) throw InconsistentIdeal("relation is not homogeneous");
      rel_content_.push_back(c);
    }
  }

  bool contains(Letter l) const { return slot_.count(l) != 0; }
  int bound() const { return bound_; }

  /// Remainder coordinates of a word in the block letters.
  const Coords& reduce(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    if (int(w.size()) > bound_)
      throw Inexpressible("word of degree " + std::to_string(w.size()) + " exceeds the quotient degree bound " +
                          std::to_string(bound_));
    Component& comp = component(content(w));
    Coords out;
    auto pos = comp.index.find(w);
    auto piv = comp.pivot_row.find(pos->second);
    if (piv == comp.pivot_row.end()) {
      out.emplace_back(w, R(1));
    } else {
      const auto& row = comp.rows[piv->second];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (int(j) == pos->second || is_zero(row[j])) continue;
        out.emplace_back(comp.words[j], -row[j]);
      }
    }
    return cache_.emplace(w, std::move(out)).first->second;
  }

  /// Dimension of the ideal in the multidegree of w (for diagnostics).
  std::size_t ideal_dimension(const Word& w) { return component(content(w)).rows.size(); }

 private:
  struct Component {
    std::vector<Word> words;
    std::map<Word, int> index;
    DenseMatrix<R> rows;
    std::map<int, int> pivot_row;
  };

  std::vector<int> content(const Word& w) const {
    std::vector<int> c(letters_.size(), 0);
    for (char ch : w) {
      auto it = slot_.find(static_cast<Letter>(ch));
      if (it == slot_.end()) throw Error("letter outside the block");
      ++c[it->second];
    }
    return c;
  }

  void words_with_content(std::vector<int>& c, Word& prefix, std::vector<Word>& out) const {
    bool any = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      any = true;
      --c[i];
      prefix.push_back(static_cast<char>(letters_[i]));
      words_with_content(c, prefix, out);
      prefix.pop_back();
      ++c[i];
    }
    if (!any) out.push_back(prefix);
  }

  Component& component(const std::vector<int>& c) {
    auto it = components_.find(c);
    if (it != components_.end()) return it->second;
    Component comp;
    std::vector<int> tmp = c;
    Word prefix;
    words_with_content(tmp, prefix, comp.words);
    // Larger words first so that they become pivots.
    std::sort(comp.words.begin(), comp.words.end(), std::greater<Word>());
    for (std::size_t i = 0; i < comp.words.size(); ++i) comp.index[comp.words[i]] = int(i);
    const int cols = int(comp.words.size());
    for (std::size_t r = 0; r < relations_.size(); ++r) {
      std::vector<int> rest = c;
      bool fits = true;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        rest[i] -= rel_content_[r][i];
        if (rest[i] < 0) fits = false;
      }
      if (!fits) continue;
      std::vector<Word> outer;
      Word p;
      words_with_content(rest, p, outer);
      for (const auto& w : outer) {
        for (std::size_t split = 0; split <= w.size(); ++split) {
          std::vector<R> row(cols, R(0));
          for (const auto& [rw, coef] : relations_[r]) {
            Word full = w.substr(0, split) + rw + w.substr(split);
            auto& cell = row[comp.index.at(full)];
            cell = cell + coef;
          }
          comp.rows.push_back(std::move(row));
        }
      }
    }
    auto pivots = rref(comp.rows, cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) comp.pivot_row[pivots[r]] = int(r);
    return components_.emplace(c, std::move(comp)).first->second;
  }

  std::vector<Letter> letters_;
  std::map<Letter, int> slot_;
  std::vector<Coords> relations_;
  std::vector<std::vector<int>> rel_content_;
  int bound_;
  std::map<std::vector<int>, Component> components_;
  std::unordered_map<Word, Coords> cache_;
};

/// Triangular presentation (lowering letters, Cartan letters, raising letters
/// with cross rules) whose lowering and raising blocks are free up to
/// homogeneous relations handled by GradedBlocks. Normal words of the
/// rewrite part are block words separated by Cartan letters; each maximal
/// run of block letters is reduced in its block.
template <class R>
class TriangularQuotient : public ReducingBase<R> {
 public:
  TriangularQuotient(std::shared_ptr<const Presentation<R>> p, int order,
                     std::vector<std::shared_ptr<GradedBlock<R>>> blocks)
      : alg_(std::move(p), order), tensor_({&alg_}), blocks_(std::move(blocks)) {}
  TriangularQuotient(const TriangularQuotient&) = delete;
  TriangularQuotient& operator=(const TriangularQuotient&) = delete;

  const Presentation<R>& presentation() const override { return alg_.presentation(); }
  int order() const override { return alg_.order(); }

  Element<R> reduce(const Element<R>& x) override {
    Element<R> nf = tensor_.normal_form(x);
    Element<R> out(1);
    for (const auto& [k, s] : nf.terms()) {
      const Word w(keys::leg(k, 0));
      for (const auto& [w2, c] : reduce_word(w)) out.add(keys::single(w2), s.scaled(c));
    }
    return out;
  }

  Element<R> mul(const Element<R>& a, const Element<R>& b) override { return reduce(tensor_.mul(a, b)); }

 private:
  int block_of(Letter l) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i]->contains(l)) return int(i);
    return -1;
  }

  std::vector<std::pair<Word, R>> reduce_word(const Word& w) {
    std::vector<std::pair<Word, R>> acc{{Word(), R(1)}};
    std::size_t i = 0;
    while (i < w.size()) {
      const int b = block_of(static_cast<Letter>(w[i]));
      std::size_t j = i + 1;
      if (b >= 0)
        while (j < w.size() && block_of(static_cast<Letter>(w[j])) == b) ++j;
      const Word seg = w.substr(i, j - i);
      std::vector<std::pair<Word, R>> next;
      if (b < 0) {
        for (auto& [u, c] : acc) next.emplace_back(u + seg, c);
      } else {
        const auto& red = blocks_[b]->reduce(seg);
        for (const auto& [u, c] : acc)
          for (const auto& [v, d] : red) next.emplace_back(u + v, c * d);
      }
      acc = std::move(next);
      i = j;
    }
    return acc;
  }

  Algebra<R> alg_;
  TensorAlgebra<R> tensor_;
  std::vector<std::shared_ptr<GradedBlock<R>>> blocks_;
};

}  // namespace qtwist
