#pragma once

#include <algorithm>
#include <map>
#include <cstdlib>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/quotient.hpp"

namespace qtwist {

/// Generators defined by their images in a base algebra. Cartan letters of
/// the base may be listed by name in `generators`; they map to themselves.
template <class R>
struct DeriveRequest {
  std::string name;
  std::vector<std::string> generators;
  std::map<std::string, Element<R>> images;
  std::vector<std::pair<std::string, std::string>> inverse_pairs;
};

namespace detail {

template <class R>
class RuleSolver {
 public:
  RuleSolver(ReducingBase<R>& base, const DeriveRequest<R>& req) : base_(base), req_(req) {
    const auto& bp = base_.presentation();
    rank_ = bp.cartan_rank();
    for (std::size_t i = 0; i < bp.size(); ++i) dim_ = std::max(dim_, int(bp.weight(Letter(i)).size()));
    target_ = std::make_shared<Presentation<R>>(req_.name, bp.root_degree(), req_.generators);
    images_[Word()] = Element<R>::unit(1);
    for (const auto& g : req_.generators) {
      const Letter l = target_->letter(g);
      if (req_.images.count(g)) {
        images_[Word(1, char(l))] = base_.reduce(req_.images.at(g));
        continue;
      }
      if (!bp.has_generator(g) || !bp.is_cartan(bp.letter(g)))
        throw MissingGenerator("derived generator '" + g + "' has no image");
      const auto& tag = bp.cartan(bp.letter(g));
      target_->set_cartan(g, tag.axis, tag.sign);
      cartan_letter_[{tag.axis, tag.sign}] = l;
      images_[Word(1, char(l))] = base_.letter(g);
    }
    for (const auto& [a, b] : req_.inverse_pairs) target_->add_inverse_pair(a, b);
    for (const auto& g : req_.generators) {
      const Letter l = target_->letter(g);
      if (target_->is_cartan(l)) {
        target_->set_weight(g, std::vector<int>(dim_, 0));
        continue;
      }
      const Element<R> x0 = images_.at(Word(1, char(l))).zeta_component(0);
      if (x0.is_zero()) throw Inexpressible("image of '" + g + "' has no zeta^0 part");
      auto w = common_weight(x0);
      target_->set_weight(g, w);
      int deg = 0;
      for (const auto& [k, s] : x0.terms()) deg = std::max(deg, degree(keys::leg(k, 0)));
      if (deg == 0) throw Inexpressible("image of '" + g + "' lies in the Cartan part");
      skeleton_letters_.push_back({l, w, deg});
    }
  }

  std::shared_ptr<Presentation<R>> run() {
    const int n = int(target_->size());
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < b; ++a) {
        if (target_->rule(Letter(b), Letter(a))) continue;
        target_->set_rule(Letter(b), Letter(a), solve(Word{char(b), char(a)}));
      }
    return target_;
  }

  /// Full image of a target word.
  const Element<R>& image(const Word& w) {
    auto it = images_.find(w);
    if (it != images_.end()) return it->second;
    Element<R> x = image(w.substr(0, w.size() - 1));
    x = base_.mul(x, image(w.substr(w.size() - 1)));
    return images_.emplace(w, std::move(x)).first->second;
  }

  /// Rewrites the image of an arbitrary target word in the ordered basis.
  WordPoly<R> solve(const Word& product) {
    const int order = base_.order();
    Element<R> residual = image(product);
    std::map<Word, ZetaSeries<R>> rhs;
    for (int k = 0; k <= order; ++k) {
      Element<R> xk = residual.zeta_component(k);
      if (xk.is_zero()) continue;
      const auto weight = common_weight(xk);
      int max_deg = 0;
      std::set<std::vector<int>> cartan_parts;
      for (const auto& [key, s] : xk.terms()) {
        max_deg = std::max(max_deg, degree(keys::leg(key, 0)));
        cartan_parts.insert(cartan_part(keys::leg(key, 0)));
      }
      std::vector<Word> skeletons;
      Word cur;
      enumerate(0, max_deg, std::vector<int>(dim_, 0), weight, cur, skeletons);
      std::set<Word> candidates;
      for (const auto& s : skeletons) {
        const Element<R> s0 = image(s).zeta_component(0);
        std::set<std::vector<int>> own;
        for (const auto& [key, c] : s0.terms()) own.insert(cartan_part(keys::leg(key, 0)));
        for (const auto& nu : cartan_parts)
          for (const auto& c : own) {
            std::vector<int> mu(rank_);
            for (int i = 0; i < rank_; ++i) mu[i] = nu[i] - c[i];
            auto w = with_cartan(s, mu);
            if (w) candidates.insert(*w);
          }
      }
      std::vector<Word> cand(candidates.begin(), candidates.end());
      std::map<std::string, int> rows;
      for (const auto& [key, s] : xk.terms()) rows.emplace(key, int(rows.size()));
      std::vector<Element<R>> col_images;
      for (const auto& w : cand) {
        col_images.push_back(image(w).zeta_component(0));
        for (const auto& [key, s] : col_images.back().terms()) rows.emplace(key, int(rows.size()));
      }
      const int m = int(rows.size());
      std::vector<std::vector<R>> cols;
      for (const auto& e : col_images) {
        std::vector<R> v(m, R(0));
        for (const auto& [key, s] : e.terms()) v[rows.at(key)] = s.coeff(0);
        cols.push_back(std::move(v));
      }
      std::vector<R> target(m, R(0));
      for (const auto& [key, s] : xk.terms()) target[rows.at(key)] = s.coeff(0);
      auto [status, x] = solve_columns(cols, target, m);
      if (status == SolveStatus::inconsistent)
        throw Inexpressible("product " + describe(product) + " is not expressible at zeta^" + std::to_string(k) +
                            " with " + std::to_string(cand.size()) + " candidate words");
      if (status == SolveStatus::underdetermined)
        throw InconsistentIdeal("candidate words for " + describe(product) + " have dependent images");
      for (std::size_t j = 0; j < cand.size(); ++j) {
        if (is_zero(x[j])) continue;
        rhs[cand[j]].add_term(k, x[j]);
        residual -= image(cand[j]).scaled(ZetaSeries<R>(x[j], k), order);
      }
    }
    if (!residual.is_zero()) throw Inexpressible("residual left after solving " + describe(product));
    WordPoly<R> out;
    for (auto& [w, s] : rhs) {
      if (s.is_zero_series()) continue;
      if (s.max_power() > order - 2)
        throw Inexpressible("rewrite of " + describe(product) + " reaches the zeta truncation; raise the order");
      out.emplace_back(w, s);
    }
    return out;
  }

  std::string describe(const Word& w) const { return target_->format_word(w); }

 private:
  struct SkeletonLetter {
    Letter letter;
    std::vector<int> weight;
    int degree;
  };

  int degree(std::string_view w) const {
    int d = 0;
    for (char c : w)
      if (!base_.presentation().is_cartan(static_cast<Letter>(c))) ++d;
    return d;
  }

  std::vector<int> cartan_part(std::string_view w) const {
    std::vector<int> e(rank_, 0);
    for (char c : w) {
      const auto& tag = base_.presentation().cartan(static_cast<Letter>(c));
      if (tag.axis >= 0) e[tag.axis] += tag.sign;
    }
    return e;
  }

  std::vector<int> weight_of(std::string_view w) const {
    std::vector<int> v(dim_, 0);
    for (char c : w) {
      const auto& lw = base_.presentation().weight(static_cast<Letter>(c));
      for (std::size_t i = 0; i < lw.size(); ++i) v[i] += lw[i];
    }
    return v;
  }

  std::vector<int> common_weight(const Element<R>& x) const {
    std::vector<int> w;
    bool first = true;
    for (const auto& [key, s] : x.terms()) {
      auto v = weight_of(keys::leg(key, 0));
      if (first) w = v;
      first = false;
      if (v != w) throw Inexpressible("element is not homogeneous in the weight lattice");
    }
    return w;
  }

  void enumerate(std::size_t i, int deg_left, std::vector<int> acc, const std::vector<int>& goal, Word& cur,
                 std::vector<Word>& out) const {
    if (i == skeleton_letters_.size()) {
      if (acc == goal) out.push_back(cur);
      return;
    }
    const auto& sl = skeleton_letters_[i];
    for (int e = 0; e * sl.degree <= deg_left; ++e) {
      enumerate(i + 1, deg_left - e * sl.degree, acc, goal, cur, out);
      cur.push_back(char(sl.letter));
      for (int j = 0; j < dim_; ++j) acc[j] += sl.weight[j];
    }
    for (int e = 0; e * sl.degree <= deg_left; ++e) cur.pop_back();
  }

  std::optional<Word> with_cartan(const Word& skeleton, const std::vector<int>& mu) const {
    Word w = skeleton;
    for (int axis = 0; axis < rank_; ++axis) {
      if (mu[axis] == 0) continue;
      auto it = cartan_letter_.find({axis, mu[axis] > 0 ? 1 : -1});
      if (it == cartan_letter_.end()) return std::nullopt;
      w.append(std::size_t(std::abs(mu[axis])), char(it->second));
    }
    std::sort(w.begin(), w.end(), [](char x, char y) { return Letter(x) < Letter(y); });
    return w;
  }

  ReducingBase<R>& base_;
  const DeriveRequest<R>& req_;
  int rank_ = 0;
  int dim_ = 0;
  std::shared_ptr<Presentation<R>> target_;
  std::map<std::pair<int, int>, Letter> cartan_letter_;
  std::vector<SkeletonLetter> skeleton_letters_;
  std::unordered_map<Word, Element<R>> images_;
};

}  // namespace detail

/// Derives the complete pairwise rule table of the algebra generated by the
/// requested images: every out-of-order product is computed in the base and
/// solved for in the ordered basis of the new generators, one zeta order at a
/// time. Throws Inexpressible when a product has no preimage and
/// InconsistentIdeal when candidate basis words are dependent.
template <class R>
std::shared_ptr<Presentation<R>> derive_rule_table(ReducingBase<R>& base, const DeriveRequest<R>& req) {
  detail::RuleSolver<R> solver(base, req);
  return solver.run();
}

/// Rules of `table` whose two sides differ under the images in `base`; when
/// `multipliers` is set, each relation is also multiplied on both sides by
/// every non-Cartan base letter before comparing, which exercises the
/// quotient one degree higher.
template <class R>
std::vector<std::string> check_rule_table(ReducingBase<R>& base, const Presentation<R>& table,
                                          const DeriveRequest<R>& req, bool multipliers) {
  detail::RuleSolver<R> solver(base, req);
  std::vector<Element<R>> extra;
  if (multipliers) {
    const auto& bp = base.presentation();
    for (std::size_t i = 0; i < bp.size(); ++i)
      if (!bp.is_cartan(Letter(i))) extra.push_back(base.word(Word(1, char(i))));
  }
  std::vector<std::string> failures;
  const int order = base.order();
  for (const auto& r : table.rules()) {
    const Element<R>& lhs_a = solver.image(Word(1, char(r.left)));
    const Element<R>& lhs_b = solver.image(Word(1, char(r.right)));
    auto rhs_of = [&](const Element<R>* left, const Element<R>* right) {
      Element<R> acc(1);
      for (const auto& [w, s] : r.rhs) {
        Element<R> t = solver.image(w);
        if (left) t = base.mul(*left, t);
        if (right) t = base.mul(t, *right);
        acc += t.scaled(s, order);
      }
      return acc;
    };
    const std::string label = table.generator_name(r.left) + " " + table.generator_name(r.right);
    if (base.mul(lhs_a, lhs_b) != rhs_of(nullptr, nullptr)) failures.push_back(label);
    for (const auto& x : extra) {
      if (base.mul(base.mul(x, lhs_a), lhs_b) != rhs_of(&x, nullptr)) failures.push_back(label + " (left)");
      if (base.mul(lhs_a, base.mul(lhs_b, x)) != rhs_of(nullptr, &x)) failures.push_back(label + " (right)");
    }
  }
  return failures;
}

}  // namespace qtwist
