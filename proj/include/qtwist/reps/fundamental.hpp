#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/element.hpp"
#include "qtwist/ncalg/presentation.hpp"
#include "qtwist/reps/matrix.hpp"
#include "qtwist/twists/presentations.hpp"

namespace qtwist {

/// The defining n-dimensional representation of U(sl_n), E_ij -> e_ij and
/// D_p -> diag((n-p)/n, ..., -p/n, ...), applied leg-wise to elements of the
/// Usl_n presentation.
class FundamentalRep {
 public:
  using Sparse = std::vector<std::tuple<int, int, Rational>>;

  explicit FundamentalRep(std::shared_ptr<const Presentation<Rational>> usl) : pres_(std::move(usl)) {
    const std::string& name = pres_->name();
    if (name.rfind("Usl", 0) != 0) throw ConfigError("fundamental representation needs a Usl_n presentation, got " + name);
    n_ = std::stoi(name.substr(3));
    for (const auto& g : pres_->generator_names()) {
      auto m = sl_matrix(n_, g);
      Sparse s;
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (m[i][j] != 0) s.emplace_back(i, j, m[i][j]);
      letters_.push_back(std::move(s));
    }
  }

  int n() const { return n_; }
  const Presentation<Rational>& presentation() const { return *pres_; }

  /// Matrix of a word, as nonzero entries.
  const Sparse& word(const std::string& w) {
    auto it = words_.find(w);
    if (it != words_.end()) return it->second;
    Sparse out;
    if (w.empty()) {
      for (int i = 0; i < n_; ++i) out.emplace_back(i, i, Rational(1));
    } else {
      const Sparse& head = word(w.substr(0, w.size() - 1));
      const Sparse& last = letters_.at(static_cast<unsigned char>(w.back()));
      std::vector<Rational> dense(std::size_t(n_) * n_, Rational(0));
      for (const auto& [i, k, a] : head)
        for (const auto& [k2, j, b] : last)
          if (k == k2) dense[std::size_t(i) * n_ + j] += a * b;
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (dense[std::size_t(i) * n_ + j] != 0) out.emplace_back(i, j, dense[std::size_t(i) * n_ + j]);
    }
    return words_.emplace(w, std::move(out)).first->second;
  }

  /// Image of a k-leg element on V^(x)k.
  PolyMatrix evaluate(const Element<Rational>& x) {
    const int legs = x.legs();
    int dim = 1;
    for (int i = 0; i < legs; ++i) dim *= n_;
    PolyMatrix out(dim);
    for (const auto& [k, s] : x.terms()) {
      auto parts = keys::split(k);
      std::vector<const Sparse*> mats;
      for (auto p : parts) mats.push_back(&word(std::string(p)));
      // iterate over the product of nonzero entries
      std::vector<std::size_t> idx(legs, 0);
      bool empty = false;
      for (auto* m : mats) empty = empty || m->empty();
      if (empty) continue;
      while (true) {
        int row = 0, col = 0;
        Rational c(1);
        for (int l = 0; l < legs; ++l) {
          const auto& [i, j, v] = (*mats[l])[idx[l]];
          row = row * n_ + i;
          col = col * n_ + j;
          c *= v;
        }
        out.at(row, col) += s.scaled(c);
        int l = legs - 1;
        while (l >= 0 && ++idx[l] == mats[l]->size()) idx[l--] = 0;
        if (l < 0) break;
      }
    }
    return out;
  }

 private:
  std::shared_ptr<const Presentation<Rational>> pres_;
  int n_ = 0;
  std::vector<Sparse> letters_;
  std::unordered_map<std::string, Sparse> words_;
};

}  // namespace qtwist
