#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/word.hpp"
#include "qtwist/scalars/zeta_series.hpp"

namespace qtwist {

/// Linear combination of words, used for rule right-hand sides and cached
/// normal forms. Words are normal in the owning presentation.
template <class R>
using WordPoly = std::vector<std::pair<Word, ZetaSeries<R>>>;

/// Ordering rule b a -> rhs for an adjacent letter pair.
template <class R>
struct Rule {
  Letter left = 0;
  Letter right = 0;
  WordPoly<R> rhs;
};

/// Cartan letters carry a lattice axis and a sign: the letter stands for the
/// group-like element exp(sign * axis generator). Other letters have axis -1.
struct CartanTag {
  int axis = -1;
  int sign = 0;
};

/// Generators with a fixed sort order plus ordering rules keyed by adjacent
/// pairs. Every out-of-order pair needs a rule; in-order pairs may have one
/// (inverse pairs, nilpotency).
template <class R>
class Presentation {
 public:
  Presentation(std::string name, int root_degree, std::vector<std::string> generators)
      : name_(std::move(name)), root_degree_(root_degree), names_(std::move(generators)) {
    if (names_.size() >= 250) throw Error("too many generators");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<Letter>(i)).second)
        throw Error("duplicate generator " + names_[i]);
    }
    rules_.resize(names_.size() * names_.size());
    cartan_.resize(names_.size());
    weights_.resize(names_.size());
  }

  const std::string& name() const { return name_; }
  int root_degree() const { return root_degree_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::string& generator_name(Letter l) const { return names_.at(l); }

  bool has_generator(std::string_view name) const { return index_.count(std::string(name)) != 0; }
  Letter letter(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      throw MissingGenerator("generator '" + std::string(name) + "' not in presentation " + name_);
    return it->second;
  }

  void set_rule(Letter b, Letter a, WordPoly<R> rhs) {
    canonical_order(rhs);
    rules_[b * names_.size() + a] = Rule<R>{b, a, std::move(rhs)};
  }
  void set_rule(std::string_view b, std::string_view a, WordPoly<R> rhs) {
    set_rule(letter(b), letter(a), std::move(rhs));
  }
  void clear_rule(Letter b, Letter a) { rules_[b * names_.size() + a].reset(); }

  const Rule<R>* rule(Letter b, Letter a) const {
    const auto& r = rules_[b * names_.size() + a];
    return r ? &*r : nullptr;
  }

  std::vector<Rule<R>> rules() const {
    std::vector<Rule<R>> out;
    for (const auto& r : rules_)
      if (r) out.push_back(*r);
    return out;
  }

  /// Declares a and b mutually inverse: a b -> 1 and b a -> 1.
  void add_inverse_pair(std::string_view a, std::string_view b) {
    Letter x = letter(a), y = letter(b);
    WordPoly<R> one{{Word(), ZetaSeries<R>(R(1))}};
    set_rule(x, y, one);
    set_rule(y, x, one);
    inverses_.emplace_back(x, y);
  }
  const std::vector<std::pair<Letter, Letter>>& inverse_pairs() const { return inverses_; }
  std::optional<Letter> inverse_of(Letter l) const {
    for (auto [a, b] : inverses_) {
      if (a == l) return b;
      if (b == l) return a;
    }
    return std::nullopt;
  }

  void set_cartan(std::string_view name, int axis, int sign) {
    cartan_[letter(name)] = CartanTag{axis, sign};
  }
  const CartanTag& cartan(Letter l) const { return cartan_[l]; }
  bool is_cartan(Letter l) const { return cartan_[l].axis >= 0; }
  int cartan_rank() const {
    int r = 0;
    for (const auto& c : cartan_) r = std::max(r, c.axis + 1);
    return r;
  }

  void set_weight(std::string_view name, std::vector<int> w) { weights_[letter(name)] = std::move(w); }
  const std::vector<int>& weight(Letter l) const { return weights_[l]; }

  /// When set, out-of-order pairs without a rule are left alone instead of
  /// being an error (blocks of free letters).
  void set_free_pairs(bool on) { free_pairs_ = on; }
  bool free_pairs() const { return free_pairs_; }

  /// Out-of-order pairs (b after a in the sort order) lacking a rule.
  std::vector<std::pair<Letter, Letter>> missing_rules() const {
    std::vector<std::pair<Letter, Letter>> out;
    for (std::size_t b = 0; b < names_.size(); ++b)
      for (std::size_t a = 0; a < b; ++a)
        if (!rule(Letter(b), Letter(a))) out.emplace_back(Letter(b), Letter(a));
    return out;
  }

  /// Parses space-separated generator names with optional run exponents
  /// ("f0 f1^2"); "1" is the empty word.
  Word parse_word(std::string_view text) const {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && text[i] == ' ') ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ') ++j;
      std::string tok(text.substr(i, j - i));
      i = j;
      if (tok == "1") continue;
      int exponent = 1;
      auto caret = tok.rfind('^');
      if (caret != std::string::npos) {
        exponent = std::stoi(tok.substr(caret + 1));
        tok = tok.substr(0, caret);
        if (exponent < 0) throw ParseError("negative exponent in word: " + std::string(text));
      }
      Letter l = letter(tok);
      w.append(static_cast<std::size_t>(exponent), static_cast<char>(l));
    }
    return w;
  }

  /// Inverse of parse_word: runs are written as name^k, the empty word as "1".
  std::string format_word(std::string_view w) const {
    if (w.empty()) return "1";
    std::string s;
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!s.empty()) s += ' ';
      s += names_[static_cast<Letter>(w[i])];
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }

  /// Whether no adjacent pair of the word has a rule.
  bool is_normal(std::string_view w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (rule(static_cast<Letter>(w[i]), static_cast<Letter>(w[i + 1]))) return false;
    return true;
  }

  /// Sorts terms by (length, letters); used wherever a canonical listing matters.
  static void canonical_order(WordPoly<R>& p) {
    std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) {
      if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
      return x.first < y.first;
    });
  }

 private:
  std::string name_;
  int root_degree_;
  std::vector<std::string> names_;
  std::map<std::string, Letter> index_;
  std::vector<std::optional<Rule<R>>> rules_;
  std::vector<std::pair<Letter, Letter>> inverses_;
  std::vector<CartanTag> cartan_;
  std::vector<std::vector<int>> weights_;
  bool free_pairs_ = false;
};

}  // namespace qtwist
