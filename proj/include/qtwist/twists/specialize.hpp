#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/element.hpp"
#include "qtwist/ncalg/presentation.hpp"

namespace qtwist {

/// How the q = 1 specialization matches a quantum A-form algebra with its
/// classical limit. A character assigns an integer x_i to every Cartan axis;
/// a quantum Cartan letter with tag (axis, sign) acts by t^(sign * x_axis),
/// and a classical Cartan letter acts by the linear form `cartan_values`.
struct SpecializationDictionary {
  int rank = 1;
  std::map<std::string, std::vector<Rational>> cartan_values;
  std::map<std::string, std::string> rename;  // quantum letter -> classical letter
};

struct SpecializationReport {
  int degree_bound = 0;
  int characters = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

namespace detail {

/// Value of an element on a character (one vector per leg): Cartan letters
/// are removed from the words and replaced by their values.
template <class R, class IsCartan, class Value>
std::map<std::pair<std::string, int>, R> on_character(const Element<R>& x, const Presentation<R>& p,
                                                      const std::map<std::string, std::string>& rename,
                                                      const Presentation<Rational>& target, IsCartan is_cartan,
                                                      Value value) {
  std::map<std::pair<std::string, int>, R> out;
  for (const auto& [k, s] : x.terms()) {
    auto parts = keys::split(k);
    std::vector<std::string> words(parts.size());
    R factor(1);
    for (std::size_t leg = 0; leg < parts.size(); ++leg) {
      for (char c : parts[leg]) {
        Letter l = static_cast<Letter>(c);
        if (is_cartan(l)) {
          factor *= value(int(leg), l);
          continue;
        }
        const std::string& g = p.generator_name(l);
        auto it = rename.find(g);
        words[leg].push_back(static_cast<char>(target.letter(it == rename.end() ? g : it->second)));
      }
    }
    std::vector<std::string_view> views(words.begin(), words.end());
    const std::string key = keys::make(views);
    for (const auto& [pw, c] : s.terms()) {
      R& slot = out[{key, pw}];
      slot += c * factor;
    }
  }
  return out;
}

}  // namespace detail

/// Compares the q = 1 specialization of a quantum two-leg element written in
/// A-form generators with a classical element. Both sides are evaluated on a
/// grid of Cartan characters. For a fixed non-Cartan word both sides are
/// polynomials in the character of degree at most the larger of the pole
/// order at q = 1 and the classical Cartan degree, so a grid with that many
/// plus one points per axis decides equality.
inline SpecializationReport compare_specialization(const Element<QCoeff>& quantum, const Presentation<QCoeff>& qp,
                                                   const Element<Rational>& classical,
                                                   const Presentation<Rational>& cp,
                                                   const SpecializationDictionary& dict) {
  if (quantum.legs() != classical.legs()) throw LegMismatch("specialization compares elements with equal legs");
  const int legs = quantum.legs();
  SpecializationReport rep;
  int degree = 0;
  for (const auto& [k, s] : quantum.terms())
    for (const auto& [pw, c] : s.terms()) degree = std::max(degree, c.pole_order_at_one());
  for (const auto& [k, s] : classical.terms()) {
    int n = 0;
    for (auto w : keys::split(k))
      for (char c : w) n += int(dict.cartan_values.count(cp.generator_name(static_cast<Letter>(c))));
    degree = std::max(degree, n);
  }
  rep.degree_bound = degree;

  const int axes = dict.rank * legs;
  std::vector<int> chi(axes, 0);
  const int root = qp.root_degree();
  while (true) {
    auto qval = [&](int leg, Letter l) {
      const auto& tag = qp.cartan(l);
      return QCoeff::t_power(tag.sign * chi[leg * dict.rank + tag.axis], root);
    };
    auto cval = [&](int leg, Letter l) {
      const std::string& g = cp.generator_name(l);
      auto it = dict.cartan_values.find(g);
      if (it == dict.cartan_values.end()) throw ConfigError("no character value for " + g);
      Rational v = 0;
      for (int a = 0; a < dict.rank; ++a) v += it->second.at(a) * chi[leg * dict.rank + a];
      return v;
    };
    auto qs = detail::on_character<QCoeff>(quantum, qp, dict.rename, cp, [&](Letter l) { return qp.is_cartan(l); }, qval);
    auto cs = detail::on_character<Rational>(
        classical, cp, {}, cp, [&](Letter l) { return dict.cartan_values.count(cp.generator_name(l)) > 0; }, cval);
    std::map<std::pair<std::string, int>, Rational> diff;
    for (const auto& [key, c] : qs) {
      Rational v;
      try {
        v = c.specialize_q1();
      } catch (const PoleAtOne&) {
        throw PoleAtOne("coefficient of zeta^" + std::to_string(key.second) + " is not regular at q=1");
      }
      if (v != 0) diff[key] += v;
    }
    for (const auto& [key, c] : cs) diff[key] -= c;
    ++rep.characters;
    for (const auto& [key, v] : diff)
      if (v != 0) {
        std::string where = "zeta^" + std::to_string(key.second) + " at character (";
        for (int i = 0; i < axes; ++i) where += (i ? "," : "") + std::to_string(chi[i]);
        rep.mismatches.push_back(where + ")");
        break;
      }
    int i = 0;
    while (i < axes && chi[i] == degree) chi[i++] = 0;
    if (i == axes) break;
    ++chi[i];
  }
  return rep;
}

}  // namespace qtwist
