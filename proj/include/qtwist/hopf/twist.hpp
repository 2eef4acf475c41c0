#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/hopf/coproduct.hpp"
#include "qtwist/qcalc/qexp.hpp"

namespace qtwist {

/// One factor of a twist. Exponential factors keep their argument, power
/// factors their base u and exponent, so that coproducts and matrix
/// evaluation can work factor by factor.
template <class R>
struct TwistFactor {
  enum class Kind {
    exp,            // exp_Q(arg), Q = 1 for the ordinary exponential
    qpow,           // (1 - arg)^{(v)}_Q with exponent = Q^{-v}
    classical_pow,  // (1 - arg)^{exponent}
    series          // arg itself
  };
  Kind kind = Kind::series;
  Element<R> arg;
  Element<R> exponent;
  R base = R(1);
  std::string label;

  int legs() const { return arg.legs(); }

  /// Applies f to every element the factor holds.
  TwistFactor mapped(const std::function<Element<R>(const Element<R>&)>& f) const {
    TwistFactor r = *this;
    r.arg = f(arg);
    if (kind == Kind::qpow || kind == Kind::classical_pow) r.exponent = f(exponent);
    return r;
  }
};

/// Expands a single factor in the tensor algebra T.
template <class R>
Element<R> expand_factor(const TensorAlgebra<R>& T, const TwistFactor<R>& f) {
  using K = typename TwistFactor<R>::Kind;
  switch (f.kind) {
    case K::exp: return qexp(T, T.normal_form(f.arg), f.base);
    case K::qpow: return qpow(T, T.normal_form(f.arg), T.normal_form(f.exponent), f.base);
    case K::classical_pow: return classical_pow(T, T.normal_form(f.arg), T.normal_form(f.exponent));
    case K::series: return T.normal_form(f.arg);
  }
  throw Error("unknown factor kind");
}

/// Ordered product of factors; the expansion is cached per truncation order.
template <class R>
class Twist {
 public:
  Twist() = default;
  Twist(std::string name, int legs) : name_(std::move(name)), legs_(legs) {}

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int legs() const { return legs_; }
  const std::vector<TwistFactor<R>>& factors() const { return factors_; }

  void push(TwistFactor<R> f) {
    if (f.legs() != legs_) throw LegMismatch("factor leg count differs from twist");
    factors_.push_back(std::move(f));
    cache_order_ = -1;
  }
  void append(const Twist& other) {
    for (const auto& f : other.factors_) push(f);
  }

  /// outer . inner: factor lists concatenated.
  friend Twist compose(const Twist& outer, const Twist& inner) {
    Twist r(outer.name_ + "*" + inner.name_, outer.legs_);
    r.append(outer);
    r.append(inner);
    return r;
  }

  Twist mapped(const std::function<Element<R>(const Element<R>&)>& f, std::string name) const {
    Twist r(std::move(name), legs_);
    for (const auto& x : factors_) r.push(x.mapped(f));
    return r;
  }

  /// The product of all factors in T (unit for an empty twist).
  const Element<R>& expand(const TensorAlgebra<R>& T) const {
    if (T.legs() != legs_) throw LegMismatch("expansion algebra has the wrong number of legs");
    if (cache_order_ == T.order()) return cache_;
    Element<R> acc = T.unit();
    for (const auto& f : factors_) acc = T.mul(acc, expand_factor(T, f));
    cache_ = std::move(acc);
    cache_order_ = T.order();
    return cache_;
  }

 private:
  std::string name_;
  int legs_ = 2;
  std::vector<TwistFactor<R>> factors_;
  mutable Element<R> cache_;
  mutable int cache_order_ = -1;
};

}  // namespace qtwist
