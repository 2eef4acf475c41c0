#pragma once

#include "qtwist/error.hpp"
#include "qtwist/hopf/coproduct.hpp"
#include "qtwist/hopf/twist.hpp"

namespace qtwist {

/// F12 (delta (x) id)(F) and F23 (id (x) delta)(F) as three-leg elements.
template <class R>
struct CocycleSides {
  Element<R> left;
  Element<R> right;
};

template <class R>
CocycleSides<R> cocycle_sides(HopfContext<R>& c, const Element<R>& F) {
  if (F.legs() != 2) throw LegMismatch("a twist has two legs");
  const auto& T3 = c.legs(3);
  const int N = c.order();
  Element<R> one = Element<R>::unit(1);
  Element<R> f12 = tensor(F, one, N);
  Element<R> f23 = tensor(one, F, N);
  return {T3.mul(f12, c.apply_delta(F, 0)), T3.mul(f23, c.apply_delta(F, 1))};
}

/// F12 (delta (x) id)F - F23 (id (x) delta)F; zero exactly when F is a
/// cocycle up to the truncation order.
template <class R>
Element<R> cocycle_residual(HopfContext<R>& c, const Element<R>& F) {
  auto s = cocycle_sides(c, F);
  return s.left - s.right;
}

template <class R>
Element<R> cocycle_residual(HopfContext<R>& c, const Twist<R>& F) {
  return cocycle_residual(c, F.expand(c.legs(2)));
}

/// F23 (id (x) delta)F . (F12 (delta (x) id)F)^{-1}.
template <class R>
Element<R> associator(HopfContext<R>& c, const Element<R>& F) {
  auto s = cocycle_sides(c, F);
  const auto& T3 = c.legs(3);
  return T3.mul(s.right, T3.inverse(s.left));
}

/// F delta(x) F^{-1}.
template <class R>
Element<R> twisted_coproduct(HopfContext<R>& c, const Element<R>& F, const Element<R>& x) {
  const auto& T2 = c.legs(2);
  return T2.mul(T2.mul(F, c.delta(x)), T2.inverse(F));
}

/// Installs x -> F delta(x) F^{-1} for every generator.
template <class R>
CoproductTable<R> twisted_table(HopfContext<R>& c, const Element<R>& F, CoproductKind kind) {
  CoproductTable<R> out(c.presentation_ptr(), kind);
  const auto& T2 = c.legs(2);
  Element<R> Finv = T2.inverse(F);
  for (const auto& g : c.presentation().generator_names())
    out.set(c.presentation().letter(g), T2.mul(T2.mul(F, c.delta(c.gen(g))), Finv));
  return out;
}

template <class R>
Twist<R> twist_compose(const Twist<R>& outer, const Twist<R>& inner) {
  return compose(outer, inner);
}

}  // namespace qtwist
