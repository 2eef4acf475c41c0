#pragma once

#include <string>

#include "qtwist/error.hpp"
#include "qtwist/ncalg/algebra.hpp"
#include "qtwist/scalars/qnumbers.hpp"

namespace qtwist {

enum class ExpVariant { regular, singular };

namespace detail {

template <class R>
void require_positive_order(const Element<R>& x, const char* what) {
  if (!x.is_zero() && x.min_zeta_power() < 1)
    throw ZeroOrderArgument(std::string(what) + " needs an argument of positive zeta order");
}

}  // namespace detail

/// exp_Q(x) = sum x^k / (k)_Q!, truncated at the algebra's zeta order. With
/// the singular variant the argument is first divided by (1 - Q). Q = 1
/// gives the ordinary exponential.
template <class R>
Element<R> qexp(const TensorAlgebra<R>& T, const Element<R>& x, const R& Q, ExpVariant variant = ExpVariant::regular) {
  detail::require_positive_order(x, "q-exponential");
  Element<R> arg = x;
  if (variant == ExpVariant::singular) arg = x.scaled(inverse(R(1) - Q));
  Element<R> sum = T.unit(), power = T.unit();
  R fact(1);
  for (int k = 1; k <= T.order(); ++k) {
    power = T.mul(power, arg);
    if (power.is_zero()) break;
    fact *= q_number<R>(k, Q);
    sum += power.scaled(inverse(fact));
  }
  return sum;
}

/// The singular q-exponential e_Q(x) = exp_Q(x / (1 - Q)).
template <class R>
Element<R> qexp_singular(const TensorAlgebra<R>& T, const Element<R>& x, const R& Q) {
  return qexp(T, x, Q, ExpVariant::singular);
}

/// Throws HypothesisViolation unless x y - Q y x normalizes to zero.
template <class R>
void require_q_commute(const TensorAlgebra<R>& T, const Element<R>& x, const Element<R>& y, const R& Q,
                       const std::string& what) {
  Element<R> c = T.mul(x, y) - T.mul(y, x).scaled(Q);
  if (!c.is_zero()) throw HypothesisViolation(what + ": q-commutator does not vanish");
}

/// Additivity of the singular q-exponential: when x y = q^2 y x,
/// e(x + y) = e(y) e(x). Both sides are expanded; the common value is
/// returned and a mismatch is an error.
template <class R>
Element<R> qexp_merge(const TensorAlgebra<R>& T, const Element<R>& x, const Element<R>& y, const R& q2) {
  require_q_commute(T, x, y, q2, "qexp_merge");
  Element<R> lhs = qexp_singular(T, x + y, q2);
  Element<R> rhs = T.mul(qexp_singular(T, y, q2), qexp_singular(T, x, q2));
  if (lhs != rhs) throw Error("qexp_merge: expansions of e(x+y) and e(y)e(x) differ");
  return lhs;
}

template <class R>
struct FiveTermResult {
  Element<R> lhs, rhs, residual;
};

/// e(u) e(v) against e(v) e([u,v] / (1 - Q)) e(u) for singular q-exponentials
/// with base Q, under [u,[u,v]]_Q = [v,[u,v]]_{1/Q} = 0.
template <class R>
FiveTermResult<R> five_term_flip(const TensorAlgebra<R>& T, const Element<R>& u, const Element<R>& v, const R& Q) {
  const Element<R> c = T.commutator(u, v);
  require_q_commute(T, u, c, Q, "five_term_flip [u,[u,v]]");
  require_q_commute(T, v, c, inverse(Q), "five_term_flip [v,[u,v]]");
  FiveTermResult<R> r;
  r.lhs = T.mul(qexp_singular(T, u, Q), qexp_singular(T, v, Q));
  r.rhs = T.mul({qexp_singular(T, v, Q), qexp_singular(T, c.scaled(inverse(R(1) - Q)), Q), qexp_singular(T, u, Q)});
  r.residual = r.lhs - r.rhs;
  return r;
}

/// q-power (1 - u)^{(v)}_Q = sum_k c_k(G) u^k with G = Q^{-v} and
/// c_k(G) = prod_{l<k} (G Q^l - 1)/(Q - 1) / (k)_Q!, the coefficient standing
/// to the left of u^k. G must be invertible (a group-like word or a nonzero
/// scalar multiple of one).
template <class R>
Element<R> qpow(const TensorAlgebra<R>& T, const Element<R>& u, const Element<R>& G, const R& Q) {
  detail::require_positive_order(u, "q-power");
  if (G.zeta_component(0).is_zero()) throw NotInvertible("q-power exponent is not invertible");
  if (Q == R(1)) throw ConfigError("q-power needs a base different from 1; use classical_pow");
  Element<R> sum = T.unit(), coeff = T.unit(), power = T.unit();
  const R inv_q1 = inverse(Q - R(1));
  R Ql(1);
  for (int k = 1; k <= T.order(); ++k) {
    power = T.mul(power, u);
    if (power.is_zero()) break;
    // coeff_k = coeff_{k-1} (G Q^{k-1} - 1) / ((Q - 1) (k)_Q)
    Element<R> step = (G.scaled(Ql) - T.unit()).scaled(inv_q1 * inverse(q_number<R>(k, Q)));
    coeff = T.mul(coeff, step);
    Ql *= Q;
    sum += T.mul(coeff, power);
  }
  return sum;
}

/// Classical power (1 - u)^V = sum_k c_k u^k, c_k = prod_{l<k} (l - V) / k!,
/// coefficients on the left.
template <class R>
Element<R> classical_pow(const TensorAlgebra<R>& T, const Element<R>& u, const Element<R>& V) {
  detail::require_positive_order(u, "power");
  Element<R> sum = T.unit(), coeff = T.unit(), power = T.unit();
  for (int k = 1; k <= T.order(); ++k) {
    power = T.mul(power, u);
    if (power.is_zero()) break;
    Element<R> step = (T.scalar(R(k - 1)) - V).scaled(inverse(R(k)));
    coeff = T.mul(coeff, step);
    sum += T.mul(coeff, power);
  }
  return sum;
}

}  // namespace qtwist
