#pragma once

#include "qtwist/error.hpp"
#include "qtwist/scalars/scalar.hpp"

namespace qtwist {

/// (k)_Q = 1 + Q + ... + Q^{k-1} = (Q^k - 1)/(Q - 1); equals k at Q = 1.
template <class R>
R q_number(long k, const R& Q) {
  if (k < 0) throw Error("q_number of a negative integer");
  R s(0), p(1);
  for (long i = 0; i < k; ++i) {
    s += p;
    p *= Q;
  }
  return s;
}

/// (k)_Q! = (1)_Q (2)_Q ... (k)_Q.
template <class R>
R q_factorial(long k, const R& Q) {
  R f(1);
  for (long j = 1; j <= k; ++j) f *= q_number(j, Q);
  return f;
}

/// (k)_{q^2}! for q = t^d.
inline QCoeff qint_factorial(long k, int root_degree) {
  const QCoeff q = QCoeff::q(root_degree);
  return q_factorial(k, q * q);
}

}  // namespace qtwist
