#pragma once

#include "qtwist/error.hpp"
#include "qtwist/hopf/coproduct.hpp"
#include "qtwist/hopf/twist.hpp"
#include "qtwist/reps/fundamental.hpp"
#include "qtwist/reps/matrix.hpp"

namespace qtwist {

/// Matrix of one factor, or of its inverse, computed from the factor's
/// arguments without truncation: exponentials of nilpotent matrices and
/// binomial series of unipotent ones terminate, anything else is an error.
inline PolyMatrix factor_matrix(FundamentalRep& rep, const TwistFactor<Rational>& f, bool inverse = false) {
  using K = TwistFactor<Rational>::Kind;
  switch (f.kind) {
    case K::exp: {
      if (f.base != 1) throw ConfigError("q-exponential factor in a classical representation");
      PolyMatrix x = rep.evaluate(f.arg);
      return exp_nilpotent(inverse ? -x : x);
    }
    case K::classical_pow: {
      PolyMatrix v = rep.evaluate(f.exponent);
      return binomial_power(inverse ? -v : v, rep.evaluate(f.arg));
    }
    case K::series: {
      PolyMatrix m = rep.evaluate(f.arg);
      return inverse ? unipotent_inverse(m) : m;
    }
    case K::qpow: throw ConfigError("q-power factor in a classical representation");
  }
  throw Error("unknown factor kind");
}

/// The factor with its arguments pushed through the coproduct on `leg`
/// ((delta (x) id) for leg 0, (id (x) delta) for leg 1). The coproduct is an
/// algebra map, so the image of exp(x) is exp of the image, and likewise for
/// (1 - u)^V.
inline TwistFactor<Rational> factor_coproduct(HopfContext<Rational>& c, const TwistFactor<Rational>& f, int leg) {
  return f.mapped([&](const Element<Rational>& x) { return c.apply_delta(x, leg); });
}

inline PolyMatrix twist_matrix(FundamentalRep& rep, const Twist<Rational>& F) {
  PolyMatrix out;
  bool first = true;
  for (const auto& f : F.factors()) {
    PolyMatrix m = factor_matrix(rep, f);
    out = first ? m : out * m;
    first = false;
  }
  if (first) throw ConfigError("twist " + F.name() + " has no factors");
  return out;
}

inline PolyMatrix twist_inverse_matrix(FundamentalRep& rep, const Twist<Rational>& F) {
  const auto& fs = F.factors();
  if (fs.empty()) throw ConfigError("twist " + F.name() + " has no factors");
  PolyMatrix out = factor_matrix(rep, fs.back(), true);
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) out = out * factor_matrix(rep, *it, true);
  return out;
}

/// R = F_21 F^{-1} on V (x) V.
inline PolyMatrix r_matrix(FundamentalRep& rep, const Twist<Rational>& F) {
  const PolyMatrix p = swap_matrix(rep.n());
  return p * twist_matrix(rep, F) * p * twist_inverse_matrix(rep, F);
}

/// R12 R13 R23 - R23 R13 R12 on V (x) V (x) V.
inline PolyMatrix qybe_residual(const PolyMatrix& r, int n) {
  const PolyMatrix id = PolyMatrix::identity(n);
  const PolyMatrix p23 = kron(id, swap_matrix(n));
  PolyMatrix r12 = kron(r, id);
  PolyMatrix r23 = kron(id, r);
  PolyMatrix r13 = p23 * r12 * p23;
  return r12 * r13 * r23 - r23 * r13 * r12;
}

/// F12 (delta (x) id)(F) - F23 (id (x) delta)(F) on V^(x)3, with the
/// coproduct taken on the factor arguments before evaluation.
inline PolyMatrix matrix_cocycle_residual(FundamentalRep& rep, HopfContext<Rational>& c, const Twist<Rational>& F) {
  const int n = rep.n();
  const PolyMatrix id = PolyMatrix::identity(n);
  const PolyMatrix f = twist_matrix(rep, F);
  PolyMatrix left = kron(f, id), right = kron(id, f);
  for (const auto& fac : F.factors()) {
    left = left * factor_matrix(rep, factor_coproduct(c, fac, 0));
    right = right * factor_matrix(rep, factor_coproduct(c, fac, 1));
  }
  return left - right;
}

}  // namespace qtwist
