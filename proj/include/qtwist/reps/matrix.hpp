#pragma once

#include <string>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/scalars/zeta_series.hpp"

namespace qtwist {

/// Polynomial in zeta with rational coefficients (a ZetaSeries never truncated).
using ZetaPoly = ZetaSeries<Rational>;

inline ZetaPoly exact_mul(const ZetaPoly& a, const ZetaPoly& b) {
  if (a.is_zero_series() || b.is_zero_series()) return {};
  return a.mul(b, a.max_power() + b.max_power());
}

/// Square matrix with entries in Q[zeta], row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int dim) : dim_(dim), a_(std::size_t(dim) * dim) {}

  static PolyMatrix identity(int dim) {
    PolyMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = ZetaPoly(Rational(1));
    return m;
  }

  int dim() const { return dim_; }
  ZetaPoly& at(int i, int j) { return a_[std::size_t(i) * dim_ + j]; }
  const ZetaPoly& at(int i, int j) const { return a_[std::size_t(i) * dim_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero_series()) return false;
    return true;
  }
  std::size_t nonzero_entries() const {
    std::size_t n = 0;
    for (const auto& x : a_) n += !x.is_zero_series();
    return n;
  }
  /// Highest zeta power among the entries (-1 for the zero matrix).
  int degree() const {
    int d = -1;
    for (const auto& x : a_) d = std::max(d, x.max_power());
    return d;
  }

  PolyMatrix& operator+=(const PolyMatrix& b) {
    check(b);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
    return *this;
  }
  PolyMatrix& operator-=(const PolyMatrix& b) {
    check(b);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
    return *this;
  }
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  PolyMatrix operator-() const {
    PolyMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  PolyMatrix scaled(const Rational& s) const {
    PolyMatrix r = *this;
    for (auto& x : r.a_) x = x.scaled(s);
    return r;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    a.check(b);
    const int n = a.dim_;
    PolyMatrix c(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const ZetaPoly& x = a.at(i, k);
        if (x.is_zero_series()) continue;
        for (int j = 0; j < n; ++j) {
          const ZetaPoly& y = b.at(k, j);
          if (!y.is_zero_series()) c.at(i, j) += exact_mul(x, y);
        }
      }
    return c;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.dim_ == b.dim_ && a.a_ == b.a_; }

  /// Kronecker product a (x) b.
  friend PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    const int n = a.dim_, m = b.dim_;
    PolyMatrix c(n * m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (a.at(i, j).is_zero_series()) continue;
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l)
            if (!b.at(k, l).is_zero_series()) c.at(i * m + k, j * m + l) = exact_mul(a.at(i, j), b.at(k, l));
      }
    return c;
  }

  /// Entry at zeta^k as a rational matrix.
  std::vector<std::vector<Rational>> coefficient(int k) const {
    std::vector<std::vector<Rational>> out(dim_, std::vector<Rational>(dim_, Rational(0)));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out[i][j] = at(i, j).coeff(k);
    return out;
  }

 private:
  void check(const PolyMatrix& b) const {
    if (dim_ != b.dim_) throw LegMismatch("matrix dimensions differ");
  }

  int dim_ = 0;
  std::vector<ZetaPoly> a_;
};

/// Whether X^k = 0 for some k <= dim.
inline bool is_nilpotent(const PolyMatrix& x) {
  PolyMatrix p = x;
  for (int k = 0; k < x.dim(); ++k) {
    if (p.is_zero()) return true;
    p = p * x;
  }
  return p.is_zero();
}

/// exp(X) for nilpotent X, as a finite sum.
inline PolyMatrix exp_nilpotent(const PolyMatrix& x) {
  PolyMatrix out = PolyMatrix::identity(x.dim()), p = out;
  for (int k = 1; k <= x.dim(); ++k) {
    p = (p * x).scaled(Rational(1, k));
    if (p.is_zero()) return out;
    out += p;
  }
  if (!p.is_zero()) throw NonTerminating("exponent argument is not nilpotent in this representation");
  return out;
}

/// (1 - U)^V = sum_k binom(V, k) (-U)^k for nilpotent U commuting with V.
inline PolyMatrix binomial_power(const PolyMatrix& v, const PolyMatrix& u) {
  const int n = u.dim();
  if (!(v * u == u * v)) throw ConfigError("power base and exponent do not commute in this representation");
  PolyMatrix out = PolyMatrix::identity(n);
  PolyMatrix binom = out;  // binom(V, k)
  PolyMatrix mu = out;     // (-U)^k
  const PolyMatrix id = PolyMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    mu = mu * (-u);
    if (mu.is_zero()) return out;
    binom = (binom * (v - id.scaled(Rational(k - 1)))).scaled(Rational(1, k));
    out += binom * mu;
  }
  if (!mu.is_zero()) throw NonTerminating("power base is not unipotent in this representation");
  return out;
}

/// Inverse of 1 + N for nilpotent N.
inline PolyMatrix unipotent_inverse(const PolyMatrix& m) {
  const int n = m.dim();
  PolyMatrix nil = m - PolyMatrix::identity(n);
  PolyMatrix out = PolyMatrix::identity(n), p = out;
  for (int k = 1; k <= n; ++k) {
    p = p * (-nil);
    if (p.is_zero()) return out;
    out += p;
  }
  if (!p.is_zero()) throw NonTerminating("matrix is not unipotent");
  return out;
}

/// Permutation matrix of the leg swap on V (x) V, dim V = n.
inline PolyMatrix swap_matrix(int n) {
  PolyMatrix p(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.at(i * n + j, j * n + i) = ZetaPoly(Rational(1));
  return p;
}

}  // namespace qtwist
