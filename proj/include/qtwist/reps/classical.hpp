#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qtwist/error.hpp"
#include "qtwist/hopf/coproduct.hpp"
#include "qtwist/ncalg/linear.hpp"

namespace qtwist {

/// x (x) y - y (x) x for one-leg elements.
template <class R>
Element<R> wedge(const TensorAlgebra<R>& T2, const Element<R>& x, const Element<R>& y) {
  const int N = T2.order();
  return T2.normal_form(tensor(x, y, N) - tensor(y, x, N));
}

inline std::string sl_name(int i, int j) {
  if (i > 9 || j > 9) throw ConfigError("sl_n generator names support n <= 9");
  return "E" + std::to_string(i) + std::to_string(j);
}

struct WedgeTerm {
  Rational coeff;
  std::string left, right;
};

/// The boundary r-matrix sum_p D_p ^ E_{p,p+1} + sum_{i<j} sum_{m=1}^{j-i-1}
/// E_{i,j-m+1} ^ E_{j,i+m} as a list of wedge terms. For n = 4 the parameter
/// a rescales two terms: (1/a) D_3 ^ E_34 and a E_13 ^ E_43.
inline std::vector<WedgeTerm> classical_r_terms(int n, const Rational& a = 1) {
  if (n < 2 || n > 9) throw UnknownObject("no boundary r-matrix for n = " + std::to_string(n));
  if (a == 0) throw ConfigError("the family parameter must be nonzero");
  if (a != 1 && n != 4) throw ConfigError("the parameter family is defined for n = 4");
  std::vector<WedgeTerm> out;
  for (int p = 1; p < n; ++p)
    out.push_back({n == 4 && p == 3 ? 1 / a : Rational(1), "D" + std::to_string(p), sl_name(p, p + 1)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int m = 1; m <= j - i - 1; ++m)
        out.push_back({n == 4 && i == 1 && j == 4 && m == 2 ? a : Rational(1), sl_name(i, j - m + 1), sl_name(j, i + m)});
  return out;
}

/// classical_r_terms summed in the Usl_n context.
inline Element<Rational> classical_r(HopfContext<Rational>& c, const Rational& a = 1) {
  const std::string& name = c.name();
  if (name.rfind("Usl", 0) != 0) throw ConfigError("classical_r lives on Usl_n, not " + name);
  const auto& T2 = c.legs(2);
  Element<Rational> r(2);
  for (const auto& t : classical_r_terms(std::stoi(name.substr(3)), a))
    r += wedge(T2, c.gen(t.left), c.gen(t.right)).scaled(t.coeff);
  return r;
}

/// [r12, r13] + [r12, r23] + [r13, r23] in U(g)^(x)3.
inline Element<Rational> cybe_residual(HopfContext<Rational>& c, const Element<Rational>& r) {
  const auto& T3 = c.legs(3);
  Element<Rational> r12 = r.embedded(3, {0, 1});
  Element<Rational> r13 = r.embedded(3, {0, 2});
  Element<Rational> r23 = r.embedded(3, {1, 2});
  return T3.commutator(r12, r13) + T3.commutator(r12, r23) + T3.commutator(r13, r23);
}

/// Generators spanning the maximal parabolic subalgebra that carries r:
/// everything except the n-1 root vectors E_j1, j > 1 (the negative roots
/// through the simple root at the first node).
inline std::vector<std::string> parabolic_basis(int n) {
  std::vector<std::string> out;
  for (int p = 1; p < n; ++p) out.push_back("D" + std::to_string(p));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (j == 1 && i > 1) continue;
      out.push_back(sl_name(i, j));
    }
  return out;
}

/// The subalgebra as described in words: Cartan, all positive root vectors
/// and the negative ones except E_{n,j}, j < n. r_p does not live in it.
inline std::vector<std::string> parabolic_basis_printed(int n) {
  std::vector<std::string> out;
  for (int p = 1; p < n; ++p) out.push_back("D" + std::to_string(p));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (i == n && j < n) continue;
      out.push_back(sl_name(i, j));
    }
  return out;
}

struct FrobeniusReport {
  std::vector<std::string> basis;
  std::vector<std::string> outside;  // generators of r not in the basis
  Rational determinant = 0;
  bool ok() const { return outside.empty() && determinant != 0; }
};

/// Writes r = sum c_ij x_i (x) x_j over the parabolic basis and returns det(c).
/// r is then a nondegenerate element of p ^ p, so p is Frobenius with r^{-1}
/// as its Frobenius form.
inline FrobeniusReport frobenius_check(HopfContext<Rational>& c, const Element<Rational>& r,
                                       std::vector<std::string> basis) {
  FrobeniusReport rep;
  rep.basis = std::move(basis);
  const auto& p = c.presentation();
  const std::size_t d = rep.basis.size();
  std::vector<int> index(p.generator_names().size(), -1);
  for (std::size_t i = 0; i < d; ++i) index[p.letter(rep.basis[i])] = int(i);
  DenseMatrix<Rational> m(d, std::vector<Rational>(d, Rational(0)));
  for (const auto& [k, s] : r.terms()) {
    auto parts = keys::split(k);
    if (parts[0].size() != 1 || parts[1].size() != 1 || s.max_power() > 0)
      throw ConfigError("r must be a zeta-free sum of generator tensors");
    int i = index[static_cast<unsigned char>(parts[0][0])], j = index[static_cast<unsigned char>(parts[1][0])];
    if (i < 0 || j < 0) {
      for (auto w : parts)
        if (index[static_cast<unsigned char>(w[0])] < 0) rep.outside.push_back(p.generator_name(static_cast<Letter>(w[0])));
      continue;
    }
    m[i][j] = s.coeff(0);
  }
  std::sort(rep.outside.begin(), rep.outside.end());
  rep.outside.erase(std::unique(rep.outside.begin(), rep.outside.end()), rep.outside.end());
  // determinant by elimination
  Rational det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) {
      det = 0;
      break;
    }
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r2 = col + 1; r2 < d; ++r2) {
      if (m[r2][col] == 0) continue;
      Rational f = m[r2][col] / m[col][col];
      for (std::size_t j = col; j < d; ++j) m[r2][j] -= f * m[col][j];
    }
  }
  rep.determinant = det;
  return rep;
}

inline FrobeniusReport frobenius_check(HopfContext<Rational>& c, const Element<Rational>& r, int n) {
  return frobenius_check(c, r, parabolic_basis(n));
}

/// zeta^1 coefficient of F_21 F^{-1}, i.e. F1_21 - F1 for F = 1 + zeta F1 + ...
inline Element<Rational> r_matrix_first_order(HopfContext<Rational>& c, const Element<Rational>& F) {
  Element<Rational> f1 = F.zeta_component(1);
  Element<Rational> out = f1.permuted({1, 0}) - f1;
  return c.legs(2).normal_form(out);
}

}  // namespace qtwist
