#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qtwist/scalars/scalar.hpp"

namespace qtwist {

/// Dense matrix over an exact field, row-major.
template <class R>
using DenseMatrix = std::vector<std::vector<R>>;

/// In-place reduced row echelon form. Columns are scanned left to right, so
/// earlier columns become pivots first. Returns the pivot column of each
/// nonzero row, in order; zero rows are removed.
template <class R>
std::vector<int> rref(DenseMatrix<R>& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    R inv = inverse(m[row][c]);
    for (int j = c; j < cols; ++j)
      if (!is_zero(m[row][j])) m[row][j] = m[row][j] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][c])) continue;
      R f = m[r][c];
      for (int j = c; j < cols; ++j)
        if (!is_zero(m[row][j])) m[r][j] = m[r][j] - f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

enum class SolveStatus { unique, inconsistent, underdetermined };

/// Solves A x = b with A given column-wise (cols[j] is column j, all of
/// length `rows`).
template <class R>
std::pair<SolveStatus, std::vector<R>> solve_columns(const std::vector<std::vector<R>>& cols,
                                                     const std::vector<R>& b, int rows) {
  const int n = int(cols.size());
  DenseMatrix<R> m(rows, std::vector<R>(n + 1, R(0)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  for (int i = 0; i < rows; ++i) m[i][n] = b[i];
  auto piv = rref(m, n + 1);
  std::vector<R> x(n, R(0));
  for (int p : piv)
    if (p == n) return {SolveStatus::inconsistent, x};
  if (int(piv.size()) < n) return {SolveStatus::underdetermined, x};
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][n];
  return {SolveStatus::unique, x};
}

}  // namespace qtwist
