#pragma once

#include <optional>
#include <vector>

namespace tropmoduli {

/// Dense exact linear algebra over a field type F (Rat or Cyc).
/// Matrices are row-major vectors of rows.

template <class F>
int field_rank(std::vector<std::vector<F>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (!(m[i][c] == F(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][c] == F(0)) continue;
      F f = m[i][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<int> field_rref(std::vector<std::vector<F>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (!(m[i][c] == F(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    F pv = m[row][c];
    for (int j = 0; j < cols; ++j) m[row][j] = m[row][j] / pv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][c] == F(0)) continue;
      F f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(pivots.size(), std::vector<F>(cols, F(0)));
  return pivots;
}

/// One solution x of A x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> field_solve(std::vector<std::vector<F>> a,
                                          std::vector<F> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = field_rref(a);
  std::vector<F> x(cols, F(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // pivot in the rhs column
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

/// Basis of the right kernel {x : A x = 0}.
template <class F>
std::vector<std::vector<F>> field_kernel(std::vector<std::vector<F>> a) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  auto pivots = field_rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(cols, F(0));
    v[c] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F(0) - a[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tropmoduli
