#pragma once

#include <gmpxx.h>

#include <vector>

#include "tropmoduli/errors.hpp"
#include "tropmoduli/linalg.hpp"

namespace tropmoduli {

using Int = mpz_class;
using ZMat = std::vector<std::vector<Int>>;

inline int zrank(const ZMat& m) {
  std::vector<std::vector<Rat>> q;
  q.reserve(m.size());
  for (const auto& r : m) {
    std::vector<Rat> row;
    row.reserve(r.size());
    for (const auto& x : r) row.emplace_back(x);
    q.push_back(std::move(row));
  }
  return field_rank(std::move(q));
}

/// Basis (rows) of the lattice {x in Z^n : A x^T = 0} via unimodular
/// column reduction of A; the result is automatically saturated.
inline ZMat int_kernel(const ZMat& a) {
  if (a.empty()) return {};
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  ZMat m = a;
  // transform: identity, tracks the column operations applied to m
  ZMat tr(cols, std::vector<Int>(cols, 0));
  for (int i = 0; i < cols; ++i) tr[i][i] = 1;

  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(tr[r][i], tr[r][j]);
  };
  auto col_axpy = [&](int dst, int src, const Int& f) {
    // col_dst -= f * col_src
    for (int r = 0; r < rows; ++r) m[r][dst] -= f * m[r][src];
    for (int r = 0; r < cols; ++r) tr[r][dst] -= f * tr[r][src];
  };

  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++r) {
    // gcd-reduce row r across columns lead..cols-1
    while (true) {
      int nz = -1;
      for (int c = lead; c < cols; ++c)
        if (m[r][c] != 0 && (nz < 0 || abs(m[r][c]) < abs(m[r][nz]))) nz = c;
      if (nz < 0) break;
      col_swap(lead, nz);
      bool clean = true;
      for (int c = lead + 1; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        Int f = m[r][c] / m[r][lead];
        col_axpy(c, lead, f);
        if (m[r][c] != 0) clean = false;
      }
      if (clean) {
        ++lead;
        break;
      }
    }
  }
  ZMat basis;
  for (int c = lead; c < cols; ++c) {
    std::vector<Int> v(cols);
    for (int r = 0; r < cols; ++r) v[r] = tr[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the saturation (R-span of the rows) ∩ Z^n, rows primitive.
inline ZMat saturation_basis(const ZMat& rows) {
  if (rows.empty()) return {};
  ZMat k = int_kernel(rows);
  if (k.empty()) {
    // full row span: identity basis
    const int n = static_cast<int>(rows[0].size());
    ZMat id(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  return int_kernel(k);
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Int zdet(ZMat m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Index [span_Z(sup_basis) : span_Z(sub_rows)] for full-rank sublattices.
/// Each sub row must lie in the Z-span's R-span; the coordinate matrix must
/// be integral (the sublattice really is contained in the superlattice).
inline Int lattice_index(const ZMat& sub_rows, const ZMat& sup_basis) {
  const int r = static_cast<int>(sup_basis.size());
  if (static_cast<int>(sub_rows.size()) != r)
    throw DimensionMismatch("lattice_index: rank mismatch");
  // solve coords * sup_basis = sub_rows over Q, entry-wise integral
  std::vector<std::vector<Rat>> a;
  const int n = r ? static_cast<int>(sup_basis[0].size()) : 0;
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> row;
    for (int i = 0; i < r; ++i) row.emplace_back(sup_basis[i][j]);
    a.push_back(std::move(row));
  }
  ZMat coords(r, std::vector<Int>(r));
  for (int s = 0; s < r; ++s) {
    std::vector<Rat> b;
    for (int j = 0; j < n; ++j) b.emplace_back(sub_rows[s][j]);
    auto x = field_solve(a, b);
    if (!x) throw DimensionMismatch("lattice_index: vector outside span");
    for (int i = 0; i < r; ++i) {
      Rat v = (*x)[i];
      v.canonicalize();
      if (v.get_den() != 1)
        throw DimensionMismatch("lattice_index: sublattice not contained");
      coords[s][i] = v.get_num();
    }
  }
  Int d = zdet(std::move(coords));
  return abs(d);
}

/// Elementary divisors (Smith normal form diagonal) of an integer matrix.
inline std::vector<Int> snf_diag(ZMat m) {
  std::vector<Int> diag;
  if (m.empty() || m[0].empty()) return diag;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int t = 0;
  while (t < rows && t < cols) {
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr < 0 || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      Int f = m[i][t] / m[t][t];
      for (int j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      Int f = m[t][j] / m[t][t];
      for (int i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

/// Index [span_Z(sup_basis) : span_Z(sub_rows)] where sub_rows may be any
/// generating set (possibly redundant) of a full-rank subgroup.
inline Int lattice_index_rows(const ZMat& sub_rows, const ZMat& sup_basis) {
  const int r = static_cast<int>(sup_basis.size());
  const int n = r ? static_cast<int>(sup_basis[0].size()) : 0;
  std::vector<std::vector<Rat>> a;
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> row;
    for (int i = 0; i < r; ++i) row.emplace_back(sup_basis[i][j]);
    a.push_back(std::move(row));
  }
  ZMat coords;
  for (const auto& s : sub_rows) {
    std::vector<Rat> b;
    for (int j = 0; j < n; ++j) b.emplace_back(s[j]);
    auto x = field_solve(a, b);
    if (!x) throw DimensionMismatch("lattice_index_rows: vector outside span");
    std::vector<Int> c(r);
    for (int i = 0; i < r; ++i) {
      Rat v = (*x)[i];
      v.canonicalize();
      if (v.get_den() != 1)
        throw DimensionMismatch("lattice_index_rows: sublattice not contained");
      c[i] = v.get_num();
    }
    coords.push_back(std::move(c));
  }
  auto d = snf_diag(std::move(coords));
  if (static_cast<int>(d.size()) != r)
    throw DimensionMismatch("lattice_index_rows: generators do not span");
  Int prod = 1;
  for (const auto& x : d) prod *= x;
  return prod;
}

/// Smith-style column reduction tracking V (n x n, unimodular) and W = V^-1:
/// after the call, the first `rank` rows of W are a basis of the saturation
/// of the row space of A, and for any x the coordinates of x in the basis
/// given by the rows of W are x * V. Entries of x*V beyond `rank` therefore
/// give the class of x in Z^n / saturation(rowspace A).
struct ColReduction {
  int rank = 0;
  ZMat V;  // n x n
  ZMat W;  // n x n, inverse of V
};

inline ColReduction column_reduction(const ZMat& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  ColReduction res;
  res.V.assign(cols, std::vector<Int>(cols, 0));
  res.W.assign(cols, std::vector<Int>(cols, 0));
  for (int i = 0; i < cols; ++i) res.V[i][i] = res.W[i][i] = 1;
  ZMat m = a;

  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(res.V[r][i], res.V[r][j]);
    std::swap(res.W[i], res.W[j]);
  };
  auto col_axpy = [&](int dst, int src, const Int& f) {
    for (int r = 0; r < rows; ++r) m[r][dst] -= f * m[r][src];
    for (int r = 0; r < cols; ++r) res.V[r][dst] -= f * res.V[r][src];
    // W <- E^-1 W : row_src += f * row_dst
    for (int c = 0; c < cols; ++c) res.W[src][c] += f * res.W[dst][c];
  };

  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++r) {
    while (true) {
      int nz = -1;
      for (int c = lead; c < cols; ++c)
        if (m[r][c] != 0 && (nz < 0 || abs(m[r][c]) < abs(m[r][nz]))) nz = c;
      if (nz < 0) break;
      col_swap(lead, nz);
      bool clean = true;
      for (int c = lead + 1; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        Int f = m[r][c] / m[r][lead];
        col_axpy(c, lead, f);
        if (m[r][c] != 0) clean = false;
      }
      if (clean) {
        ++lead;
        break;
      }
    }
  }
  res.rank = lead;
  return res;
}

inline Int vec_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

}  // namespace tropmoduli
