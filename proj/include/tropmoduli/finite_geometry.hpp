#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tropmoduli/errors.hpp"

namespace tropmoduli {

/// Vector over F_q (q in {2,3}) of dimension up to 6.
struct FqVector {
  int q = 3;
  int dim = 4;
  std::array<uint8_t, 6> c{};

  friend bool operator==(const FqVector& a, const FqVector& b) {
    return a.q == b.q && a.dim == b.dim && a.c == b.c;
  }
  friend bool operator<(const FqVector& a, const FqVector& b) { return a.c < b.c; }
  bool is_zero() const {
    for (int i = 0; i < dim; ++i)
      if (c[i]) return false;
    return true;
  }
  FqVector scaled(int s) const {
    FqVector r = *this;
    for (int i = 0; i < dim; ++i) r.c[i] = static_cast<uint8_t>((c[i] * s) % q);
    return r;
  }
  friend FqVector operator+(const FqVector& a, const FqVector& b) {
    FqVector r = a;
    for (int i = 0; i < a.dim; ++i) r.c[i] = static_cast<uint8_t>((a.c[i] + b.c[i]) % a.q);
    return r;
  }
  /// Line representative: scale so the leftmost nonzero coordinate is 1.
  FqVector line_rep() const {
    for (int i = 0; i < dim; ++i)
      if (c[i]) {
        int inv = (c[i] == 1) ? 1 : q - 1;  // over F_2 and F_3 only
        return scaled(inv);
      }
    return *this;
  }
  unsigned encode() const {
    unsigned v = 0;
    for (int i = 0; i < dim; ++i) v = v * q + c[i];
    return v;
  }
  std::string digits() const {
    std::string s;
    for (int i = 0; i < dim; ++i) s += static_cast<char>('0' + c[i]);
    return s;
  }
};

inline int symplectic_form(const FqVector& x, const FqVector& y) {
  if (x.q != y.q || x.dim != 4 || y.dim != 4)
    throw DimensionMismatch("symplectic form needs two vectors in F_q^4");
  int q = x.q;
  int v = x.c[0] * y.c[2] + x.c[1] * y.c[3] - x.c[2] * y.c[0] - x.c[3] * y.c[1];
  return ((v % q) + q) % q;
}

/// All lines through the origin, sorted lexicographically by representative.
inline std::vector<FqVector> enumerate_lines(int q, int dim) {
  if (q != 2 && q != 3) throw Error("q must be 2 or 3");
  std::vector<FqVector> out;
  unsigned total = 1;
  for (int i = 0; i < dim; ++i) total *= q;
  for (unsigned code = 1; code < total; ++code) {
    FqVector v;
    v.q = q;
    v.dim = dim;
    unsigned x = code;
    for (int i = dim - 1; i >= 0; --i) {
      v.c[i] = static_cast<uint8_t>(x % q);
      x /= q;
    }
    if (v.line_rep() == v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Subspace in reduced row echelon form; equality is structural.
struct FqSubspace {
  int q = 3;
  int dim = 4;
  std::vector<FqVector> basis;  // RREF rows

  static FqSubspace span(int q, int dim, std::vector<FqVector> gens) {
    FqSubspace s;
    s.q = q;
    s.dim = dim;
    // Gaussian elimination over F_q
    std::vector<FqVector> rows = std::move(gens);
    std::vector<FqVector> ech;
    for (int col = 0; col < dim; ++col) {
      int p = -1;
      for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].c[col]) {
          p = static_cast<int>(i);
          break;
        }
      if (p < 0) continue;
      FqVector piv = rows[p];
      int inv = (piv.c[col] == 1) ? 1 : q - 1;
      piv = piv.scaled(inv);
      rows.erase(rows.begin() + p);
      for (auto& r : rows)
        if (r.c[col]) r = r + piv.scaled(q - r.c[col]);
      for (auto& r : ech)
        if (r.c[col]) r = r + piv.scaled(q - r.c[col]);
      ech.push_back(piv);
    }
    s.basis = std::move(ech);
    return s;
  }

  int rank() const { return static_cast<int>(basis.size()); }
  friend bool operator==(const FqSubspace& a, const FqSubspace& b) {
    return a.basis == b.basis;
  }
  friend bool operator<(const FqSubspace& a, const FqSubspace& b) {
    return a.basis < b.basis;
  }

  bool contains(const FqVector& v) const {
    FqVector r = v;
    for (const auto& b : basis) {
      int lead = 0;
      while (lead < dim && !b.c[lead]) ++lead;
      if (lead < dim && r.c[lead]) r = r + b.scaled(q - r.c[lead]);
    }
    return r.is_zero();
  }

  /// All nonzero line representatives inside the subspace.
  std::vector<FqVector> lines() const {
    std::vector<FqVector> out;
    int k = rank();
    unsigned total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    for (unsigned code = 1; code < total; ++code) {
      FqVector v;
      v.q = q;
      v.dim = dim;
      unsigned x = code;
      std::vector<int> coef(k);
      for (int i = k - 1; i >= 0; --i) {
        coef[i] = static_cast<int>(x % q);
        x /= q;
      }
      for (int i = 0; i < k; ++i) v = v + basis[i].scaled(coef[i]);
      if (v.line_rep() == v && !v.is_zero()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  FqSubspace orthogonal_complement() const {
    // solve <x, b> = 0 for all basis vectors b, brute force over F_q^4
    std::vector<FqVector> gens;
    unsigned total = 1;
    for (int i = 0; i < dim; ++i) total *= q;
    for (unsigned code = 1; code < total; ++code) {
      FqVector v;
      v.q = q;
      v.dim = dim;
      unsigned x = code;
      for (int i = dim - 1; i >= 0; --i) {
        v.c[i] = static_cast<uint8_t>(x % q);
        x /= q;
      }
      bool ok = true;
      for (const auto& b : basis)
        if (symplectic_form(v, b) != 0) {
          ok = false;
          break;
        }
      if (ok) gens.push_back(v);
    }
    return span(q, dim, gens);
  }
};

struct PlaneClassification {
  std::vector<FqSubspace> isotropic;
  std::vector<std::pair<FqSubspace, FqSubspace>> plane_pairs;  // {W, W_perp}
};

/// Two-dimensional subspaces of F_q^4 split into isotropic planes (W equal
/// to its perp) and unordered pairs of orthogonal non-isotropic planes.
inline PlaneClassification classify_planes(int q) {
  auto lines = enumerate_lines(q, 4);
  std::vector<FqSubspace> planes;
  std::map<std::vector<FqVector>, bool> seen;
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      FqSubspace s = FqSubspace::span(q, 4, {lines[i], lines[j]});
      if (s.rank() != 2) continue;
      if (seen.emplace(s.basis, true).second) planes.push_back(s);
    }
  PlaneClassification out;
  std::vector<FqSubspace> noniso;
  for (const auto& p : planes) {
    if (p.orthogonal_complement() == p)
      out.isotropic.push_back(p);
    else
      noniso.push_back(p);
  }
  std::sort(out.isotropic.begin(), out.isotropic.end());
  std::sort(noniso.begin(), noniso.end());
  std::vector<bool> used(noniso.size(), false);
  for (size_t i = 0; i < noniso.size(); ++i) {
    if (used[i]) continue;
    FqSubspace perp = noniso[i].orthogonal_complement();
    for (size_t j = i + 1; j < noniso.size(); ++j)
      if (!used[j] && noniso[j] == perp) {
        used[i] = used[j] = true;
        out.plane_pairs.emplace_back(noniso[i], noniso[j]);
        break;
      }
  }
  return out;
}

/// Finite model of the E6 reflection arrangement on V = F_2^6 with the
/// non-split quadratic form q(x) = x1 x2 + x3 x4 + x5^2 + x5 x6 + x6^2.
struct E6FiniteModel {
  std::vector<FqVector> aniso_vectors;             // q(x) != 0
  std::vector<FqSubspace> aniso_planes;            // all nonzero vectors anisotropic
  std::vector<std::array<int, 3>> orth_plane_triples;  // indices into aniso_planes
};

inline int e6_quadratic_form(const FqVector& x) {
  return (x.c[0] * x.c[1] + x.c[2] * x.c[3] + x.c[4] * x.c[4] + x.c[4] * x.c[5] +
          x.c[5] * x.c[5]) %
         2;
}

inline int e6_bilinear_form(const FqVector& x, const FqVector& y) {
  // <x,y> = q(x+y) - q(x) - q(y) over F_2
  return (e6_quadratic_form(x + y) + e6_quadratic_form(x) + e6_quadratic_form(y)) % 2;
}

inline E6FiniteModel e6_finite_model() {
  E6FiniteModel m;
  for (unsigned code = 1; code < 64; ++code) {
    FqVector v;
    v.q = 2;
    v.dim = 6;
    unsigned x = code;
    for (int i = 5; i >= 0; --i) {
      v.c[i] = static_cast<uint8_t>(x % 2);
      x /= 2;
    }
    if (e6_quadratic_form(v)) m.aniso_vectors.push_back(v);
  }
  // planes with all three nonzero vectors anisotropic
  std::map<std::vector<FqVector>, bool> seen;
  const auto& av = m.aniso_vectors;
  for (size_t i = 0; i < av.size(); ++i)
    for (size_t j = i + 1; j < av.size(); ++j) {
      FqVector s = av[i] + av[j];
      if (s.is_zero() || !e6_quadratic_form(s)) continue;
      FqSubspace p = FqSubspace::span(2, 6, {av[i], av[j]});
      if (p.rank() == 2 && seen.emplace(p.basis, true).second)
        m.aniso_planes.push_back(p);
    }
  std::sort(m.aniso_planes.begin(), m.aniso_planes.end());
  // triples of pairwise orthogonal planes
  const auto& pl = m.aniso_planes;
  auto orth = [&](const FqSubspace& a, const FqSubspace& b) {
    for (const auto& x : a.basis)
      for (const auto& y : b.basis)
        if (e6_bilinear_form(x, y)) return false;
    return true;
  };
  std::vector<std::vector<int>> adj(pl.size());
  for (size_t i = 0; i < pl.size(); ++i)
    for (size_t j = i + 1; j < pl.size(); ++j)
      if (orth(pl[i], pl[j])) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
  for (size_t i = 0; i < pl.size(); ++i)
    for (int j : adj[i]) {
      if (j <= static_cast<int>(i)) continue;
      for (int k : adj[j]) {
        if (k <= j) continue;
        if (orth(pl[i], pl[k]))
          m.orth_plane_triples.push_back({static_cast<int>(i), j, k});
      }
    }
  return m;
}

}  // namespace tropmoduli
