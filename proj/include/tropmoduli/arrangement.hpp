#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <string>
#include <vector>

#include "tropmoduli/cyclotomic.hpp"
#include "tropmoduli/errors.hpp"
#include "tropmoduli/incidence.hpp"
#include "tropmoduli/laurent.hpp"
#include "tropmoduli/linalg.hpp"
#include "tropmoduli/matroid.hpp"

namespace tropmoduli {

/// A catalog hyperplane arrangement: labeled exact coefficient vectors.
struct Arrangement {
  std::string name;
  int ambient = 0;  // number of coordinates of the ambient vector space
  int rank = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Cyc>> forms;

  int size() const { return static_cast<int>(forms.size()); }
};

namespace detail {

// The forty linear forms of the G32 reflection arrangement in the
// coordinates (c0, c1, c2, c3), listed in the lexicographic order of the
// line labels u_{ijkl}. Here w is a primitive third root of unity and the
// square root of -3 is realized as 2w + 1.
inline std::vector<std::vector<Cyc>> g32_forms() {
  const Cyc W = Cyc::omega();
  const Cyc W2 = Cyc::omega() * Cyc::omega();
  const Cyc S = Cyc::sqrt_minus3();
  const Cyc o = Cyc(1), z = Cyc(0);
  return {
      {z, o, o, o},        // u0001 = c1+c2+c3
      {o, z, o, -o},       // u0010 = c2-c3+c0
      {o, -o, z, o},       // u0011 = c3+c0-c1
      {o, o, -o, z},       // u0012 = c0+c1-c2
      {z, S, z, z},        // u0100 = sqrt(-3) c1
      {z, o, W2, W2},      // u0101 = c1+w2 c2+w2 c3
      {z, o, W, W},        // u0102 = c1+w c2+w c3
      {W2, z, o, -W},      // u0110 = c2-w c3+w2 c0
      {o, -W, z, o},       // u0111 = c3+c0-w c1
      {o, W2, -o, z},      // u0112 = c0+w2 c1-c2
      {W, z, o, -W2},      // u0120 = c2-w2 c3+w c0
      {o, W, -o, z},       // u0121 = c0+w c1-c2
      {o, -W2, z, o},      // u0122 = c3+c0-w2 c1
      {S, z, z, z},        // u1000 = sqrt(-3) c0
      {z, o, W, W2},       // u1001 = c1+w c2+w2 c3
      {z, o, W2, W},       // u1002 = c1+w2 c2+w c3
      {W, z, o, -o},       // u1010 = c2-c3+w c0
      {W, -o, z, o},       // u1011 = c3+w c0-c1
      {o, W2, -W2, z},     // u1012 = c0+w2 c1-w2 c2
      {W2, z, o, -o},      // u1020 = c2-c3+w2 c0
      {o, W, -W, z},       // u1021 = c0+w c1-w c2
      {W2, -o, z, o},      // u1022 = c3+w2 c0-c1
      {z, z, z, S},        // u1100 = sqrt(-3) c3
      {z, o, o, W},        // u1101 = c1+c2+w c3
      {z, o, o, W2},       // u1102 = c1+c2+w2 c3
      {o, z, o, -W},       // u1110 = c2-w c3+c0
      {W, -W, z, o},       // u1111 = c3+w c0-w c1
      {o, W, -W2, z},      // u1112 = c0+w c1-w2 c2
      {o, z, o, -W2},      // u1120 = c2-w2 c3+c0
      {o, W2, -W, z},      // u1121 = c0+w2 c1-w c2
      {W2, -W2, z, o},     // u1122 = c3+w2 c0-w2 c1
      {z, z, S, z},        // u1200 = sqrt(-3) c2
      {z, o, W2, o},       // u1201 = c1+w2 c2+c3
      {z, o, W, o},        // u1202 = c1+w c2+c3
      {W2, z, o, -W2},     // u1210 = c2-w2 c3+w2 c0
      {W, -W2, z, o},      // u1211 = c3+w c0-w2 c1
      {o, o, -W2, z},      // u1212 = c0+c1-w2 c2
      {W, z, o, -W},       // u1220 = c2-w c3+w c0
      {o, o, -W, z},       // u1221 = c0+c1-w c2
      {W2, -W, z, o}};     // u1222 = c3+w2 c0-w c1
}

}  // namespace detail

inline Arrangement arrangement(const std::string& name) {
  Arrangement a;
  a.name = name;
  if (name.rfind("m0n", 0) == 0 && name.size() == 4) {
    int n = name[3] - '0';
    if (n < 3 || n > 6) throw UnknownName(name);
    a.ambient = n;
    a.rank = n - 1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<Cyc> f(n, Cyc(0));
        f[i - 1] = Cyc(1);
        f[j - 1] = Cyc(-1);
        a.forms.push_back(std::move(f));
        a.labels.push_back("z" + std::to_string(i) + std::to_string(j));
      }
    return a;
  }
  if (name == "g32") {
    a.ambient = 4;
    a.rank = 4;
    a.forms = detail::g32_forms();
    for (int k = 0; k < 40; ++k) a.labels.push_back(u_label(k));
    return a;
  }
  if (name == "e6") {
    a.ambient = 6;
    a.rank = 6;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        std::vector<Cyc> f(6, Cyc(0));
        f[i - 1] = Cyc(1);
        f[j - 1] = Cyc(-1);
        a.forms.push_back(std::move(f));
        a.labels.push_back("d" + std::to_string(i) + "-d" + std::to_string(j));
      }
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) {
          std::vector<Cyc> f(6, Cyc(0));
          f[i - 1] = f[j - 1] = f[k - 1] = Cyc(1);
          a.forms.push_back(std::move(f));
          a.labels.push_back("d" + std::to_string(i) + "+d" + std::to_string(j) +
                             "+d" + std::to_string(k));
        }
    a.forms.push_back(std::vector<Cyc>(6, Cyc(1)));
    a.labels.push_back("d1+d2+d3+d4+d5+d6");
    return a;
  }
  if (name == "e7") {
    // Realization in the Picard lattice of a 7-point blow-up of the plane,
    // coordinates (l, e1, ..., e7): the 63 positive roots are
    // ei - ej, l - ei - ej - ek, and 2l - (e1+...+e7) + ei.
    a.ambient = 8;
    a.rank = 7;
    auto add = [&](std::vector<Cyc> f, std::string lbl) {
      a.forms.push_back(std::move(f));
      a.labels.push_back(std::move(lbl));
    };
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) {
        std::vector<Cyc> f(8, Cyc(0));
        f[i] = Cyc(1);
        f[j] = Cyc(-1);
        add(std::move(f), "e" + std::to_string(i) + "-e" + std::to_string(j));
      }
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j)
        for (int k = j + 1; k <= 7; ++k) {
          std::vector<Cyc> f(8, Cyc(0));
          f[0] = Cyc(1);
          f[i] = f[j] = f[k] = Cyc(-1);
          add(std::move(f), "l-e" + std::to_string(i) + "-e" + std::to_string(j) +
                                "-e" + std::to_string(k));
        }
    for (int i = 1; i <= 7; ++i) {
      std::vector<Cyc> f(8, Cyc(-1));
      f[0] = Cyc(2);
      f[i] = Cyc(0);
      add(std::move(f), "2l-sum+e" + std::to_string(i));
    }
    return a;
  }
  throw UnknownName(name);
}

inline LinearMatroid matroid_of(const Arrangement& a) {
  std::vector<std::vector<Eis>> vecs;
  vecs.reserve(a.forms.size());
  for (const auto& f : a.forms) {
    std::vector<Eis> v;
    v.reserve(f.size());
    for (const auto& c : f) v.push_back(eis_from_cyc(c));
    vecs.push_back(std::move(v));
  }
  return LinearMatroid(std::move(vecs));
}

/// Exponent matrix of a monomial map in linear forms: rows are target
/// coordinates, columns are arrangement forms.
struct ExponentMatrix {
  std::string name;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<int>> e;

  int rows() const { return static_cast<int>(e.size()); }
  int cols() const { return rows() ? static_cast<int>(e[0].size()) : 0; }
};

/// Builds the exponent matrix for one of the five monomial maps. The Segre,
/// Igusa and Burkhardt matrices are the incidence matrices of the finite
/// symplectic geometry; the Yoshida and Goepel matrices are derived from
/// the matroid alone: rows of the Yoshida map are triples {P,Q,R} of
/// rank-2 size-3 flats whose pairwise closures contain exactly 6 forms,
/// rows of the Goepel map are maximal 7-sets of forms that pairwise span
/// closed rank-2 flats of size exactly 2.
inline ExponentMatrix exponent_matrix(const std::string& name, const Arrangement& arr,
                                      const LinearMatroid* matroid = nullptr) {
  ExponentMatrix m;
  m.name = name;
  if (name == "segre" || name == "igusa" || name == "burkhardt") {
    IncidenceMatrix inc = incidence(name);
    m.row_labels = inc.row_labels;
    m.col_labels = inc.col_labels;
    m.e = inc.entries;
    return m;
  }
  if (!matroid) throw Error("yoshida/goepel need the matroid of the arrangement");
  const LinearMatroid& M = *matroid;
  const int n = M.size();
  m.col_labels = arr.labels;
  if (name == "yoshida") {
    // rank-2 flats with exactly 3 forms
    std::vector<uint64_t> a2;
    {
      std::map<uint64_t, bool> seen;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          uint64_t cl = M.closure((1ull << i) | (1ull << j));
          if (std::popcount(cl) == 3 && M.rank(cl) == 2) seen.emplace(cl, true);
        }
      for (auto& [k, v] : seen) a2.push_back(k);
    }
    // two A2 flats are orthogonal when their union is disjoint and itself a
    // closed flat of exactly 6 forms
    auto orth = [&](uint64_t p, uint64_t q) {
      uint64_t u = p | q;
      return std::popcount(u) == 6 && M.closure(u) == u;
    };
    std::vector<std::array<uint64_t, 3>> triples;
    for (size_t i = 0; i < a2.size(); ++i)
      for (size_t j = i + 1; j < a2.size(); ++j) {
        if (!orth(a2[i], a2[j])) continue;
        for (size_t k = j + 1; k < a2.size(); ++k) {
          if (!orth(a2[i], a2[k])) continue;
          if (!orth(a2[j], a2[k])) continue;
          triples.push_back({a2[i], a2[j], a2[k]});
        }
      }
    std::sort(triples.begin(), triples.end(), [](const auto& x, const auto& y) {
      return (x[0] | x[1] | x[2]) < (y[0] | y[1] | y[2]);
    });
    if (triples.size() != 40)
      throw CountMismatch("yoshida rows: expected 40, got " +
                          std::to_string(triples.size()));
    int idx = 0;
    for (const auto& t : triples) {
      uint64_t u = t[0] | t[1] | t[2];
      std::vector<int> row(n, 0);
      for (int c = 0; c < n; ++c) row[c] = (u >> c) & 1;
      m.e.push_back(std::move(row));
      m.row_labels.push_back("y" + std::to_string(idx++));
    }
    return m;
  }
  if (name == "goepel") {
    // orthogonality graph: pairs spanning a closed rank-2 flat of size 2
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        uint64_t cl = M.closure((1ull << i) | (1ull << j));
        if (std::popcount(cl) == 2) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
      }
    std::vector<uint64_t> heptads;
    std::vector<int> cur;
    // depth-first search for 7-cliques, vertices increasing
    auto extend = [&](auto&& self, int last, uint64_t mask, int depth) -> void {
      if (depth == 7) {
        heptads.push_back(mask);
        return;
      }
      for (int nxt : adj[last]) {
        if (nxt <= last) continue;
        bool ok = true;
        for (int v : cur)
          if (std::find(adj[v].begin(), adj[v].end(), nxt) == adj[v].end()) {
            ok = false;
            break;
          }
        if (!ok) continue;
        cur.push_back(nxt);
        self(self, nxt, mask | (1ull << nxt), depth + 1);
        cur.pop_back();
      }
    };
    for (int s = 0; s < n; ++s) {
      cur.assign(1, s);
      extend(extend, s, 1ull << s, 1);
    }
    std::sort(heptads.begin(), heptads.end());
    if (heptads.size() != 135)
      throw CountMismatch("goepel rows: expected 135, got " +
                          std::to_string(heptads.size()));
    int idx = 0;
    for (uint64_t h : heptads) {
      std::vector<int> row(n, 0);
      for (int c = 0; c < n; ++c) row[c] = (h >> c) & 1;
      m.e.push_back(std::move(row));
      m.row_labels.push_back("g" + std::to_string(idx++));
    }
    return m;
  }
  throw UnknownName(name);
}

/// Values of the arrangement forms at a point with Laurent coordinates.
inline std::vector<Val> evaluate(const Arrangement& a, const std::vector<Val>& point) {
  if (static_cast<int>(point.size()) != a.ambient)
    throw DimensionMismatch("point dimension does not match the arrangement");
  std::vector<Val> out;
  out.reserve(a.forms.size());
  for (const auto& f : a.forms) {
    Val v;
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_zero()) continue;
      v += Val(f[i]) * point[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Monomial values: products of form values along the exponent rows.
inline std::vector<Val> monomial_evaluate(const ExponentMatrix& e,
                                          const std::vector<Val>& values) {
  if (static_cast<int>(values.size()) != e.cols())
    throw DimensionMismatch("value count does not match the exponent matrix");
  std::vector<Val> out;
  out.reserve(e.rows());
  for (int r = 0; r < e.rows(); ++r) {
    Val prod(1);
    for (int c = 0; c < e.cols(); ++c)
      for (int k = 0; k < e.e[r][c]; ++k) prod *= values[c];
    out.push_back(std::move(prod));
  }
  return out;
}

}  // namespace tropmoduli
