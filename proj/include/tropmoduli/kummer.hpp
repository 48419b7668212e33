#pragma once

#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "tropmoduli/arrangement.hpp"
#include "tropmoduli/errors.hpp"
#include "tropmoduli/incidence.hpp"
#include "tropmoduli/laurent.hpp"
#include "tropmoduli/trees.hpp"

namespace tropmoduli {

/// The eleven exponent vectors of the Kummer quartic in the chart relative
/// to the first quartic power, as points of Z^3, together with the index of
/// the coefficient (0 = r, 1 = s01, 2 = s10, 3 = s11, 4 = t) each carries.
inline const std::vector<std::pair<std::array<int, 3>, int>>& kummer_monomials() {
  static const std::vector<std::pair<std::array<int, 3>, int>> pts = {
      {{0, 0, 0}, 0}, {{4, 0, 0}, 0}, {{0, 4, 0}, 0}, {{0, 0, 4}, 0},
      {{2, 0, 0}, 1}, {{0, 2, 2}, 1},
      {{0, 2, 0}, 2}, {{2, 0, 2}, 2},
      {{0, 0, 2}, 3}, {{2, 2, 0}, 3},
      {{1, 1, 1}, 4}};
  return pts;
}

/// Lifted point configuration: the eleven exponent points with rational
/// coefficient valuations as heights.
struct LiftedConfig {
  std::vector<std::array<int, 3>> points;
  std::vector<Rat> lifts;
};

/// Exact valuations of the five Kummer coefficients (r, s01, s10, s11, t)
/// of a six-point configuration. The coefficients are linear combinations
/// of the Segre coordinates, so cancellation is possible and the full
/// Laurent values are evaluated.
struct KummerCoefficients {
  std::array<long, 5> vals;  // valuations of r, s01, s10, s11, t
};

inline KummerCoefficients kummer_coefficients(const std::vector<Val>& points) {
  if (points.size() != 6) throw DimensionMismatch("six marked points expected");
  auto a = arrangement("m0n6");
  auto z = evaluate(a, points);
  for (const auto& v : z)
    if (v.is_zero()) throw CoincidentPoints();
  auto seg = exponent_matrix("segre", a);
  auto m = monomial_evaluate(seg, z);
  Val r = m[0];
  Val s01 = Val(2) * m[0] - Val(4) * m[1];
  Val s10 = Val(2) * m[0] - Val(4) * m[3];
  Val s11 = Val(4) * m[4] - Val(2) * m[0] - Val(4) * m[7];
  Val tt = Val(8) * (m[1] + m[3] - m[0] - m[4] - m[7]);
  KummerCoefficients out;
  const char* names[5] = {"r", "s01", "s10", "s11", "t"};
  const Val* vs[5] = {&r, &s01, &s10, &s11, &tt};
  for (int i = 0; i < 5; ++i) {
    if (vs[i]->is_zero()) throw ZeroCoefficient(names[i]);
    out.vals[i] = val_of(*vs[i]);
  }
  return out;
}

inline LiftedConfig lifted_config(const KummerCoefficients& kc) {
  LiftedConfig cfg;
  for (const auto& [p, ci] : kummer_monomials()) {
    cfg.points.push_back(p);
    cfg.lifts.emplace_back(static_cast<long>(kc.vals[ci]));
  }
  return cfg;
}

/// Cells of the regular subdivision induced by the lifts: projections of
/// the lower faces of the lifted hull in R^4, computed by exhausting the
/// affinely independent support triples/quadruples with exact arithmetic.
inline std::vector<std::vector<int>> regular_subdivision(const LiftedConfig& cfg) {
  const int n = static_cast<int>(cfg.points.size());
  if (n != 11) throw DimensionMismatch("the Kummer configuration has 11 points");
  {
    std::set<std::array<int, 3>> dedupe(cfg.points.begin(), cfg.points.end());
    if (static_cast<int>(dedupe.size()) != n)
      throw DimensionMismatch("duplicate exponent points");
  }
  std::set<std::vector<int>> cells;
  // every full-dimensional cell is the equality set of a non-vertical
  // supporting hyperplane from below; it is determined by 4 affinely
  // independent points of the configuration
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          // affine functional l with l(p) = lift(p) on the four points:
          // solve [p 1] * (g0,g1,g2,g3)^T = lift
          std::vector<std::vector<Rat>> mat;
          std::vector<Rat> rhs;
          for (int idx : {a, b, c, e}) {
            std::vector<Rat> row{Rat(cfg.points[idx][0]), Rat(cfg.points[idx][1]),
                                 Rat(cfg.points[idx][2]), Rat(1)};
            mat.push_back(std::move(row));
            rhs.push_back(cfg.lifts[idx]);
          }
          if (field_rank(mat) != 4) continue;  // affinely dependent
          auto g = field_solve(mat, rhs);
          if (!g) continue;
          auto value = [&](int idx) -> Rat {
            return (*g)[0] * cfg.points[idx][0] + (*g)[1] * cfg.points[idx][1] +
                   (*g)[2] * cfg.points[idx][2] + (*g)[3];
          };
          bool lower = true;
          std::vector<int> cell;
          for (int idx = 0; idx < n && lower; ++idx) {
            Rat diff = cfg.lifts[idx] - value(idx);
            if (diff < 0) lower = false;
            else if (diff == 0) cell.push_back(idx);
          }
          if (lower) cells.insert(cell);
        }
  return {cells.begin(), cells.end()};
}

/// Two-dimensional cells of the tropical Kummer surface, dual to the edges
/// of the regular subdivision; a cell is bounded exactly when its dual edge
/// is not contained in the boundary of the Newton polytope (the simplex
/// 4*Delta_3 here).
struct DualSurface {
  struct TwoCell {
    std::array<int, 2> dual_edge;  // indices of the configuration points
    bool bounded = false;
  };
  std::vector<TwoCell> two_cells;
  long bounded = 0, unbounded = 0;
};

inline DualSurface dual_two_cells(const LiftedConfig& cfg,
                                  const std::vector<std::vector<int>>& cells) {
  // edges of a 3-polytope given by its (possibly non-vertex) points: a pair
  // {p,q} is an edge when some supporting hyperplane of the cell meets the
  // cell exactly in the segment [p,q]; with exact arithmetic this reduces
  // to: the points of the cell on the line pq lie between p and q, and the
  // pair appears as an intersection of two distinct facet planes, or the
  // cell is flat. For the 11-point Kummer configurations the cells are
  // small, so a direct face test per pair is affordable.

  // Simpler and fully rigorous route: an edge of a cell is the intersection
  // of the cell with two of its facets. Enumerate the facets of each cell
  // (supporting planes through affinely independent triples), then take
  // pairwise intersections with exactly two shared extreme points.
  DualSurface out;
  std::set<std::array<int, 2>> edges;
  for (const auto& cell : cells) {
    const int m = static_cast<int>(cell.size());
    // facets of the cell
    std::set<std::vector<int>> facets;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          const auto &pa = cfg.points[cell[a]], &pb = cfg.points[cell[b]],
                     &pc = cfg.points[cell[c]];
          std::array<long, 3> u{}, v{};
          for (int k = 0; k < 3; ++k) {
            u[k] = pb[k] - pa[k];
            v[k] = pc[k] - pa[k];
          }
          std::array<long, 3> nrm{u[1] * v[2] - u[2] * v[1],
                                  u[2] * v[0] - u[0] * v[2],
                                  u[0] * v[1] - u[1] * v[0]};
          if (nrm == std::array<long, 3>{0, 0, 0}) continue;
          long pos = 0, neg = 0;
          std::vector<int> on;
          for (int idx : cell) {
            long s = 0;
            for (int k = 0; k < 3; ++k) s += nrm[k] * (cfg.points[idx][k] - pa[k]);
            if (s > 0) ++pos;
            else if (s < 0) ++neg;
            else on.push_back(idx);
          }
          if (pos == 0 || neg == 0) facets.insert(on);
        }
    // flat cells (2-dimensional): their "facets" coincide with the cell;
    // such degenerate cells cannot occur for these lift families, but the
    // guard keeps the duality honest
    std::vector<std::vector<int>> fl(facets.begin(), facets.end());
    for (size_t i = 0; i < fl.size(); ++i)
      for (size_t j = i + 1; j < fl.size(); ++j) {
        std::vector<int> common;
        std::set_intersection(fl[i].begin(), fl[i].end(), fl[j].begin(), fl[j].end(),
                              std::back_inserter(common));
        if (common.size() < 2) continue;
        // the intersection of two facets is a face; it is an edge when its
        // points are collinear; report it by its two extreme points
        const auto& p0 = cfg.points[common[0]];
        std::array<long, 3> dir{};
        bool line = true;
        for (size_t k = 1; k < common.size(); ++k) {
          std::array<long, 3> e{};
          for (int t = 0; t < 3; ++t) e[t] = cfg.points[common[k]][t] - p0[t];
          if (dir == std::array<long, 3>{0, 0, 0}) {
            dir = e;
            continue;
          }
          for (int t1 = 0; t1 < 3 && line; ++t1)
            for (int t2 = t1 + 1; t2 < 3 && line; ++t2)
              if (dir[t1] * e[t2] - dir[t2] * e[t1] != 0) line = false;
        }
        if (!line) continue;
        int lo = common[0], hi = common[0];
        long pmin = 0, pmax = 0;
        for (int idx : common) {
          long proj = 0;
          for (int t = 0; t < 3; ++t) proj += (cfg.points[idx][t] - p0[t]) * dir[t];
          if (proj < pmin) {
            pmin = proj;
            lo = idx;
          }
          if (proj > pmax) {
            pmax = proj;
            hi = idx;
          }
        }
        if (lo == hi) continue;
        std::array<int, 2> key{std::min(lo, hi), std::max(lo, hi)};
        edges.insert(key);
      }
  }
  for (const auto& e : edges) {
    DualSurface::TwoCell tc;
    tc.dual_edge = e;
    // bounded iff the edge is not contained in the boundary of 4*Delta_3:
    // the boundary facets are x=0, y=0, z=0 and x+y+z=4
    const auto &p = cfg.points[e[0]], &q = cfg.points[e[1]];
    bool on_boundary = false;
    for (int k = 0; k < 3; ++k)
      if (p[k] == 0 && q[k] == 0) on_boundary = true;
    if (p[0] + p[1] + p[2] == 4 && q[0] + q[1] + q[2] == 4) on_boundary = true;
    tc.bounded = !on_boundary;
    out.two_cells.push_back(tc);
    (tc.bounded ? out.bounded : out.unbounded)++;
  }
  return out;
}

/// Full fiber report: the corner locus of the quartic with the exact
/// coefficient valuations (cancellation included), plus the geometry of the
/// bounded subcomplex (vertex count per bounded cell, and whether all
/// bounded cells lie in one plane).
struct KummerFiberReport {
  std::array<long, 5> coeff_vals{};
  long cells = 0;
  long two_cells = 0, bounded = 0, unbounded = 0;
  std::vector<long> bounded_cell_vertices;  // dual vertices per bounded cell
  bool bounded_complex_flat = false;        // all bounded cells coplanar
};

inline KummerFiberReport kummer_fiber(const std::vector<Val>& points) {
  KummerFiberReport rep;
  auto kc = kummer_coefficients(points);
  rep.coeff_vals = kc.vals;
  auto cfg = lifted_config(kc);
  auto cells = regular_subdivision(cfg);
  auto ds = dual_two_cells(cfg, cells);
  rep.cells = static_cast<long>(cells.size());
  rep.two_cells = static_cast<long>(ds.two_cells.size());
  rep.bounded = ds.bounded;
  rep.unbounded = ds.unbounded;

  std::set<std::array<long, 3>> planes;  // normal directions of bounded cells
  for (const auto& tc : ds.two_cells) {
    if (!tc.bounded) continue;
    const int p = tc.dual_edge[0], q = tc.dual_edge[1];
    long nv = 0;
    for (const auto& cell : cells) {
      bool hasp = false, hasq = false;
      for (int idx : cell) {
        hasp |= idx == p;
        hasq |= idx == q;
      }
      if (hasp && hasq) ++nv;  // one dual vertex per cell around the edge
    }
    rep.bounded_cell_vertices.push_back(nv);
    std::array<long, 3> nrm{};
    for (int t = 0; t < 3; ++t) nrm[t] = cfg.points[q][t] - cfg.points[p][t];
    long g = 0;
    for (long x : nrm) g = std::gcd(g, std::abs(x));
    if (g > 1)
      for (long& x : nrm) x /= g;
    if (nrm < std::array<long, 3>{0, 0, 0}) 
      for (long& x : nrm) x = -x;
    planes.insert(nrm);
  }
  rep.bounded_complex_flat = rep.bounded > 0 && planes.size() == 1;
  std::sort(rep.bounded_cell_vertices.begin(), rep.bounded_cell_vertices.end());
  return rep;
}

/// Exact corner-locus test: the minimum of the eleven tropicalized terms at
/// a rational point is attained at least twice.
inline bool corner_locus_member(const LiftedConfig& cfg, const std::array<Rat, 3>& w) {
  Rat best;
  int count = 0;
  for (size_t i = 0; i < cfg.points.size(); ++i) {
    Rat v = cfg.lifts[i];
    for (int k = 0; k < 3; ++k) v += w[k] * cfg.points[i][k];
    if (count == 0 || v < best) {
      best = v;
      count = 1;
    } else if (v == best) {
      ++count;
    }
  }
  return count >= 2;
}

}  // namespace tropmoduli
