#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tropmoduli/kummer.hpp"

using namespace tropmoduli;

static std::vector<Val> snowflake_points() {
  return {Val(0), Val::t(), Val(1), Val(1) + Val::t(2), Val(3), Val(3) + Val::t(3)};
}
static std::vector<Val> caterpillar_points() {
  return {Val(0),           Val::t(3),         Val::t(),
          Val(1),           Val(1) + Val::t(), Val(1) + Val::t() + Val::t(4)};
}

TEST_CASE("kummer coefficient valuations of the snowflake") {
  auto kc = kummer_coefficients(snowflake_points());
  CHECK(kc.vals == std::array<long, 5>{6, 1, 3, 2, 0});
  // s11 needs the full Laurent value: its two order-zero terms cancel
}

TEST_CASE("coefficients of a coincident configuration are rejected") {
  CHECK_THROWS_AS(kummer_coefficients({Val(0), Val(0), Val(1), Val(2), Val(3), Val(4)}),
                  CoincidentPoints);
}

TEST_CASE("trivial lifts: one cell, no bounded two-cells") {
  LiftedConfig cfg;
  for (const auto& [p, ci] : kummer_monomials()) {
    cfg.points.push_back(p);
    cfg.lifts.emplace_back(0);
  }
  auto cells = regular_subdivision(cfg);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].size() == 11);
  auto ds = dual_two_cells(cfg, cells);
  CHECK(ds.bounded == 0);
}

TEST_CASE("generic lifts give a triangulation") {
  LiftedConfig cfg;
  long primes[11] = {3, 5, 17, 11, 23, 41, 7, 29, 13, 37, 19};
  int i = 0;
  for (const auto& [p, ci] : kummer_monomials()) {
    cfg.points.push_back(p);
    cfg.lifts.emplace_back(Rat(primes[i], 7 + i));
    ++i;
  }
  auto cells = regular_subdivision(cfg);
  for (const auto& c : cells) CHECK(c.size() == 4);
}

TEST_CASE("snowflake fiber: 30 two-cells, 24 unbounded, 6 bounded quadrilaterals") {
  auto r = kummer_fiber(snowflake_points());
  CHECK(r.two_cells == 30);
  CHECK(r.unbounded == 24);
  CHECK(r.bounded == 6);
  CHECK(r.bounded_cell_vertices == std::vector<long>{4, 4, 4, 4, 4, 4});
  CHECK_FALSE(r.bounded_complex_flat);  // the six facets of a parallelepiped
}

TEST_CASE("caterpillar fiber: the bounded complex is one flat octagon") {
  auto r = kummer_fiber(caterpillar_points());
  CHECK(r.unbounded == 24);
  CHECK(r.bounded == 1);
  CHECK(r.two_cells == 25);
  CHECK(r.bounded_complex_flat);
  CHECK(r.bounded_cell_vertices == std::vector<long>{8});
}

TEST_CASE("duality: subdivision edges equal surface two-cells") {
  for (const auto& pts : {snowflake_points(), caterpillar_points()}) {
    auto kc = kummer_coefficients(pts);
    auto cfg = lifted_config(kc);
    auto cells = regular_subdivision(cfg);
    auto ds = dual_two_cells(cfg, cells);
    // each two-cell is recorded with its dual edge; edges are unique
    std::set<std::array<int, 2>> edges;
    for (const auto& tc : ds.two_cells) edges.insert(tc.dual_edge);
    CHECK(edges.size() == ds.two_cells.size());
  }
}

TEST_CASE("corner locus: minimum attained twice on sampled surface points") {
  auto kc = kummer_coefficients(snowflake_points());
  auto cfg = lifted_config(kc);
  auto cells = regular_subdivision(cfg);
  auto ds = dual_two_cells(cfg, cells);
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<int> num(1, 9);
  long sampled = 0;
  for (const auto& tc : ds.two_cells) {
    // dual vertices of the cells around the edge lie on the closed two-cell
    const int p = tc.dual_edge[0], q = tc.dual_edge[1];
    std::vector<std::array<Rat, 3>> verts;
    for (const auto& cell : cells) {
      bool hasp = false, hasq = false;
      for (int idx : cell) {
        hasp |= idx == p;
        hasq |= idx == q;
      }
      if (!hasp || !hasq) continue;
      std::vector<std::vector<Rat>> a;
      std::vector<Rat> b;
      for (size_t k = 1; k < cell.size(); ++k) {
        std::vector<Rat> row;
        for (int t = 0; t < 3; ++t)
          row.emplace_back(cfg.points[cell[k]][t] - cfg.points[cell[0]][t]);
        a.push_back(std::move(row));
        b.push_back(cfg.lifts[cell[0]] - cfg.lifts[cell[k]]);
      }
      auto w = field_solve(a, b);
      REQUIRE(w.has_value());
      verts.push_back({(*w)[0], (*w)[1], (*w)[2]});
    }
    if (verts.size() < 2) continue;
    for (int s = 0; s < 100; ++s) {
      // random convex combination of the dual vertices stays on the cell
      Rat l1(num(rng)), l2(num(rng));
      size_t i = s % verts.size(), j = (s + 1) % verts.size();
      std::array<Rat, 3> w;
      for (int t = 0; t < 3; ++t)
        w[t] = (l1 * verts[i][t] + l2 * verts[j][t]) / (l1 + l2);
      REQUIRE(corner_locus_member(cfg, w));
      ++sampled;
    }
  }
  CHECK(sampled > 1000);
}

TEST_CASE("relabeling cherries permutes the three middle coefficients") {
  // swap the cherries {3,4} and {5,6} of the snowflake
  auto p1 = snowflake_points();
  auto p2 = p1;
  std::swap(p2[2], p2[4]);
  std::swap(p2[3], p2[5]);
  auto k1 = kummer_coefficients(p1);
  auto k2 = kummer_coefficients(p2);
  CHECK(k1.vals[0] == k2.vals[0]);
  CHECK(k1.vals[4] == k2.vals[4]);
  std::multiset<long> s1{k1.vals[1], k1.vals[2], k1.vals[3]};
  std::multiset<long> s2{k2.vals[1], k2.vals[2], k2.vals[3]};
  CHECK(s1 == s2);
  auto r1 = kummer_fiber(p1);
  auto r2 = kummer_fiber(p2);
  CHECK(r1.two_cells == r2.two_cells);
  CHECK(r1.bounded == r2.bounded);
}
