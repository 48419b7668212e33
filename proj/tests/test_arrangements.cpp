#include <catch2/catch_amalgamated.hpp>
#include <bit>

#include "tropmoduli/arrangement.hpp"
#include "tropmoduli/finite_geometry.hpp"

using namespace tropmoduli;

TEST_CASE("catalog sizes and ranks") {
  auto m6 = arrangement("m0n6");
  CHECK(m6.size() == 15);
  CHECK(matroid_of(m6).full_rank() == 5);
  auto g = arrangement("g32");
  CHECK(g.size() == 40);
  CHECK(matroid_of(g).full_rank() == 4);
  auto e6 = arrangement("e6");
  CHECK(e6.size() == 36);
  CHECK(matroid_of(e6).full_rank() == 6);
  auto e7 = arrangement("e7");
  CHECK(e7.size() == 63);
  CHECK(matroid_of(e7).full_rank() == 7);
  CHECK_THROWS_AS(arrangement("m0n9"), UnknownName);
}

TEST_CASE("g32 labels follow the line order") {
  auto g = arrangement("g32");
  CHECK(g.labels[0] == "u0001");
  CHECK(g.labels[4] == "u0100");
  CHECK(g.labels[39] == "u1222");
}

// Transcription check for the forty forms: two independent vectors of F_3^4
// pair to zero under the symplectic form exactly when the corresponding
// linear forms are perpendicular under the Hermitian inner product.
TEST_CASE("g32 forms realize the symplectic orthogonality") {
  auto g = arrangement("g32");
  auto lines = enumerate_lines(3, 4);
  auto herm = [&](int i, int j) {
    Cyc s(0);
    for (int k = 0; k < 4; ++k) s += g.forms[i][k] * g.forms[j][k].conj();
    return s;
  };
  for (int i = 0; i < 40; ++i)
    for (int j = i + 1; j < 40; ++j) {
      bool symp0 = symplectic_form(lines[i], lines[j]) == 0;
      CHECK(symp0 == herm(i, j).is_zero());
    }
}

TEST_CASE("g32 at the all-ones point") {
  auto g = arrangement("g32");
  std::vector<Val> pt(4, Val(1));
  auto vals = evaluate(g, pt);
  CHECK(vals[0] == Val(3));  // u0001 = c1+c2+c3
}

TEST_CASE("M0N(6) evaluation at the snowflake configuration") {
  auto m6 = arrangement("m0n6");
  std::vector<Val> x = {Val(0), Val::t(), Val(1), Val(1) + Val::t(2),
                        Val(3), Val(3) + Val::t(3)};
  auto z = evaluate(m6, x);
  auto vz = [&](int i, int j) { return *z[z_index(i, j)].valuation(); };
  CHECK(vz(1, 2) == 1);
  CHECK(vz(3, 4) == 2);
  CHECK(vz(5, 6) == 3);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      if (!((i == 1 && j == 2) || (i == 3 && j == 4) || (i == 5 && j == 6)))
        CHECK(vz(i, j) == 0);

  auto seg = exponent_matrix("segre", m6);
  auto mv = monomial_evaluate(seg, z);
  CHECK(*mv[2].valuation() == 1);
  CHECK(*mv[6].valuation() == 3);
  CHECK(*mv[13].valuation() == 0);
  CHECK(*mv[14].valuation() == 2);
}

TEST_CASE("monomial valuations equal the exponent matrix applied to valuations") {
  auto m6 = arrangement("m0n6");
  std::vector<Val> x = {Val(0), Val::t(), Val(5), Val(5) + Val::t(4),
                        Val(2), Val(2) + Val::monomial(Cyc::omega(), 2)};
  auto z = evaluate(m6, x);
  for (const char* name : {"segre", "igusa"}) {
    auto e = exponent_matrix(name, m6);
    auto mv = monomial_evaluate(e, z);
    for (int r = 0; r < e.rows(); ++r) {
      long expect = 0;
      for (int c = 0; c < e.cols(); ++c) expect += e.e[r][c] * *z[c].valuation();
      CHECK(*mv[r].valuation() == expect);
    }
  }
}

TEST_CASE("burkhardt exponent matrix coincides with the incidence matrix") {
  auto g = arrangement("g32");
  auto e = exponent_matrix("burkhardt", g);
  IncidenceMatrix inc = incidence("burkhardt");
  CHECK(e.e == inc.entries);
}

TEST_CASE("E6 has 120 rank-2 size-3 flats") {
  auto e6 = arrangement("e6");
  auto M = matroid_of(e6);
  std::set<uint64_t> flats;
  for (int i = 0; i < 36; ++i)
    for (int j = i + 1; j < 36; ++j) {
      uint64_t cl = M.closure((1ull << i) | (1ull << j));
      if (std::popcount(cl) == 3) flats.insert(cl);
    }
  CHECK(flats.size() == 120);
}

TEST_CASE("E6 closure example: two triple sums close up with the full sum") {
  auto e6 = arrangement("e6");
  auto M = matroid_of(e6);
  auto idx = [&](const std::string& lbl) {
    for (int i = 0; i < e6.size(); ++i)
      if (e6.labels[i] == lbl) return i;
    FAIL("missing label " + lbl);
    return -1;
  };
  int a = idx("d1+d3+d6"), b = idx("d2+d4+d5"), s = idx("d1+d2+d3+d4+d5+d6");
  uint64_t cl = M.closure((1ull << a) | (1ull << b));
  CHECK(std::popcount(cl) == 3);
  CHECK((cl >> s & 1) == 1);
}

TEST_CASE("yoshida map: 40 rows of weight 9, each form used 10 times") {
  auto e6 = arrangement("e6");
  auto M = matroid_of(e6);
  auto y = exponent_matrix("yoshida", e6, &M);
  REQUIRE(y.rows() == 40);
  REQUIRE(y.cols() == 36);
  std::vector<int> colsum(36, 0);
  for (int r = 0; r < 40; ++r) {
    int s = 0;
    for (int c = 0; c < 36; ++c) {
      s += y.e[r][c];
      colsum[c] += y.e[r][c];
    }
    CHECK(s == 9);
  }
  for (int c = 0; c < 36; ++c) CHECK(colsum[c] == 10);
}

TEST_CASE("A2 triples of E6 match the finite model on F2^6") {
  auto e6 = arrangement("e6");
  auto M = matroid_of(e6);
  // the 120 A2 flats with their orthogonality graph (pairwise closure size 6)
  std::vector<uint64_t> a2;
  {
    std::set<uint64_t> seen;
    for (int i = 0; i < 36; ++i)
      for (int j = i + 1; j < 36; ++j) {
        uint64_t cl = M.closure((1ull << i) | (1ull << j));
        if (std::popcount(cl) == 3) seen.insert(cl);
      }
    a2.assign(seen.begin(), seen.end());
  }
  REQUIRE(a2.size() == 120);
  auto fm = e6_finite_model();
  REQUIRE(fm.aniso_planes.size() == 120);

  auto adj_mat = [&](auto edge, size_t n) {
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (edge(i, j)) {
          adj[i].push_back(static_cast<int>(j));
          adj[j].push_back(static_cast<int>(i));
        }
    return adj;
  };
  auto adj1 = adj_mat(
      [&](size_t i, size_t j) {
        uint64_t u = a2[i] | a2[j];
        return std::popcount(u) == 6 && M.closure(u) == u;
      },
      120);
  auto orth = [&](const FqSubspace& p, const FqSubspace& q) {
    for (const auto& x : p.basis)
      for (const auto& y : q.basis)
        if (e6_bilinear_form(x, y)) return false;
    return true;
  };
  auto adj2 = adj_mat(
      [&](size_t i, size_t j) {
        return orth(fm.aniso_planes[i], fm.aniso_planes[j]);
      },
      120);

  // colour refinement: both graphs must stabilize to the same colour census
  auto refine = [](const std::vector<std::vector<int>>& adj) {
    std::vector<long> col(adj.size(), 0);
    for (int round = 0; round < 8; ++round) {
      std::map<std::pair<long, std::multiset<long>>, long> relabel;
      std::vector<long> next(adj.size());
      for (size_t v = 0; v < adj.size(); ++v) {
        std::multiset<long> nb;
        for (int u : adj[v]) nb.insert(col[u]);
        auto key = std::make_pair(col[v], nb);
        auto it = relabel.find(key);
        if (it == relabel.end())
          it = relabel.emplace(key, static_cast<long>(relabel.size())).first;
        next[v] = it->second;
      }
      col = next;
    }
    std::multiset<long> census(col.begin(), col.end());
    return census;
  };
  CHECK(refine(adj1) == refine(adj2));
  // matching triple counts: triangles in both orthogonality graphs
  auto triangles = [](const std::vector<std::vector<int>>& adj) {
    std::set<std::array<int, 3>> t;
    for (size_t i = 0; i < adj.size(); ++i)
      for (int j : adj[i]) {
        if (j <= static_cast<int>(i)) continue;
        for (int k : adj[j]) {
          if (k <= j) continue;
          if (std::find(adj[i].begin(), adj[i].end(), k) != adj[i].end())
            t.insert({static_cast<int>(i), j, k});
        }
      }
    return t.size();
  };
  CHECK(triangles(adj1) == 40);
  CHECK(triangles(adj2) == 40);
}

TEST_CASE("goepel map: 135 heptads of weight 7, each form used 15 times") {
  auto e7 = arrangement("e7");
  auto M = matroid_of(e7);
  auto g = exponent_matrix("goepel", e7, &M);
  REQUIRE(g.rows() == 135);
  REQUIRE(g.cols() == 63);
  std::vector<int> colsum(63, 0);
  for (int r = 0; r < 135; ++r) {
    int s = 0;
    for (int c = 0; c < 63; ++c) {
      s += g.e[r][c];
      colsum[c] += g.e[r][c];
    }
    CHECK(s == 7);
  }
  for (int c = 0; c < 63; ++c) CHECK(colsum[c] == 15);
}
