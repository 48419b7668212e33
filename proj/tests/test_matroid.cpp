#include <catch2/catch_amalgamated.hpp>
#include <bit>
#include <map>
#include <random>

#include "tropmoduli/arrangement.hpp"
#include "tropmoduli/fan.hpp"
#include "tropmoduli/matroid.hpp"

using namespace tropmoduli;

static LinearMatroid m0n(int n) { return matroid_of(arrangement("m0n" + std::to_string(n))); }

TEST_CASE("closure of a triangle in the graphic matroid of K6") {
  auto a = arrangement("m0n6");
  auto M = matroid_of(a);
  uint64_t s = (1ull << z_index(1, 2)) | (1ull << z_index(1, 3));
  uint64_t expect = s | (1ull << z_index(2, 3));
  CHECK(M.closure(s) == expect);
  CHECK(M.rank(s) == 2);
}

TEST_CASE("rank and closure properties on random subsets") {
  auto M = matroid_of(arrangement("g32"));
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<uint64_t> bits;
  for (int trial = 0; trial < 300; ++trial) {
    uint64_t s = bits(rng) & bits(rng) & bits(rng) & M.all_mask();
    uint64_t t = bits(rng) & bits(rng) & bits(rng) & M.all_mask();
    uint64_t u = s | t, i = s & t;
    CHECK(M.rank(s) <= M.rank(u));                              // monotone
    CHECK(M.rank(u) + M.rank(i) <= M.rank(s) + M.rank(t));      // submodular
    uint64_t cl = M.closure(s);
    CHECK((cl & s) == s);            // extensive
    CHECK(M.closure(cl) == cl);      // idempotent
    CHECK(M.rank(cl) == M.rank(s));
  }
}

TEST_CASE("rank agrees with rational gaussian elimination") {
  auto a = arrangement("g32");
  auto M = matroid_of(a);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<uint64_t> bits;
  for (int trial = 0; trial < 100; ++trial) {
    uint64_t s = bits(rng) & bits(rng) & M.all_mask();
    std::vector<std::vector<Cyc>> rows;
    for (int i = 0; i < 40; ++i)
      if (s >> i & 1) rows.push_back(a.forms[i]);
    CHECK(M.rank(s) == field_rank(std::move(rows)));
  }
}

TEST_CASE("irreducible proper flats of G32 come as 40 + 90 + 40") {
  auto M = matroid_of(arrangement("g32"));
  auto irr = M.irreducible_proper_flats();
  std::array<int, 4> per_rank{};
  for (const auto& f : irr) per_rank[f.rank]++;
  CHECK(per_rank[1] == 40);
  CHECK(per_rank[2] == 90);
  CHECK(per_rank[3] == 40);
  for (const auto& f : irr) {
    if (f.rank == 2) CHECK(std::popcount(f.elems) == 4);
    if (f.rank == 3) CHECK(std::popcount(f.elems) == 12);
  }
}

TEST_CASE("the hyperplane flat orthogonal to (0,0,1,2) appears as listed") {
  auto M = matroid_of(arrangement("g32"));
  auto irr = M.irreducible_proper_flats();
  uint64_t expect = 0;
  for (const char* d : {"0001", "0010", "0011", "1100", "1101", "1102", "1110",
                        "1111", "1112", "1120", "1121", "1122"})
    expect |= 1ull << u_index(d);
  bool found = false;
  for (const auto& f : irr)
    if (f.rank == 3 && f.elems == expect) found = true;
  CHECK(found);
}

TEST_CASE("M0N(6) connected flats are the 56 vertex subsets") {
  auto M = m0n(6);
  CHECK(M.irreducible_proper_flats().size() == 56);
}

TEST_CASE("E6 flat family counts match by rank and size") {
  auto M = matroid_of(arrangement("e6"));
  auto levels = M.flats_by_rank();
  std::map<std::pair<int, int>, int> census;
  for (int r = 1; r <= 5; ++r)
    for (const auto& f : levels[r]) census[{r, std::popcount(f.elems)}]++;
  std::map<std::pair<int, int>, int> expect = {
      {{1, 1}, 36},  {{2, 3}, 120},  {{2, 2}, 270},  {{3, 6}, 270},
      {{3, 4}, 720}, {{3, 3}, 540},  {{4, 12}, 45},  {{4, 10}, 216},
      {{4, 7}, 540}, {{4, 6}, 120},  {{4, 5}, 1080}, {{5, 20}, 27},
      {{5, 15}, 36}, {{5, 11}, 216}, {{5, 7}, 360}};
  CHECK(census == expect);
  std::map<std::pair<int, int>, bool> irr_expect = {
      {{1, 1}, true},  {{2, 3}, true},  {{2, 2}, false}, {{3, 6}, true},
      {{3, 4}, false}, {{3, 3}, false}, {{4, 12}, true}, {{4, 10}, true},
      {{4, 7}, false}, {{4, 6}, false}, {{4, 5}, false}, {{5, 20}, true},
      {{5, 15}, true}, {{5, 11}, false}, {{5, 7}, false}};
  for (int r = 1; r <= 5; ++r)
    for (const auto& f : levels[r])
      CHECK(f.irreducible == irr_expect[{r, std::popcount(f.elems)}]);
}

TEST_CASE("E6 has 750 irreducible proper flats") {
  CHECK(matroid_of(arrangement("e6")).irreducible_proper_flats().size() == 750);
}

TEST_CASE("moebius numbers: G32 gives 1729, K4 gives 6, triangle gives 2") {
  CHECK(matroid_of(arrangement("g32")).moebius_number() == 1729);
  CHECK(m0n(4).moebius_number() == 6);
  LinearMatroid tri({{Eis(1), Eis(0)}, {Eis(0), Eis(1)}, {Eis(1), Eis(1)}});
  CHECK(tri.moebius_number() == 2);
}

TEST_CASE("bergman complex of M0N(6) has f-vector (56,490,1260,945)") {
  auto nc = nested_complex(m0n(6));
  CHECK(nc.fan.fvector() == std::vector<long long>{56, 490, 1260, 945});
}

TEST_CASE("bergman complex of G32 has f-vector (170,1800,3360)") {
  auto nc = nested_complex(matroid_of(arrangement("g32")));
  CHECK(nc.fan.fvector() == std::vector<long long>{170, 1800, 3360});
  CHECK(3360 - 1800 + 170 - 1 == 1729);
}

TEST_CASE("nested cones are simplicial: ray vectors independent") {
  auto nc = nested_complex(matroid_of(arrangement("g32")));
  for (const auto& cone : nc.fan.cones_by_dim[2]) {
    std::vector<std::vector<Rat>> rows;
    for (int r : cone) {
      std::vector<Rat> row;
      for (long long x : nc.fan.rays[r]) row.emplace_back(static_cast<long>(x));
      rows.push_back(std::move(row));
    }
    REQUIRE(field_rank(std::move(rows)) == 3);
  }
}

TEST_CASE("circuits of G32 and the tropical membership oracle") {
  auto M = matroid_of(arrangement("g32"));
  auto circuits = M.circuits();
  for (uint64_t c : circuits) {
    int sz = std::popcount(c);
    CHECK(sz <= 5);
    CHECK(M.rank(c) == sz - 1);
    for (uint64_t m = c; m; m &= m - 1) {
      uint64_t sub = c & ~(1ull << std::countr_zero(m));
      CHECK(M.rank(sub) == sz - 1);
    }
  }
  long n3 = 0;
  for (uint64_t c : circuits)
    if (std::popcount(c) == 3) ++n3;
  CHECK(n3 == 360);

  auto nc = nested_complex(M);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(1, 7);
  std::uniform_int_distribution<size_t> pick(0, nc.fan.cones_by_dim[2].size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& cone = nc.fan.cones_by_dim[2][pick(rng)];
    std::vector<long long> w(40, 0);
    for (int r : cone) {
      long long lam = coef(rng);
      for (int e = 0; e < 40; ++e) w[e] += lam * nc.fan.rays[r][e];
    }
    CHECK(LinearMatroid::circuit_membership(w, circuits));
    CHECK(LinearMatroid::circuit_membership(std::vector<long long>(40, 0), circuits));
    std::uniform_int_distribution<int> noise(0, 39);
    auto bad = w;
    bad[noise(rng)] += 1000 + trial;
    bad[noise(rng)] -= 977;
    CHECK_FALSE(LinearMatroid::circuit_membership(bad, circuits));
  }
  CHECK_THROWS_AS(matroid_of(arrangement("e6")).circuits(), TooLarge);
}
