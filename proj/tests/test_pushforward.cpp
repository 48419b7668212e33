#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <random>
#include <set>

#include "tropmoduli/identifications.hpp"
#include "tropmoduli/pushforward.hpp"

using namespace tropmoduli;

TEST_CASE("tropical projective normalization") {
  CHECK(tp_is_zero(tp_normalize({2, 2, 2, 2})));
  CHECK(tp_normalize({3, 1, 1}) == std::vector<long long>{1, 0, 0});
  CHECK(tp_normalize({0, 2, 4}) == std::vector<long long>{0, 1, 2});
}

static const NestedComplex& m0n6_complex() {
  static const NestedComplex nc = nested_complex(matroid_of(arrangement("m0n6")));
  return nc;
}

TEST_CASE("tree space pushforward: segre and igusa") {
  auto a = arrangement("m0n6");
  for (const char* name : {"segre", "igusa"}) {
    auto pf = push_fan(m0n6_complex(), exponent_matrix(name, a));
    CHECK(pf.image.fvector() == std::vector<long long>{25, 105, 105});
    long expected = name == std::string("igusa") ? 2 : 1;
    for (size_t p = 0; p < pf.image.cones_by_dim[2].size(); ++p)
      REQUIRE(pf.multiplicity[pf.cone_id(2, p)] == expected);
    // every triangle is covered by four dimension-preserving sheets
    for (size_t p = 0; p < pf.image.cones_by_dim[2].size(); ++p) {
      int dp = 0;
      for (const auto& rec : pf.covering[pf.cone_id(2, p)])
        if (rec.dim_preserving) ++dp;
      CHECK(dp == 4);
    }
    auto bal = check_balancing(pf);
    CHECK(bal.balanced);
    CHECK(bal.faces_checked == 105);
  }
}

TEST_CASE("row sums are constant: the all-ones vector maps to a constant") {
  auto m6 = arrangement("m0n6");
  auto g32 = arrangement("g32");
  auto M6 = matroid_of(m6);
  auto Mg = matroid_of(g32);
  auto e6 = arrangement("e6");
  auto Me6 = matroid_of(e6);
  auto e7 = arrangement("e7");
  auto Me7 = matroid_of(e7);
  struct Case {
    const char* name;
    const Arrangement* arr;
    const LinearMatroid* m;
  } cases[] = {{"segre", &m6, &M6},
               {"igusa", &m6, &M6},
               {"burkhardt", &g32, &Mg},
               {"yoshida", &e6, &Me6},
               {"goepel", &e7, &Me7}};
  for (const auto& c : cases) {
    auto e = exponent_matrix(c.name, *c.arr, c.m);
    int sum0 = 0;
    for (int j = 0; j < e.cols(); ++j) sum0 += e.e[0][j];
    for (int r = 1; r < e.rows(); ++r) {
      int s = 0;
      for (int j = 0; j < e.cols(); ++j) s += e.e[r][j];
      REQUIRE(s == sum0);
    }
  }
}

TEST_CASE("tropical burkhardt quartic: f-vector, covers, types, balancing") {
  auto a = arrangement("g32");
  auto nc = nested_complex(matroid_of(a));
  auto pf = push_fan(nc, exponent_matrix("burkhardt", a));
  CHECK(pf.image.fvector() == std::vector<long long>{85, 600, 880});

  std::map<std::pair<int, int>, int> degree_census;  // (dim, sheets) -> count
  for (int d = 0; d < 3; ++d)
    for (size_t p = 0; p < pf.image.cones_by_dim[d].size(); ++p) {
      int dp = 0;
      for (const auto& rec : pf.covering[pf.cone_id(d, p)])
        if (rec.dim_preserving) ++dp;
      degree_census[{d + 1, dp}]++;
    }
  std::map<std::pair<int, int>, int> expect = {
      {{1, 2}, 85}, {{2, 3}, 600}, {{3, 3}, 160}, {{3, 4}, 720}};
  CHECK(degree_census == expect);

  auto lab = label_types(pf, burkhardt_ray_dictionary());
  std::map<std::string, long> want = {{"a", 40},   {"b", 45},    {"aa", 240},
                                      {"ab", 360}, {"aaa", 160}, {"aab", 720}};
  CHECK(lab.cone_type_count == want);

  auto bal = check_balancing(pf);
  CHECK(bal.balanced);
  CHECK(bal.faces_checked == 600);

  for (size_t i = 0; i < pf.image.rays.size(); ++i) {
    int sup = 0;
    for (long long x : pf.image.rays[i]) sup += x != 0;
    if (lab.ray_type[i] == 'b') CHECK(sup == 16);
    if (lab.ray_type[i] == 'a') CHECK(sup == 4);
  }
}

TEST_CASE("identification rules for the three symplectic maps") {
  for (const char* name : {"segre", "igusa", "burkhardt"}) {
    auto rep = identification_checks(name);
    INFO(name);
    for (const auto& l : rep.lines) {
      INFO(l.what);
      CHECK(l.pass);
    }
  }
}

TEST_CASE("point location in the image fan") {
  auto a = arrangement("m0n6");
  auto pf = push_fan(m0n6_complex(), exponent_matrix("segre", a));
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<size_t> pick(0, pf.image.cones_by_dim[2].size() - 1);
  std::uniform_int_distribution<int> coef(1, 9);
  for (int trial = 0; trial < 25; ++trial) {
    const auto& cone = pf.image.cones_by_dim[2][pick(rng)];
    std::vector<long long> pt(pf.image.rays[0].size(), 0);
    std::vector<long long> lam;
    for (int r : cone) {
      long long l = coef(rng);
      lam.push_back(l);
      for (size_t i = 0; i < pt.size(); ++i) pt[i] += l * pf.image.rays[r][i];
    }
    auto loc = locate_in_fan(pf.image, pt);
    REQUIRE(loc.found);
    REQUIRE(loc.cone == cone);
    for (size_t k = 0; k < lam.size(); ++k) CHECK(loc.coefficients[k] == Rat(static_cast<long>(lam[k])));
  }
  auto loc0 = locate_in_fan(pf.image, std::vector<long long>(15, 7));
  CHECK(loc0.found);
  CHECK(loc0.dim == 0);
  std::vector<long long> off(15, 0);
  off[0] = 5;
  off[1] = -3;
  off[2] = 1;
  CHECK_FALSE(locate_in_fan(pf.image, off).found);
}

TEST_CASE("unlabeled rays are reported") {
  auto a = arrangement("m0n6");
  auto pf = push_fan(m0n6_complex(), exponent_matrix("segre", a));
  RayDictionary empty;
  CHECK_THROWS_AS(label_types(pf, empty), UnlabeledRay);
}
