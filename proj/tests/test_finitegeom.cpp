#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>

#include "tropmoduli/cyclotomic.hpp"
#include "tropmoduli/finite_geometry.hpp"
#include "tropmoduli/incidence.hpp"
#include "tropmoduli/linalg.hpp"
#include "tropmoduli/perm_group.hpp"

using namespace tropmoduli;

static FqVector f34(const char* d) { return f34_vector_from_digits(d); }

TEST_CASE("symplectic form values") {
  CHECK(symplectic_form(f34("0001"), f34("0010")) == 0);
  CHECK(symplectic_form(f34("1000"), f34("0010")) == 1);
  auto lines = enumerate_lines(3, 4);
  for (const auto& x : lines) CHECK(symplectic_form(x, x) == 0);
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j)
      CHECK((symplectic_form(lines[i], lines[j]) +
             symplectic_form(lines[j], lines[i])) % 3 == 0);
}

TEST_CASE("line counts over F2 and F3") {
  CHECK(enumerate_lines(3, 4).size() == 40);
  CHECK(enumerate_lines(2, 4).size() == 15);
  CHECK(enumerate_lines(2, 6).size() == 63);
}

TEST_CASE("lines are sorted lexicographically and canonical") {
  auto lines = enumerate_lines(3, 4);
  CHECK(lines.front().digits() == "0001");
  CHECK(lines.back().digits() == "1222");
  for (size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i] < lines[i + 1]);
  for (const auto& l : lines) CHECK(l.line_rep() == l);
}

TEST_CASE("plane classification over F3 and F2") {
  auto p3 = classify_planes(3);
  CHECK(p3.isotropic.size() == 40);
  CHECK(p3.plane_pairs.size() == 45);
  auto p2 = classify_planes(2);
  CHECK(p2.isotropic.size() == 15);
  CHECK(p2.plane_pairs.size() == 10);
}

TEST_CASE("orthogonal complement is an involution, isotropic iff self-perp") {
  auto p3 = classify_planes(3);
  for (const auto& w : p3.isotropic) {
    CHECK(w.orthogonal_complement() == w);
    CHECK(w.orthogonal_complement().orthogonal_complement() == w);
  }
  for (const auto& [a, b] : p3.plane_pairs) {
    CHECK(a.orthogonal_complement() == b);
    CHECK(b.orthogonal_complement() == a);
  }
}

TEST_CASE("each plane pair determines sixteen isotropic planes") {
  auto p3 = classify_planes(3);
  for (const auto& [a, b] : p3.plane_pairs) {
    std::set<std::vector<FqVector>> iso;
    for (const auto& x : a.lines())
      for (const auto& y : b.lines()) {
        FqSubspace s = FqSubspace::span(3, 4, {x, y});
        REQUIRE(s.rank() == 2);
        if (s.orthogonal_complement() == s) iso.insert(s.basis);
      }
    CHECK(iso.size() == 16);
  }
}

TEST_CASE("burkhardt incidence matches the finite symplectic geometry") {
  IncidenceMatrix inc = incidence("burkhardt");
  REQUIRE(inc.rows() == 40);
  REQUIRE(inc.cols() == 40);
  for (int r = 0; r < 40; ++r) {
    int s = 0;
    for (int c = 0; c < 40; ++c) s += inc.entries[r][c];
    CHECK(s == 4);
  }
  for (int c = 0; c < 40; ++c) {
    int s = 0;
    for (int r = 0; r < 40; ++r) s += inc.entries[r][c];
    CHECK(s == 4);
  }
  // every row is exactly the set of lines of one isotropic plane, and the
  // correspondence row -> plane is a bijection
  auto lines = enumerate_lines(3, 4);
  auto p3 = classify_planes(3);
  std::set<std::vector<FqVector>> seen;
  for (int r = 0; r < 40; ++r) {
    std::vector<FqVector> gens;
    for (int c : inc.row_support(r)) gens.push_back(lines[c]);
    REQUIRE(gens.size() == 4);
    FqSubspace s = FqSubspace::span(3, 4, gens);
    CHECK(s.rank() == 2);
    CHECK(s.orthogonal_complement() == s);
    CHECK(s.lines() == gens);
    CHECK(seen.insert(s.basis).second);
  }
  CHECK(seen.size() == p3.isotropic.size());
}

static std::vector<std::vector<Rat>> rat_matrix(const IncidenceMatrix& m) {
  std::vector<std::vector<Rat>> out;
  for (const auto& row : m.entries) {
    std::vector<Rat> r;
    for (int x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

TEST_CASE("burkhardt incidence has rank 25") {
  CHECK(field_rank(rat_matrix(incidence("burkhardt"))) == 25);
}

TEST_CASE("segre and igusa incidence shapes and supports") {
  IncidenceMatrix s = incidence("segre");
  REQUIRE(s.rows() == 15);
  REQUIRE(s.cols() == 15);
  CHECK(s.row_support(0) ==
        std::vector<int>{z_index(1, 2), z_index(3, 4), z_index(5, 6)});
  for (int r = 0; r < 15; ++r) CHECK(s.row_support(r).size() == 3);
  for (int c = 0; c < 15; ++c) {
    int cs = 0;
    for (int r = 0; r < 15; ++r) cs += s.entries[r][c];
    CHECK(cs == 3);
  }
  IncidenceMatrix ig = incidence("igusa");
  REQUIRE(ig.rows() == 10);
  REQUIRE(ig.cols() == 15);
  for (int r = 0; r < 10; ++r) CHECK(ig.row_support(r).size() == 6);
  for (int c = 0; c < 15; ++c) {
    int cs = 0;
    for (int r = 0; r < 10; ++r) cs += ig.entries[r][c];
    CHECK(cs == 4);
  }
}

TEST_CASE("segre and igusa have the same 5-dimensional kernel") {
  auto ks = field_kernel(rat_matrix(incidence("segre")));
  auto ki = field_kernel(rat_matrix(incidence("igusa")));
  REQUIRE(ks.size() == 5);
  REQUIRE(ki.size() == 5);
  auto contains = [](const std::vector<std::vector<Rat>>& space,
                     const std::vector<std::vector<Rat>>& vecs) {
    for (const auto& v : vecs) {
      auto test = space;
      test.push_back(v);
      if (field_rank(std::move(test)) != field_rank(space)) return false;
    }
    return true;
  };
  CHECK(contains(ks, ki));
  CHECK(contains(ki, ks));
}

TEST_CASE("the pair bijection to F2^4 preserves orthogonality") {
  const auto& digits = pair_to_f24_digits();
  const auto& pairs = z_pairs();
  for (int a = 0; a < 15; ++a)
    for (int b = a + 1; b < 15; ++b) {
      FqVector x = f24_vector_from_digits(digits[a]);
      FqVector y = f24_vector_from_digits(digits[b]);
      bool orth = symplectic_form(x, y) == 0;
      bool disjoint = pairs[a].first != pairs[b].first &&
                      pairs[a].first != pairs[b].second &&
                      pairs[a].second != pairs[b].first &&
                      pairs[a].second != pairs[b].second;
      CHECK(orth == disjoint);
    }
}

TEST_CASE("line action group orders: 720 over F2 and 25920 over F3") {
  CHECK(generate_sp4(2).order() == 720);
  CHECK(generate_sp4(3).order() == 25920);
}

TEST_CASE("sp4(F2) generators preserve the disjointness graph") {
  PermGroup g = generate_sp4(2);
  auto lines = enumerate_lines(2, 4);
  auto orth = [&](int i, int j) { return symplectic_form(lines[i], lines[j]) == 0; };
  for (const auto& p : g.gens)
    for (int i = 0; i < 15; ++i)
      for (int j = i + 1; j < 15; ++j) CHECK(orth(i, j) == orth(p[i], p[j]));
}

TEST_CASE("singleton lines form one orbit of size 40") {
  PermGroup g = generate_sp4(3);
  std::vector<std::vector<int>> objs;
  for (int i = 0; i < 40; ++i) objs.push_back({i});
  auto rep = orbits(g, objs);
  REQUIRE(rep.sizes.size() == 1);
  CHECK(rep.sizes[0] == 40);
}

TEST_CASE("group action commutes with the burkhardt incidence") {
  PermGroup g = generate_sp4(3);
  IncidenceMatrix inc = incidence("burkhardt");
  std::map<std::vector<int>, int> row_of_support;
  for (int r = 0; r < 40; ++r) row_of_support[inc.row_support(r)] = r;
  for (const auto& p : g.gens)
    for (int r = 0; r < 40; ++r) {
      std::vector<int> img;
      for (int c : inc.row_support(r)) img.push_back(p[c]);
      std::sort(img.begin(), img.end());
      CHECK(row_of_support.count(img) == 1);
    }
}

TEST_CASE("finite model of E6: 36 vectors, 120 planes, 40 triples") {
  auto m = e6_finite_model();
  CHECK(m.aniso_vectors.size() == 36);
  CHECK(m.aniso_planes.size() == 120);
  CHECK(m.orth_plane_triples.size() == 40);
}
