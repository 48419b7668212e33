#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <random>
#include <set>

#include "tropmoduli/identifications.hpp"
#include "tropmoduli/pushforward.hpp"
#include "tropmoduli/trees.hpp"

using namespace tropmoduli;

TEST_CASE("tree space complexes for n = 4, 5, 6") {
  auto t4 = treespace_complex(4);
  CHECK(t4.splits.size() == 3);
  CHECK(t4.faces_by_size.size() == 1);  // three isolated vertices
  CHECK(t4.faces_by_size[0].size() == 3);

  auto t5 = treespace_complex(5);
  CHECK(t5.faces_by_size[0].size() == 10);
  CHECK(t5.faces_by_size[1].size() == 15);
  // the compatibility graph is 3-regular with girth 5: the Petersen graph
  std::vector<std::vector<int>> adj(10);
  for (const auto& e : t5.faces_by_size[1]) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (const auto& a : adj) CHECK(a.size() == 3);
  int girth = 100;
  for (int s = 0; s < 10; ++s) {
    std::vector<int> dist(10, -1), par(10, -1);
    std::vector<int> q{s};
    dist[s] = 0;
    for (size_t h = 0; h < q.size(); ++h) {
      int u = q[h];
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          par[v] = u;
          q.push_back(v);
        } else if (v != par[u]) {
          girth = std::min(girth, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  CHECK(girth == 5);

  auto t6 = treespace_complex(6);
  CHECK(t6.faces_by_size[0].size() == 25);
  CHECK(t6.faces_by_size[1].size() == 105);
  CHECK(t6.faces_by_size[2].size() == 105);
}

static std::vector<Val> snowflake_points() {
  return {Val(0), Val::t(), Val(1), Val(1) + Val::t(2), Val(3), Val(3) + Val::t(3)};
}

TEST_CASE("nu matrix of the snowflake configuration") {
  auto d = nu_from_points(snowflake_points());
  CHECK(d.nu[0][1] == Rat(-1));
  CHECK(d.nu[2][3] == Rat(-2));
  CHECK(d.nu[4][5] == Rat(-3));
  CHECK(d.nu[0][2] == Rat(0));
  CHECK(d.nu[1][5] == Rat(0));
  CHECK_THROWS_AS(nu_from_points({Val(0), Val(0), Val(1), Val(2)}), CoincidentPoints);
}

TEST_CASE("tree reconstruction on the snowflake") {
  auto t = tree_from_nu(nu_from_points(snowflake_points()));
  REQUIRE(t.splits.size() == 3);
  std::map<std::string, Rat> w;
  for (const auto& [s, x] : t.splits) w[s.str()] = x;
  CHECK(w.at("12|3456") == Rat(1));
  CHECK(w.at("1256|34") == Rat(2));
  CHECK(w.at("1234|56") == Rat(3));
}

TEST_CASE("star tree and degenerate cases") {
  auto t = tree_from_nu(nu_from_points({Val(0), Val(1), Val(2), Val(3), Val(5), Val(8)}));
  CHECK(t.splits.empty());
  CHECK(genus2_from_tree(t).type == 1);
}

TEST_CASE("quartet: the winning expression identifies the split") {
  std::vector<Val> pts{Val(0), Val::t(), Val(1), Val(3)};
  auto d = nu_from_points(pts);
  Rat e_a = d.nu[0][1] + d.nu[2][3] - d.nu[0][3] - d.nu[1][2];  // split 14|23
  Rat e_b = d.nu[0][2] + d.nu[1][3] - d.nu[0][1] - d.nu[2][3];  // split 12|34
  Rat e_c = d.nu[0][3] + d.nu[1][2] - d.nu[0][2] - d.nu[1][3];  // split 13|24
  CHECK(e_b == Rat(1));
  CHECK(std::max({e_a, e_b, e_c}) == e_b);
  auto t = tree_from_nu(d);
  REQUIRE(t.splits.size() == 1);
  CHECK(t.splits[0].first.str() == "12|34");
  CHECK(t.splits[0].second == e_b);
}

TEST_CASE("a dissimilarity violating the four point condition is rejected") {
  Dissimilarity d;
  d.n = 4;
  d.nu.assign(4, std::vector<Rat>(4, Rat(0)));
  d.nu[0][2] = d.nu[2][0] = Rat(-1);
  d.nu[0][3] = d.nu[3][0] = Rat(-2);
  CHECK_THROWS_AS(tree_from_nu(d), NotTreelike);
}

TEST_CASE("m-valuations of the snowflake and the internal edge formulas") {
  auto mv = m_valuations(snowflake_points());
  CHECK(mv[2] == 1);
  CHECK(mv[6] == 3);
  CHECK(mv[13] == 0);
  CHECK(mv[14] == 2);
  std::multiset<long> edges{mv[2] - mv[13], mv[6] - mv[13], mv[14] - mv[13]};
  CHECK(edges == std::multiset<long>{1, 2, 3});
}

TEST_CASE("all-equal valuations give the zero tropical class") {
  auto mv = m_valuations({Val(0), Val(1), Val(2), Val(3), Val(5), Val(8)});
  for (long v : mv) CHECK(v == mv[0]);
}

TEST_CASE("genus-2 graphs from trees") {
  auto snow = genus2_from_tree(tree_from_nu(nu_from_points(snowflake_points())));
  CHECK(snow.type == 7);
  CHECK(snow.lengths == std::vector<Rat>{Rat(2), Rat(4), Rat(6)});

  // caterpillar: cherries of weight 2 and 3, middle of weight 2
  std::vector<Val> cat{Val(0),        Val::t(3),         Val::t(),
                       Val(1),        Val(1) + Val::t(), Val(1) + Val::t() + Val::t(4)};
  auto t = tree_from_nu(nu_from_points(cat));
  REQUIRE(t.splits.size() == 3);
  auto g = genus2_from_tree(t);
  CHECK(g.type == 6);
  CHECK(g.lengths == std::vector<Rat>{Rat(4), Rat(1), Rat(6)});

  // length additivity under scaling
  MetricTree scaled = t;
  for (auto& [s, w] : scaled.splits) w *= 3;
  auto gs = genus2_from_tree(scaled);
  for (size_t i = 0; i < g.lengths.size(); ++i) CHECK(gs.lengths[i] == 3 * g.lengths[i]);
}

TEST_CASE("genus-1: edge length against the j-invariant valuation") {
  auto r = genus1_check({Val(0), Val::t(), Val(1), Val(3)});
  CHECK(r.edge_length == Rat(1));
  CHECK(r.val_j == -2);
  auto r2 = genus1_check({Val(0), Val(1), Val(2), Val(2) + Val::t()});
  CHECK(r2.edge_length == Rat(1));
  CHECK(r2.val_j == -2);
  auto r3 = genus1_check({Val(0), Val(1), Val(2), Val(5)});
  CHECK(r3.edge_length == Rat(0));
  CHECK(r3.val_j == 0);
}

TEST_CASE("genus-1 contract on random configurations") {
  std::mt19937_64 rng(31415);
  std::uniform_int_distribution<int> vdist(1, 5), cdist(2, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int v = vdist(rng);
    std::vector<Val> pts{Val(cdist(rng)), Val(0), Val(cdist(rng) + 10), Val(-3)};
    pts[1] = pts[0] + Val::monomial(Cyc(cdist(rng)), v);
    auto r = genus1_check(pts);
    REQUIRE(r.edge_length == Rat(v));
    REQUIRE(r.val_j == -2 * v);
  }
}

TEST_CASE("m-valuation vectors land in the matching tree-space cone") {
  auto a = arrangement("m0n6");
  auto nc = nested_complex(matroid_of(a));
  auto pf = push_fan(nc, exponent_matrix("segre", a));
  auto lab = label_types(pf, treespace_ray_dictionary("segre"));

  auto mv = m_valuations(snowflake_points());
  std::vector<long long> pt(mv.begin(), mv.end());
  auto loc = locate_in_fan(pf.image, pt);
  REQUIRE(loc.found);
  REQUIRE(loc.dim == 3);
  std::string type;
  for (int r : loc.cone) type += lab.ray_type[r];
  CHECK(type == "aaa");  // three cherries
  std::multiset<Rat> weights(loc.coefficients.begin(), loc.coefficients.end());
  CHECK(weights == std::multiset<Rat>{Rat(1), Rat(2), Rat(3)});
}
