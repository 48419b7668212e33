#include <catch2/catch_amalgamated.hpp>

#include "tropmoduli/io.hpp"
#include "tropmoduli/parse.hpp"

using namespace tropmoduli;

TEST_CASE("laurent grammar accepts the documented forms") {
  CHECK(parse_laurent("1+2*t^3") == Val(1) + Val(2) * Val::t(3));
  CHECK(parse_laurent("w*t^-1") == Val::monomial(Cyc::omega(), -1));
  CHECK(parse_laurent("-1/2") == Val(Cyc(Rat(-1, 2))));
  CHECK(parse_laurent("2w2*t") == Val::monomial(Cyc(2) * Cyc::omega() * Cyc::omega(), 1));
  CHECK(parse_laurent("t^2") == Val::t(2));
  CHECK(parse_laurent("1+w*t+2w2*t^3") ==
        Val(1) + Val::monomial(Cyc::omega(), 1) +
            Val::monomial(Cyc(2) * Cyc::omega() * Cyc::omega(), 3));
  CHECK(parse_laurent("3-t") == Val(3) - Val::t());
}

TEST_CASE("laurent grammar reports position on errors") {
  CHECK_THROWS_AS(parse_laurent(""), ParseError);
  CHECK_THROWS_AS(parse_laurent("1+*t"), ParseError);
  CHECK_THROWS_AS(parse_laurent("q"), ParseError);
  try {
    parse_laurent("1+q", 3);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("points file parsing with comments") {
  auto pts = parse_points("# snowflake\n0\nt\n1\n\n1+t^2\n3\n3+t^3 # tail\n");
  REQUIRE(pts.size() == 6);
  CHECK(pts[1] == Val::t());
  CHECK(pts[3] == Val(1) + Val::t(2));
}

TEST_CASE("incidence CSV carries exact labels") {
  auto csv = incidence("burkhardt").csv();
  CHECK(csv.find(",u0001,") != std::string::npos);
  CHECK(csv.rfind("u1222") != std::string::npos);
  CHECK(csv.find("\nm0,") != std::string::npos);
  auto csv2 = incidence("segre").csv();
  CHECK(csv2.find(",z12,") != std::string::npos);
  CHECK(csv2.find(",z56") != std::string::npos);
}

TEST_CASE("arrangement and exponent JSON schemas") {
  auto a = arrangement("g32");
  auto j = arrangement_to_json(a);
  CHECK(j["name"] == "g32");
  CHECK(j["labels"].size() == 40);
  CHECK(j["matrix"].size() == 40);
  CHECK(j["matrix"][4][1] == "1+2*w");  // sqrt(-3) c1

  auto e = exponent_to_json(exponent_matrix("segre", arrangement("m0n6")));
  CHECK(e["labels"].size() == 15);
  CHECK(e["matrix"].size() == 15);
}

TEST_CASE("fan JSON round structure") {
  auto a = arrangement("m0n6");
  auto nc = nested_complex(matroid_of(a));
  auto pf = push_fan(nc, exponent_matrix("igusa", a));
  auto j = pushed_fan_to_json(pf);
  CHECK(j["rays"].size() == 25);
  CHECK(j["cones"].size() == 25 + 105 + 105);
  CHECK(j["covering"].size() == j["cones"].size());
  // multiplicity two on the last 105 entries (the triangles)
  CHECK(j["multiplicities"][j["multiplicities"].size() - 1] == "2");
  auto csv = fvector_csv(pf.image);
  CHECK(csv == "dim,count\n1,25\n2,105\n3,105\n");
}

TEST_CASE("tree and curve exports") {
  std::vector<Val> pts{Val(0), Val::t(), Val(1), Val(1) + Val::t(2),
                       Val(3), Val(3) + Val::t(3)};
  auto t = tree_from_nu(nu_from_points(pts));
  auto tj = tree_to_json(t);
  CHECK(tj["splits"].size() == 3);
  auto g = genus2_from_tree(t);
  auto gj = genus2_to_json(g);
  CHECK(gj["type"] == 7);
  CHECK(gj["lengths"].size() == 3);
  auto dot = g.dot();
  CHECK(dot.find("graph genus2") != std::string::npos);
  CHECK(dot.find("len=2") != std::string::npos);
}
