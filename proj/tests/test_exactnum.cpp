#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "tropmoduli/cyclotomic.hpp"
#include "tropmoduli/laurent.hpp"

using namespace tropmoduli;

TEST_CASE("omega cubes to one and satisfies the cyclotomic relation") {
  Cyc w = Cyc::omega();
  CHECK(w * w * w == Cyc(1));
  CHECK(Cyc(1) + w + w * w == Cyc(0));
}

TEST_CASE("2w+1 squares to -3") {
  Cyc s = Cyc::sqrt_minus3();
  CHECK(s * s == Cyc(-3));
}

TEST_CASE("zeta5 has order five") {
  Cyc g = Cyc::zeta(5);
  Cyc p = g;
  for (int i = 0; i < 4; ++i) p = p * g;
  CHECK(p == Cyc(1));
  CHECK(Cyc(1) + g + g * g + g * g * g + g * g * g * g == Cyc(0));
}

TEST_CASE("mixing orders 3 and 5 is rejected") {
  CHECK_THROWS_AS(Cyc::omega() + Cyc::zeta(5), IncompatibleOrders);
  CHECK_NOTHROW(Cyc(Rat(2, 3)) * Cyc::zeta(5));
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Cyc(1) / Cyc(0), DivisionByZero);
  CHECK_THROWS_AS(Val(1) / Val(), DivisionByZero);
}

static Cyc random_cyc(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  Cyc z = Cyc::zeta(order);
  Cyc acc(0), p(1);
  int d = order == 1 ? 1 : (order == 3 ? 2 : 4);
  for (int i = 0; i < d; ++i) {
    acc += Cyc(Rat(num(rng), den(rng))) * p;
    p = p * z;
  }
  return acc;
}

TEST_CASE("field axioms hold on random cyclotomic triples") {
  std::mt19937_64 rng(20240517);
  for (int order : {1, 3, 5}) {
    for (int trial = 0; trial < 200; ++trial) {
      Cyc a = random_cyc(rng, order), b = random_cyc(rng, order),
          c = random_cyc(rng, order);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) {
        CHECK(a * a.inv() == Cyc(1));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("laurent monomial arithmetic") {
  CHECK(Val::t(1) * Val::t(2) == Val::t(3));
  Val one_plus_t = Val(1) + Val::t();
  CHECK(one_plus_t - Val(1) == Val::t());
  CHECK(*(one_plus_t - Val(1)).valuation() == 1);
  CHECK_FALSE((Val::t() - Val::t()).valuation().has_value());
}

TEST_CASE("valuation of simple polynomials") {
  Val v = Val::monomial(Cyc(3), 2) + Val::t(5);
  CHECK(*v.valuation() == 2);
  Val prod = (Val(1) + Val::t()) * (Val(1) - Val::t());
  CHECK(prod == Val(1) - Val::t(2));
  CHECK(*prod.valuation() == 0);
}

TEST_CASE("exact laurent division") {
  Val a = (Val(1) + Val::t()) * (Val(2) + Val::t(3));
  CHECK(a / (Val(1) + Val::t()) == Val(2) + Val::t(3));
  CHECK_THROWS_AS((Val(1) + Val::t()) / (Val(1) + Val::t(2)), NonPolynomialQuotient);
  // monomial divisor: always exact
  Val b = Val::monomial(Cyc::omega(), -2);
  CHECK((a * b) / b == a);
}

static Val random_val(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 5), num(-5, 5);
  Val v;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    v += Val::monomial(Cyc(num(rng)) + Cyc(num(rng)) * Cyc::omega(), expo(rng));
  return v;
}

TEST_CASE("valuation is multiplicative and ultrametric on random pairs") {
  std::mt19937_64 rng(987654321);
  int checked_eq = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Val a = random_val(rng), b = random_val(rng);
    Val p = a * b, s = a + b;
    if (!a.is_zero() && !b.is_zero()) {
      REQUIRE(*p.valuation() == *a.valuation() + *b.valuation());
    } else {
      CHECK(p.is_zero());
    }
    auto va = a.valuation(), vb = b.valuation(), vs = s.valuation();
    if (va && vb) {
      long mn = std::min(*va, *vb);
      if (vs) CHECK(*vs >= mn);
      if (*va != *vb) {
        REQUIRE(vs.has_value());
        CHECK(*vs == mn);
        ++checked_eq;
      }
    }
  }
  CHECK(checked_eq > 100);
}
