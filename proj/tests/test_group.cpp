#include <numeric>

#include "doctest.h"
#include "qqg/group.hpp"

using namespace qqg;

TEST_CASE("element reduction") {
  CHECK(element(AbGroup(2, 2), 3, 5) == (GroupElement{1, 1}));
  CHECK(element(AbGroup(2, 4), 0, 0).is_identity());
  CHECK(element(AbGroup(1, 6), 7, 7) == (GroupElement{0, 1}));
}

TEST_CASE("group literals") {
  CHECK(AbGroup::parse("Z2xZ4") == AbGroup(2, 4));
  CHECK(AbGroup::parse("Z9") == AbGroup(1, 9));
  CHECK(AbGroup::parse("Z2xZ4").str() == "Z2xZ4");
  CHECK_THROWS_AS(AbGroup::parse("Z4xZ2"), Error);  // invariant factors
}

TEST_CASE("generates by closure enumeration") {
  AbGroup z22(2, 2);
  CHECK(generates(z22, element(z22, 1, 0), element(z22, 0, 1)));
  CHECK_FALSE(generates(z22, element(z22, 1, 1), element(z22, 1, 1)));
  AbGroup z24(2, 4);
  CHECK(generates(z24, element(z24, 1, 1), element(z24, 0, 1)));
}

TEST_CASE("dual exponents solve the defining products") {
  AbGroup z24(2, 4);
  SUBCASE("standard pair") {
    auto d = dual_exponents(z24, element(z24, 1, 0), element(z24, 0, 1));
    CHECK(d.s1 == 1);
    CHECK(d.s2 == 0);
    CHECK(d.t1 == 0);
    CHECK(d.t2 == 1);
  }
  SUBCASE("skew pair") {
    auto d = dual_exponents(z24, element(z24, 1, 1), element(z24, 0, 1));
    CHECK(d.s1 == 1);
    CHECK(d.s2 == 3);
    CHECK(d.t1 == 0);
    CHECK(d.t2 == 1);
  }
  SUBCASE("cyclic groups force s1 = 0") {
    AbGroup z9(1, 9);
    GroupElement h1 = element(z9, 0, 2), h2 = element(z9, 0, 5);
    auto d = dual_exponents(z9, h1, h2);
    CHECK(d.s1 == 0);
    CHECK((d.t1 * 2 + d.t2 * 5) % 9 == 1);
  }
  SUBCASE("non-generating pair is rejected") {
    CHECK_THROWS_AS(dual_exponents(z24, element(z24, 0, 2), element(z24, 0, 2)), Error);
  }
}

TEST_CASE("dual exponents satisfy both matrix congruences at desk scale") {
  // every group of order <= 64 with every generating pair
  for (long m : {1L, 2L, 3L, 4L}) {
    for (long n = m; m * n <= 64; n += m) {
      if (n % m != 0) continue;
      AbGroup g(m, n);
      auto elems = all_elements(g);
      for (const auto& h1 : elems)
        for (const auto& h2 : elems) {
          if (!generates(g, h1, h2)) continue;
          auto d = dual_exponents(g, h1, h2);
          // defining products
          CHECK(mul(g, pow(g, h1, d.s1), pow(g, h2, d.s2)) == element(g, 1, 0));
          CHECK(mul(g, pow(g, h1, d.t1), pow(g, h2, d.t2)) == element(g, 0, 1));
          // reversed product congruence, all four entries mod m
          long a1 = h1.e1, a2 = h1.e2, b1 = h2.e1, b2 = h2.e2;
          CHECK((d.s1 * a1 + d.t1 * a2) % m == 1 % m);
          CHECK((d.s1 * b1 + d.t1 * b2) % m == 0);
          CHECK((d.s2 * a1 + d.t2 * a2) % m == 0);
          CHECK((d.s2 * b1 + d.t2 * b2) % m == 1 % m);
        }
    }
  }
}

TEST_CASE("cyclic standardization") {
  AbGroup z6(1, 6);
  auto r = standardize_cyclic(z6, element(z6, 0, 2), element(z6, 0, 3));
  CHECK(r.s == 2);
  CHECK(r.t == 3);
  CHECK(pow(z6, r.gen, r.s) == element(z6, 0, 2));
  CHECK(pow(z6, r.gen, r.t) == element(z6, 0, 3));

  AbGroup z4(1, 4);
  CHECK_THROWS_AS(standardize_cyclic(z4, element(z4, 0, 2), element(z4, 0, 2)), Error);
  AbGroup z9(1, 9);
  CHECK_THROWS_AS(standardize_cyclic(z9, element(z9, 0, 3), element(z9, 0, 6)), Error);
  CHECK_THROWS_AS(standardize_cyclic(AbGroup(2, 2), element(AbGroup(2, 2), 1, 0),
                                     element(AbGroup(2, 2), 0, 1)),
                  Error);

  // gcd(s, t) = 1 and exact regeneration on every generating pair of Z_12
  AbGroup z12(1, 12);
  auto elems = all_elements(z12);
  for (const auto& h1 : elems)
    for (const auto& h2 : elems) {
      if (!generates(z12, h1, h2)) continue;
      auto f = standardize_cyclic(z12, h1, h2);
      CHECK(std::gcd(f.s, f.t) == 1);
      CHECK(pow(z12, f.gen, f.s) == h1);
      CHECK(pow(z12, f.gen, f.t) == h2);
    }
}

TEST_CASE("pair standardization") {
  AbGroup z22(2, 2);
  // every generating pair of Z2 x Z2 is itself standard
  auto elems = all_elements(z22);
  for (const auto& h1 : elems)
    for (const auto& h2 : elems) {
      if (!generates(z22, h1, h2)) continue;
      auto rep = standardize_pair(z22, h1, h2);
      CHECK(rep.kind == StandardizeReport::Kind::OrderN);
      CHECK(rep.a == 0);
      CHECK(rep.u == h1);
      CHECK(rep.v == h2);
    }

  AbGroup z24(2, 4);
  auto rep = standardize_pair(z24, element(z24, 1, 1), element(z24, 0, 1));
  CHECK(rep.kind == StandardizeReport::Kind::OrderN);
  CHECK(rep.a == 1);
  CHECK(mul(z24, rep.u, pow(z24, rep.v, rep.a)) == element(z24, 1, 1));
  CHECK(rep.v == element(z24, 0, 1));

  CHECK_THROWS_AS(standardize_pair(z24, element(z24, 1, 1), element(z24, 0, 0)), Error);
}

TEST_CASE("pair standardization split branch") {
  // in Z2 x Z4 pick a generating pair whose second member has order < 4
  AbGroup z24(2, 4);
  GroupElement h1 = element(z24, 0, 1), h2 = element(z24, 1, 0);  // ord(h2) = 2
  REQUIRE(generates(z24, h1, h2));
  auto rep = standardize_pair(z24, h1, h2);
  CHECK(rep.kind == StandardizeReport::Kind::Split);
  CHECK(rep.m1 * rep.n1 == 2);
  CHECK(rep.m2 * rep.n2 == 4);
  CHECK(rep.m2 % rep.m1 == 0);
  CHECK(rep.n2 % rep.n1 == 0);
  CHECK(std::gcd(rep.m2, rep.n2) == 1);
  // the displayed equations hold
  CHECK(mul(z24, rep.q2, mul(z24, rep.w1, pow(z24, rep.w2, rep.a))) == h1);
  CHECK(mul(z24, rep.q1, mul(z24, pow(z24, rep.q2, rep.b), rep.w2)) == h2);
}
