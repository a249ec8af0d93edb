#include <doctest.h>

#include <random>

#include "charnum/selfcheck/dense_oracle.hpp"
#include "charnum/spaces.hpp"

using namespace charnum;

TEST_CASE("family ring shapes") {
  SUBCASE("cubic family") {
    RingSpec spec = build_ring({Family::Cubic, 1, 4});
    CHECK(spec.dimension() == 29);
    CHECK(spec.fundamental() ==
          parse_monomial("a^3*l1^2*l3^9*B1^3*H1^3*H2^3*H3^3*H4^3"));
    CHECK(integrate(RingElement(spec.fundamental()), spec) == 1);
  }
  SUBCASE("conic family") {
    RingSpec spec = build_ring({Family::Conic, 1, 3});
    CHECK(spec.dimension() == 22);
    CHECK(spec.fundamental() == parse_monomial("a^3*l1^2*l2^5*B1^3*H1^3*H2^3*H3^3"));
    CHECK(integrate(RingElement(spec.fundamental()), spec) == 1);
  }
  SUBCASE("three-lines family") {
    RingSpec spec = build_ring({Family::ThreeLines, 1, 4});
    CHECK(spec.dimension() == 24);
    CHECK(spec.fundamental() ==
          parse_monomial("a^3*l1^2*l1p^2*l1pp^2*B1^3*H1^3*H2^3*H3^3*H4^3"));
    CHECK(integrate(RingElement(spec.fundamental()), spec) == 1);
  }
  SUBCASE("larger shapes are rejected") {
    CHECK_THROWS_AS(build_ring({Family::Cubic, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_ring({Family::Cubic, 0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(build_ring({Family::Conic, -1, 0}), std::invalid_argument);
  }
}

TEST_CASE("incidence and diagonal classes") {
  CHECK(plane_incidence(Gen::H1) == RingElement::gen(Gen::a) + RingElement::gen(Gen::H1));
  CHECK(plane_incidence(Gen::B1) == RingElement::gen(Gen::a) + RingElement::gen(Gen::B1));
  CHECK(line_incidence(Gen::H2) == RingElement::gen(Gen::l1) + RingElement::gen(Gen::H2));
  CHECK(curve_incidence(3, Gen::H4) ==
        RingElement::gen(Gen::l3) + Rational(3) * RingElement::gen(Gen::H4));
  CHECK(curve_incidence(2, Gen::B1) ==
        RingElement::gen(Gen::l2) + Rational(2) * RingElement::gen(Gen::B1));

  RingElement d12 = diagonal(Gen::H1, Gen::H2);
  CHECK(d12.coefficient(parse_monomial("H1^3")) == 1);
  CHECK(d12.coefficient(parse_monomial("H1^2*H2")) == 1);
  CHECK(d12.coefficient(parse_monomial("H1*H2^2")) == 1);
  CHECK(d12.coefficient(parse_monomial("H2^3")) == 1);
  CHECK(d12 == diagonal(Gen::H2, Gen::H1));
  CHECK(diagonal(Gen::H1, Gen::B1).coefficient(parse_monomial("H1^2*B1")) == 1);
  CHECK(diagonal(Gen::H3, Gen::H4).coefficient(parse_monomial("H3^2*H4")) == 1);

  CHECK_THROWS_AS(diagonal(Gen::H1, Gen::H1), std::invalid_argument);
  CHECK_THROWS_AS(diagonal(Gen::l1, Gen::H1), std::invalid_argument);
  CHECK_THROWS_AS(plane_incidence(Gen::l3), std::invalid_argument);
  CHECK_THROWS_AS(curve_incidence(4, Gen::H1), std::invalid_argument);
}

TEST_CASE("ambient constraint classes") {
  P3ConstraintClasses classes = p3_constraint_classes();
  CHECK(classes.cubic_meets_line ==
        RingElement::gen(Gen::l3) + Rational(3) * RingElement::gen(Gen::a));
  CHECK(classes.cubic_meets_point == RingElement(parse_monomial("l3*a")));
  CHECK(classes.line_meets_line == RingElement::gen(Gen::l1) + RingElement::gen(Gen::a));
  CHECK(classes.line_meets_point == RingElement(parse_monomial("l1*a")));
}

TEST_CASE("moving-plane locus class pairs like the dense oracle") {
  RingSpec spec = build_ring({Family::Cubic, 1, 1});
  RingElement locus = multiply(plane_incidence(Gen::B1), plane_incidence(Gen::H1), spec);
  std::mt19937 rng(77);
  for (int i = 0; i < 40; ++i) {
    Monomial m;
    for (Gen g : spec.generators()) {
      std::uniform_int_distribution<int> exp(0, spec.rule_for(g)->power);
      if (int k = exp(rng); k > 0) m.mul_in(g, k);
    }
    RingElement paired = expand(locus, RingElement(m));
    CHECK(integrate(paired, spec) == selfcheck::dense_integrate(spec, paired));
  }
}

TEST_CASE("top-degree integrals vanish off the fundamental monomial") {
  RingSpec spec = build_ring({Family::Conic, 0, 1});
  // Degree-top monomials that are not in normal form must reduce away from
  // the fundamental or die; spot-check a few.
  CHECK(integrate(RingElement(parse_monomial("a^3*l1^2*l2^4*H1^4")), spec) == 0);
  CHECK(integrate(RingElement(parse_monomial("l1^3*a^2*l2^5*H1^3")), spec) == -1);
}
