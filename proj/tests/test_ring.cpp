#include <doctest.h>

#include <random>

#include "charnum/ring.hpp"
#include "charnum/selfcheck/dense_oracle.hpp"
#include "charnum/selfcheck/segre_oracle.hpp"
#include "charnum/spaces.hpp"

using namespace charnum;

namespace {

// The moving-line bundle over the dual P^3 alone: generators a and l1.
RingSpec line_bundle_ring() {
  RingElement repl;
  repl.add_term(Monomial::of({{Gen::l1, 2}, {Gen::a, 1}}), -1);
  repl.add_term(Monomial::of({{Gen::l1, 1}, {Gen::a, 2}}), -1);
  repl.add_term(Monomial::of({{Gen::a, 3}}), -1);
  return RingSpec("line-bundle", {Gen::a, Gen::l1},
                  {RewriteRule{Gen::l1, 3, repl}, RewriteRule{Gen::a, 4, RingElement::zero()}}, 5,
                  Monomial::of({{Gen::a, 3}, {Gen::l1, 2}}));
}

RingElement random_element(const RingSpec& spec, std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  RingElement e;
  int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (Gen g : spec.generators()) {
      std::uniform_int_distribution<int> exp(0, spec.rule_for(g)->power + 1);
      if (int k = exp(rng); k > 0) m.mul_in(g, k);
    }
    e.add_term(m, Rational(coeff(rng)));
  }
  return e;
}

}  // namespace

TEST_CASE("monomial parsing and printing") {
  Monomial m = parse_monomial("a^3*l1^2*l3^9");
  CHECK(m.exponent(Gen::a) == 3);
  CHECK(m.exponent(Gen::l1) == 2);
  CHECK(m.exponent(Gen::l3) == 9);
  CHECK(m.total_degree() == 14);
  CHECK(m.str() == "a^3*l1^2*l3^9");
  CHECK(parse_monomial(" a ^ 2 * H1 ") == Monomial::of({{Gen::a, 2}, {Gen::H1, 1}}));
  CHECK(parse_monomial("1") == Monomial::unit());
  CHECK(parse_monomial("") == Monomial::unit());
  CHECK(parse_monomial("l1p^2").exponent(Gen::l1p) == 2);
  CHECK_THROWS_AS(parse_monomial("z^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("a^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial("a**2"), std::invalid_argument);
}

TEST_CASE("normalize applies the bundle relations") {
  RingSpec ring = line_bundle_ring();

  SUBCASE("one rule application then truncation") {
    RingElement e{Monomial::of({{Gen::l1, 3}, {Gen::a, 2}})};
    RingElement expected;
    expected.add_term(Monomial::of({{Gen::l1, 2}, {Gen::a, 3}}), -1);
    CHECK(normalize(e, ring) == expected);
  }
  SUBCASE("l1^4 collapses to zero") {
    RingElement e{Monomial::of({{Gen::l1, 4}})};
    CHECK(normalize(e, ring).is_zero());
    CHECK(selfcheck::dense_normal_form(ring, e).is_zero());
  }
  SUBCASE("a-truncation in a family ring") {
    RingSpec cubic = build_ring({Family::Cubic, 0, 0});
    RingElement e{Monomial::of({{Gen::a, 4}, {Gen::l3, 1}})};
    CHECK(normalize(e, cubic).is_zero());
  }
  SUBCASE("idempotence on the zero element") {
    CHECK(normalize(RingElement::zero(), ring).is_zero());
    CHECK(integrate(RingElement::zero(), ring) == 0);
  }
  SUBCASE("foreign generator is rejected") {
    RingElement e{Monomial::of({{Gen::H2, 1}})};
    CHECK_THROWS_AS(normalize(e, ring), std::invalid_argument);
  }
}

TEST_CASE("multiply matches hand expansion") {
  RingSpec conic = build_ring({Family::Conic, 1, 0});
  SUBCASE("binomial square, no rule fires") {
    RingElement sum = RingElement::gen(Gen::a) + RingElement::gen(Gen::B1);
    RingElement got = multiply(sum, sum, conic);
    RingElement expected;
    expected.add_term(Monomial::of({{Gen::a, 2}}), 1);
    expected.add_term(Monomial::of({{Gen::a, 1}, {Gen::B1, 1}}), 2);
    expected.add_term(Monomial::of({{Gen::B1, 2}}), 1);
    CHECK(got == expected);
  }
  SUBCASE("truncation kills the a-part") {
    RingSpec cubic = build_ring({Family::Cubic, 0, 0});
    RingElement lhs = RingElement::gen(Gen::l3) + Rational(3) * RingElement::gen(Gen::a);
    RingElement got = multiply(lhs, RingElement(Monomial::of({{Gen::a, 3}})), cubic);
    CHECK(got == RingElement(Monomial::of({{Gen::l3, 1}, {Gen::a, 3}})));
  }
  SUBCASE("normal form keeps the line exponent below 3") {
    RingSpec ring = line_bundle_ring();
    RingElement base = RingElement::gen(Gen::l1) + RingElement::gen(Gen::a);
    RingElement e = multiply(multiply(base, base, ring),
                             RingElement(Monomial::of({{Gen::l1, 2}})), ring);
    for (const auto& [m, c] : e.terms()) CHECK(m.exponent(Gen::l1) <= 2);
    CHECK(e == selfcheck::dense_normal_form(ring, expand(expand(base, base),
                                                         RingElement(Monomial::of({{Gen::l1, 2}})))));
  }
}

TEST_CASE("integrate reads the fundamental coefficient") {
  RingSpec ring = line_bundle_ring();
  CHECK(integrate(RingElement(Monomial::of({{Gen::a, 3}, {Gen::l1, 2}})), ring) == 1);
  CHECK(integrate(RingElement(Monomial::of({{Gen::l1, 3}, {Gen::a, 2}})), ring) == -1);
  CHECK(integrate(RingElement(Monomial::of({{Gen::l1, 5}})), ring) == 0);

  SUBCASE("pushforward oracle agrees") {
    auto segre = selfcheck::segre_integrate(ring, Monomial::of({{Gen::l1, 5}}));
    REQUIRE(segre.has_value());
    CHECK(*segre == 0);
    segre = selfcheck::segre_integrate(ring, Monomial::of({{Gen::l1, 3}, {Gen::a, 2}}));
    REQUIRE(segre.has_value());
    CHECK(*segre == -1);
  }
  SUBCASE("linearity") {
    RingElement e1{Monomial::of({{Gen::a, 3}, {Gen::l1, 2}})};
    RingElement e2{Monomial::of({{Gen::l1, 3}, {Gen::a, 2}})};
    CHECK(integrate(Rational(5) * e1 + Rational(-7) * e2, ring) ==
          5 * integrate(e1, ring) - 7 * integrate(e2, ring));
  }
}

TEST_CASE("substitute rewrites one letter and reduces in the target") {
  RingSpec conic = build_ring({Family::Conic, 0, 0});
  RingElement sum = RingElement::gen(Gen::l1) + RingElement::gen(Gen::l2);

  SUBCASE("binomial") {
    RingElement e{Monomial::of({{Gen::l3, 2}})};
    RingElement expected;
    expected.add_term(Monomial::of({{Gen::l1, 2}}), 1);
    expected.add_term(Monomial::of({{Gen::l1, 1}, {Gen::l2, 1}}), 2);
    expected.add_term(Monomial::of({{Gen::l2, 2}}), 1);
    CHECK(substitute(e, Gen::l3, sum, conic) == expected);
  }
  SUBCASE("untouched letters carry through") {
    RingSpec lines = build_ring({Family::ThreeLines, 0, 0});
    RingElement repl = RingElement::gen(Gen::l1) + RingElement::gen(Gen::l1p) +
                       RingElement::gen(Gen::l1pp);
    RingElement e{Monomial::of({{Gen::l3, 1}, {Gen::a, 3}})};
    RingElement got = substitute(e, Gen::l3, repl, lines);
    RingElement expected;
    expected.add_term(Monomial::of({{Gen::l1, 1}, {Gen::a, 3}}), 1);
    expected.add_term(Monomial::of({{Gen::l1p, 1}, {Gen::a, 3}}), 1);
    expected.add_term(Monomial::of({{Gen::l1pp, 1}, {Gen::a, 3}}), 1);
    CHECK(got == expected);
  }
  SUBCASE("high power agrees with the dense oracle") {
    RingElement e{Monomial::of({{Gen::l3, 6}, {Gen::a, 3}})};
    RingElement got = substitute(e, Gen::l3, sum, conic);
    RingElement raw;
    for (int k = 0; k <= 6; ++k) {
      // binomial expansion of (l1+l2)^6 * a^3
      long binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (6 - i) / (i + 1);
      raw.add_term(Monomial::of({{Gen::l1, k}, {Gen::l2, 6 - k}, {Gen::a, 3}}), Rational(binom));
    }
    CHECK(got == selfcheck::dense_normal_form(conic, raw));
  }
  SUBCASE("replacement must be degree one and free of the letter") {
    RingElement bad_degree{Monomial::of({{Gen::l1, 2}})};
    CHECK_THROWS_AS(substitute(RingElement::gen(Gen::l3), Gen::l3, bad_degree, conic),
                    std::invalid_argument);
    RingElement self_ref = RingElement::gen(Gen::l3);
    CHECK_THROWS_AS(substitute(RingElement::gen(Gen::l3), Gen::l3, self_ref, conic),
                    std::invalid_argument);
  }
}

TEST_CASE("normalize is idempotent and degree-preserving on random elements") {
  std::mt19937 rng(421);
  for (const SpaceKind kind : {SpaceKind{Family::Cubic, 1, 4}, SpaceKind{Family::Conic, 1, 3},
                               SpaceKind{Family::ThreeLines, 1, 4}}) {
    RingSpec spec = build_ring(kind);
    for (int i = 0; i < 1000; ++i) {
      RingElement e = random_element(spec, rng);
      RingElement nf = normalize(e, spec);
      CHECK(normalize(nf, spec) == nf);
      int before = 0, after = 0;
      if (e.is_homogeneous(&before) && nf.is_homogeneous(&after) && !nf.is_zero()) {
        CHECK(before == after);
      }
    }
  }
}

TEST_CASE("ring operations are commutative and associative") {
  std::mt19937 rng(422);
  RingSpec spec = build_ring({Family::Conic, 1, 2});
  for (int i = 0; i < 200; ++i) {
    RingElement a = random_element(spec, rng, 4);
    RingElement b = random_element(spec, rng, 4);
    RingElement c = random_element(spec, rng, 4);
    CHECK(a + b == b + a);
    CHECK(multiply(a, b, spec) == multiply(b, a, spec));
    CHECK(multiply(multiply(a, b, spec), c, spec) == multiply(a, multiply(b, c, spec), spec));
  }
}

TEST_CASE("pairing helper equals integrate of the product") {
  std::mt19937 rng(423);
  RingSpec spec = build_ring({Family::Conic, 1, 2});
  RingElement fixed = random_element(spec, rng, 10);
  IntersectionPairing pairing(spec, fixed);
  for (int i = 0; i < 200; ++i) {
    RingElement e = random_element(spec, rng, 5);
    CHECK(pairing.against(e) == integrate(multiply(fixed, e, spec), spec));
  }
}

TEST_CASE("integrate agrees with the dense oracle on random monomials") {
  std::mt19937 rng(424);
  RingSpec spec = build_ring({Family::Cubic, 1, 2});
  for (int i = 0; i < 300; ++i) {
    Monomial m;
    for (Gen g : spec.generators()) {
      std::uniform_int_distribution<int> exp(0, spec.rule_for(g)->power + 2);
      if (int k = exp(rng); k > 0) m.mul_in(g, k);
    }
    RingElement e{m};
    CHECK(integrate(e, spec) == selfcheck::dense_integrate(spec, e));
  }
}

TEST_CASE("integrals vanish unless every point class carries its top power") {
  std::mt19937 rng(425);
  RingSpec spec = build_ring({Family::Conic, 1, 2});
  int mismatched = 0;
  for (int i = 0; i < 500; ++i) {
    Monomial m;
    for (Gen g : spec.generators()) {
      std::uniform_int_distribution<int> exp(0, spec.rule_for(g)->power + 2);
      if (int k = exp(rng); k > 0) m.mul_in(g, k);
    }
    bool tops_match = true;
    for (Gen g : {Gen::B1, Gen::H1, Gen::H2}) {
      if (m.exponent(g) != spec.fundamental().exponent(g)) tops_match = false;
    }
    if (tops_match) continue;
    ++mismatched;
    CHECK(integrate(RingElement(m), spec) == 0);
  }
  CHECK(mismatched > 300);
}
