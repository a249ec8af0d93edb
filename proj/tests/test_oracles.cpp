#include <doctest.h>

#include "charnum/selfcheck/binary_forms.hpp"
#include "charnum/selfcheck/dense_oracle.hpp"
#include "charnum/selfcheck/segre_oracle.hpp"
#include "charnum/spaces.hpp"

using namespace charnum;
using namespace charnum::selfcheck;

TEST_CASE("polynomial helpers") {
  Poly p({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  Poly q({Rational(1), Rational(1)});                // x + 1
  CHECK(p.degree() == 2);
  CHECK((p * q).degree() == 3);
  CHECK(p.remainder(q).is_zero());
  CHECK(Poly::gcd(p, q).degree() == 1);
  CHECK(p.exact_quotient(q).degree() == 1);
  CHECK_THROWS_AS(q.exact_quotient(p), std::invalid_argument);
  CHECK(p.derivative().degree() == 1);
  // (x-1)^2 (x+2) has two distinct roots
  Poly sq = Poly({Rational(-1), Rational(1)}) * Poly({Rational(-1), Rational(1)}) *
            Poly({Rational(2), Rational(1)});
  CHECK(sq.distinct_root_count() == 2);
}

TEST_CASE("pencil tangency oracle matches the closed form") {
  CHECK(pencil_tangency_count(2, 901) == 2);
  CHECK(pencil_tangency_count(3, 902) == 4);
  CHECK(pencil_tangency_count(4, 903) == 6);
}

TEST_CASE("triple-root oracle matches the closed form") {
  CHECK(triple_root_net_count(3, 911) == 3);
  CHECK(triple_root_net_count(4, 912) == 6);
}

TEST_CASE("fixed-point tangency is a rank-two condition") {
  for (unsigned i = 0; i < 20; ++i) {
    CHECK(unique_fixed_point_tangent(3, 921 + i));
  }
}

TEST_CASE("pushforward oracle agrees with the dense oracle on bundle rings") {
  RingSpec spec = build_ring({Family::Conic, 0, 0});
  for (int e1 = 0; e1 <= 5; ++e1) {
    for (int e2 = 0; e2 <= 8; ++e2) {
      for (int l = 0; l <= 4; ++l) {
        Monomial m = Monomial::of({{Gen::l1, e1}, {Gen::l2, e2}, {Gen::a, l}});
        auto segre = segre_integrate(spec, m);
        REQUIRE(segre.has_value());
        CHECK(*segre == dense_integrate(spec, RingElement(m)));
      }
    }
  }
}
