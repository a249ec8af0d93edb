#include <doctest.h>

#include <array>
#include <thread>

#include "charnum/fbcubic.hpp"
#include "charnum/planar.hpp"

using namespace charnum;
using namespace charnum::fbcubic;

namespace {

Solver& solver() {
  static Solver s;
  return s;
}

}  // namespace

TEST_CASE("generated equations have consistent support") {
  Solver& s = solver();
  const auto& eqs = s.equations();
  CHECK(eqs.size() > 1000);
  for (const auto& eq : eqs) {
    CHECK(eq.source.lambda3_exponent() >= 0);
    CHECK(!eq.lhs.empty());
    for (const auto& [idx, c] : eq.lhs) {
      CHECK(c != 0);
      CHECK(idx.lambda3_exponent() >= 0);
      CHECK(idx.lambda3_exponent() <= 9);
      CHECK(idx.m <= 2);
      CHECK(idx.l <= 3);
      CHECK(idx.n1 <= 3);
      CHECK(idx.n2 <= 3);
      CHECK(idx.n3 <= 3);
      CHECK(idx.n4 <= 3);
    }
  }
}

TEST_CASE("the all-threes equation survives only on the vanishing-free slice") {
  Solver& s = solver();
  const LinearEquation* found = nullptr;
  for (const auto& eq : s.equations()) {
    if (eq.source == conics::TIndex{0, 3, 3, 3, 1, 3}) {
      found = &eq;
      break;
    }
  }
  REQUIRE(found != nullptr);
  std::map<PhiIndex, Rational> surviving;
  for (const auto& [idx, c] : found->lhs) {
    if (idx.n4 == 3) surviving.emplace(idx, c);
  }
  CHECK(surviving.size() == 2);
  CHECK(surviving.at(PhiIndex{1, 3, 3, 3, 3, 3}) == 3);
  CHECK(surviving.at(PhiIndex{0, 3, 3, 3, 3, 3}) == 1);
}

TEST_CASE("descent seed identity from the weighted instances") {
  Solver& s = solver();
  conics::Evaluator& conic = s.conic_evaluator();
  for (int l : {0, 1}) {
    Rational expected = conic.eval_T({0, 3, 3, 3, 1, l}) -
                        Rational(3) * conic.eval_T({0, 3, 3, 3, 2, l}) +
                        Rational(9) * conic.eval_T({0, 3, 3, 3, 3, l});
    CHECK(s.phi(PhiIndex{0, 3, 3, 3, 3, l}) == expected);
  }
}

TEST_CASE("vanishing and symmetry of the solved pairings") {
  Solver& s = solver();
  CHECK(s.phi(PhiIndex{0, 1, 2, 3, 2, 1}) == 0);
  CHECK(s.phi(PhiIndex{1, 3, 3, 3, 1, 0}) == 0);
  CHECK(s.phi(PhiIndex{1, 2, 3, 3, 3, 1}) == s.phi(PhiIndex{1, 3, 2, 3, 3, 1}));
  CHECK(s.phi(PhiIndex{0, 1, 0, 3, 3, 2}) == s.phi(PhiIndex{0, 3, 0, 1, 3, 2}));
  for (const auto& [idx, value] : s.phi_table()) {
    CHECK(idx.n4 == 3);
    CHECK(idx.is_unknown());
  }
}

TEST_CASE("chain values collapse linearly through the ring rules") {
  Solver& s = solver();
  CHECK(s.chain_A1F(1, 2, 3) == 0);  // degree mismatch
  // l1^3 reduces to -(l1^2 a + l1 a^2 + a^3); the a^4-truncated terms drop.
  RingElement high(Monomial::of({{Gen::l1, 3}, {Gen::l3, 8}, {Gen::a, 2}}));
  CHECK(s.chain_of(high) == -s.chain_A1F(2, 8, 3));
  CHECK_THROWS_AS(s.chain_of(RingElement(Monomial::of({{Gen::H1, 13}}))),
                  std::invalid_argument);
}

TEST_CASE("solved pairing regressions") {
  Solver& s = solver();
  CHECK(s.phi(PhiIndex{2, 0, 0, 0, 3, 3}) == 72);
  CHECK(s.phi(PhiIndex{2, 0, 0, 0, 3, 2}) == -648);
  CHECK(s.phi(PhiIndex{1, 0, 0, 0, 3, 3}) == 0);
  CHECK(s.chain_A1F(2, 8, 3) == 12);
  CHECK(s.chain_A1F(1, 9, 3) == 0);
  CHECK(s.chain_A1F(2, 9, 2) == -108);
}

TEST_CASE("characteristic numbers of nodal planar cubics") {
  Solver& s = solver();
  CHECK(s.characteristic_number(11, 0) == 12960);
  CHECK(s.characteristic_number(9, 1) == 1392);
  CHECK(s.characteristic_number(7, 2) == 144);
  CHECK(s.characteristic_number(5, 3) == 12);
}

TEST_CASE("characteristic numbers vanish off the admissible conditions") {
  Solver& s = solver();
  CHECK(s.characteristic_number(3, 4) == 0);
  CHECK(s.characteristic_number(1, 5) == 0);
  CHECK(s.characteristic_number(11, 1) == 0);
  CHECK(s.characteristic_number(0, 0) == 0);
  CHECK_THROWS_AS(s.characteristic_number(-1, 6), std::invalid_argument);
}

TEST_CASE("chain denominators divide six") {
  Solver& s = solver();
  for (int m = 0; m <= 2; ++m) {
    for (int l = 0; l <= 3; ++l) {
      int j = 13 - m - l;
      if (j < 0 || j > 9) continue;
      Rational v = s.chain_A1F(m, j, l);
      CHECK(Rational(6 * v).get_den() == 1);
    }
  }
}

TEST_CASE("family count matches the fixed-plane count when the plane is pinned") {
  Solver& s = solver();
  CHECK(s.characteristic_number(5, 3) == planar::count(planar::Invariant::A1, 3));
}

TEST_CASE("recursion variant diagnostic runs") {
  Solver& s = solver();
  RecursionVariantReport report = s.check_recursion_variant();
  CHECK(report.instances > 0);
  CHECK(report.matches + report.mismatches == report.instances);
}

TEST_CASE("linear solve flags degenerate systems") {
  const PhiIndex u{0, 3, 3, 3, 3, 0};
  const PhiIndex v{0, 3, 3, 2, 3, 0};

  SUBCASE("a small consistent system solves") {
    std::vector<LinearEquation> eqs;
    eqs.push_back({{{u, Rational(1)}, {v, Rational(1)}}, Rational(5), {}});
    eqs.push_back({{{u, Rational(1)}, {v, Rational(-1)}}, Rational(1), {}});
    auto sol = solve_linear_system(eqs);
    CHECK(sol.at(u) == 3);
    CHECK(sol.at(v) == 2);
  }
  SUBCASE("inconsistency is an error") {
    std::vector<LinearEquation> eqs;
    eqs.push_back({{{u, Rational(1)}}, Rational(1), {}});
    eqs.push_back({{{u, Rational(2)}}, Rational(3), {}});
    CHECK_THROWS_AS(solve_linear_system(eqs), consistency_error);
  }
  SUBCASE("an underdetermined pair is an error") {
    std::vector<LinearEquation> eqs;
    eqs.push_back({{{u, Rational(1)}, {v, Rational(1)}}, Rational(5), {}});
    eqs.push_back({{{u, Rational(2)}, {v, Rational(2)}}, Rational(10), {}});
    CHECK_THROWS_AS(solve_linear_system(eqs), consistency_error);
  }
}

TEST_CASE("concurrent reads of the solved tables agree") {
  Solver& s = solver();
  s.phi_table();  // complete the solve before sharing
  conics::Evaluator& conic = s.conic_evaluator();
  std::array<Rational, 4> results;
  std::array<std::thread, 4> workers;
  for (int t = 0; t < 4; ++t) {
    workers[static_cast<std::size_t>(t)] = std::thread([&, t] {
      Rational acc(0);
      for (int n1 = 0; n1 <= 3; ++n1) {
        for (int l = 0; l <= 3; ++l) {
          acc += conic.eval_T({t % 3, n1, 1, 2, 3, l});
          acc += s.phi(PhiIndex{t % 3, n1, 0, 0, 3, l});
        }
      }
      results[static_cast<std::size_t>(t)] = acc;
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 4; ++t) {
    Rational expected(0);
    for (int n1 = 0; n1 <= 3; ++n1) {
      for (int l = 0; l <= 3; ++l) {
        expected += conic.eval_T({t % 3, n1, 1, 2, 3, l});
        expected += s.phi(PhiIndex{t % 3, n1, 0, 0, 3, l});
      }
    }
    CHECK(results[static_cast<std::size_t>(t)] == expected);
  }
}
