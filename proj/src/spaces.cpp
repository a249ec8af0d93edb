#include "charnum/spaces.hpp"

#include <stdexcept>
#include <string>

namespace charnum {

namespace {

RewriteRule truncation(Gen g, int p) { return RewriteRule{g, p, RingElement::zero()}; }

// hyperplane class of a lines-in-planes bundle: g^3 = -g^2 a - g a^2 - a^3
RewriteRule line_bundle_rule(Gen g) {
  RingElement repl;
  repl.add_term(Monomial::of({{g, 2}, {Gen::a, 1}}), -1);
  repl.add_term(Monomial::of({{g, 1}, {Gen::a, 2}}), -1);
  repl.add_term(Monomial::of({{Gen::a, 3}}), -1);
  return RewriteRule{g, 3, repl};
}

// l2^6 = -4 l2^5 a - 10 l2^4 a^2 - 20 l2^3 a^3
RewriteRule conic_bundle_rule() {
  RingElement repl;
  repl.add_term(Monomial::of({{Gen::l2, 5}, {Gen::a, 1}}), -4);
  repl.add_term(Monomial::of({{Gen::l2, 4}, {Gen::a, 2}}), -10);
  repl.add_term(Monomial::of({{Gen::l2, 3}, {Gen::a, 3}}), -20);
  return RewriteRule{Gen::l2, 6, repl};
}

// l3^10 = -10 l3^9 a - 55 l3^8 a^2 - 220 l3^7 a^3
RewriteRule cubic_bundle_rule() {
  RingElement repl;
  repl.add_term(Monomial::of({{Gen::l3, 9}, {Gen::a, 1}}), -10);
  repl.add_term(Monomial::of({{Gen::l3, 8}, {Gen::a, 2}}), -55);
  repl.add_term(Monomial::of({{Gen::l3, 7}, {Gen::a, 3}}), -220);
  return RewriteRule{Gen::l3, 10, repl};
}

}  // namespace

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "cubic") return Family::Cubic;
  if (name == "conic") return Family::Conic;
  if (name == "three-lines") return Family::ThreeLines;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cubic: return "cubic";
    case Family::Conic: return "conic";
    case Family::ThreeLines: return "three-lines";
  }
  throw std::logic_error("family_name: bad enum");
}

RingSpec build_ring(const SpaceKind& kind) {
  if (kind.m < 0 || kind.m > 1 || kind.n < 0 || kind.n > 4) {
    throw std::invalid_argument("build_ring: only m in {0,1} and n in {0..4} are supported");
  }
  std::vector<Gen> gens = {Gen::a};
  std::vector<RewriteRule> rules = {truncation(Gen::a, 4)};
  Monomial fundamental = Monomial::of({{Gen::a, 3}});
  int dimension = 3;

  auto add_lambda = [&](Gen g, RewriteRule rule, int fiber_dim) {
    gens.push_back(g);
    rules.push_back(std::move(rule));
    fundamental.mul_in(g, fiber_dim);
    dimension += fiber_dim;
  };
  add_lambda(Gen::l1, line_bundle_rule(Gen::l1), 2);
  switch (kind.family) {
    case Family::Cubic:
      add_lambda(Gen::l3, cubic_bundle_rule(), 9);
      break;
    case Family::Conic:
      add_lambda(Gen::l2, conic_bundle_rule(), 5);
      break;
    case Family::ThreeLines:
      add_lambda(Gen::l1p, line_bundle_rule(Gen::l1p), 2);
      add_lambda(Gen::l1pp, line_bundle_rule(Gen::l1pp), 2);
      break;
  }
  auto add_point = [&](Gen g) {
    gens.push_back(g);
    rules.push_back(truncation(g, 4));
    fundamental.mul_in(g, 3);
    dimension += 3;
  };
  if (kind.m == 1) add_point(Gen::B1);
  for (int i = 1; i <= kind.n; ++i) add_point(h_class(i));

  std::string name = std::string(family_name(kind.family)) + "(" + std::to_string(kind.m) + "," +
                     std::to_string(kind.n) + ")";
  return RingSpec(std::move(name), std::move(gens), std::move(rules), dimension, fundamental);
}

RingElement plane_incidence(Gen point_class) {
  if (!is_point_class(point_class)) {
    throw std::invalid_argument("plane_incidence: expected a B or H generator");
  }
  return RingElement::gen(Gen::a) + RingElement::gen(point_class);
}

RingElement line_incidence(Gen point_class) {
  if (!is_point_class(point_class)) {
    throw std::invalid_argument("line_incidence: expected a B or H generator");
  }
  return RingElement::gen(Gen::l1) + RingElement::gen(point_class);
}

RingElement curve_incidence(int degree, Gen point_class) {
  if (!is_point_class(point_class)) {
    throw std::invalid_argument("curve_incidence: expected a B or H generator");
  }
  Gen lambda;
  switch (degree) {
    case 1: lambda = Gen::l1; break;
    case 2: lambda = Gen::l2; break;
    case 3: lambda = Gen::l3; break;
    default: throw std::invalid_argument("curve_incidence: degree must be 1, 2 or 3");
  }
  return RingElement::gen(lambda) + Rational(degree) * RingElement::gen(point_class);
}

RingElement diagonal(Gen x, Gen y) {
  if (!is_point_class(x) || !is_point_class(y)) {
    throw std::invalid_argument("diagonal: expected B or H generators");
  }
  if (x == y) throw std::invalid_argument("diagonal: the two point classes must differ");
  RingElement out;
  for (int k = 0; k <= 3; ++k) {
    out.add_term(Monomial::of({{x, 3 - k}, {y, k}}), 1);
  }
  return out;
}

P3ConstraintClasses p3_constraint_classes() {
  P3ConstraintClasses out;
  out.line_meets_line = RingElement::gen(Gen::l1) + RingElement::gen(Gen::a);
  out.line_meets_point = RingElement(Monomial::of({{Gen::l1, 1}, {Gen::a, 1}}));
  out.cubic_meets_line = RingElement::gen(Gen::l3) + Rational(3) * RingElement::gen(Gen::a);
  out.cubic_meets_point = RingElement(Monomial::of({{Gen::l3, 1}, {Gen::a, 1}}));
  return out;
}

}  // namespace charnum
