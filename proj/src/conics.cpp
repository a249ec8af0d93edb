#include "charnum/conics.hpp"

#include <stdexcept>

namespace charnum::conics {

namespace {

RingElement lambda_sum_conic() {
  return RingElement::gen(Gen::l1) + RingElement::gen(Gen::l2);
}

RingElement lambda_sum_three_lines() {
  return RingElement::gen(Gen::l1) + RingElement::gen(Gen::l1p) + RingElement::gen(Gen::l1pp);
}

// (a+B1)(l+B1)(l2+2B1) base for a marked line-plus-conic with node at B1.
RingElement conic_base(const RingSpec& ring) {
  RingElement base = multiply(plane_incidence(Gen::B1), line_incidence(Gen::B1), ring);
  return multiply(base, curve_incidence(2, Gen::B1), ring);
}

RingElement point_on_line_pair(Gen h, const RingSpec& ring) {
  return multiply(plane_incidence(h), line_incidence(h), ring);
}

}  // namespace

TangencyBundleData tangency_bundle_data() {
  TangencyBundleData d;
  d.c1_w = Rational(3) * RingElement::gen(Gen::B1) - RingElement::gen(Gen::a);
  d.c2_w.add_term(Monomial::of({{Gen::a, 2}}), 1);
  d.c2_w.add_term(Monomial::of({{Gen::a, 1}, {Gen::B1, 1}}), -2);
  d.c2_w.add_term(Monomial::of({{Gen::B1, 2}}), 3);
  d.c1_line = Rational(2) * RingElement::gen(Gen::B1) - RingElement::gen(Gen::l1) -
              RingElement::gen(Gen::a);
  d.euler_tangency =
      RingElement::gen(Gen::a) + RingElement::gen(Gen::l1) + RingElement::gen(Gen::l2);
  return d;
}

std::optional<DegenerateClass> degenerate_class_from_string(std::string_view name) {
  if (name == "r3") return DegenerateClass::R3;
  if (name == "r4:1") return DegenerateClass::R4_1;
  if (name == "r4:2") return DegenerateClass::R4_2;
  if (name == "r4:3") return DegenerateClass::R4_3;
  if (name == "ra1f") return DegenerateClass::RA1F;
  if (name == "rt1") return DegenerateClass::RT1;
  return std::nullopt;
}

Evaluator::Evaluator()
    : conic3_(build_ring({Family::Conic, 1, 3})),
      conic4_(build_ring({Family::Conic, 1, 4})),
      three_lines_(build_ring({Family::ThreeLines, 1, 4})) {
  r3_ = conic_base(conic3_);
  for (int i = 1; i <= 3; ++i) {
    r3_ = multiply(r3_, point_on_line_pair(h_class(i), conic3_), conic3_);
  }

  for (int i = 1; i <= 3; ++i) {
    RingElement cls = conic_base(conic4_);
    cls = multiply(cls, diagonal(h_class(i), Gen::B1), conic4_);
    for (int j = 1; j <= 4; ++j) {
      if (j == i) continue;
      cls = multiply(cls, point_on_line_pair(h_class(j), conic4_), conic4_);
    }
    r4_[i - 1] = cls;
  }

  rt1_ = multiply(conic_base(conic4_), tangency_bundle_data().euler_tangency, conic4_);
  for (int j = 1; j <= 4; ++j) {
    rt1_ = multiply(rt1_, point_on_line_pair(h_class(j), conic4_), conic4_);
  }

  ra1f_ = multiply(plane_incidence(Gen::B1),
                   RingElement::gen(Gen::l1p) + RingElement::gen(Gen::B1), three_lines_);
  ra1f_ = multiply(ra1f_, RingElement::gen(Gen::l1pp) + RingElement::gen(Gen::B1), three_lines_);
  for (int j = 1; j <= 4; ++j) {
    ra1f_ = multiply(ra1f_, point_on_line_pair(h_class(j), three_lines_), three_lines_);
  }
  ra1f_ *= make_rational(1, 2);

  pair_r3_ = std::make_unique<IntersectionPairing>(conic3_, r3_);
  for (int i = 0; i < 3; ++i) {
    pair_r4_[i] = std::make_unique<IntersectionPairing>(conic4_, r4_[i]);
  }
  pair_ra1f_ = std::make_unique<IntersectionPairing>(three_lines_, ra1f_);
  pair_rt1_ = std::make_unique<IntersectionPairing>(conic4_, rt1_);
}

const RingElement& Evaluator::class_R4(int i) const {
  if (i < 1 || i > 3) throw std::invalid_argument("class_R4: index must be 1, 2 or 3");
  return r4_[i - 1];
}

RingElement Evaluator::mu_for_conic(const RingElement& mu, const RingSpec& ring) const {
  return substitute(mu, Gen::l3, lambda_sum_conic(), ring);
}

RingElement Evaluator::mu_for_three_lines(const RingElement& mu) const {
  return substitute(mu, Gen::l3, lambda_sum_three_lines(), three_lines_);
}

Rational Evaluator::eval_T(const TIndex& idx) {
  if (idx.m < 0 || idx.n1 < 0 || idx.n2 < 0 || idx.n3 < 0 || idx.n4 < 0 || idx.l < 0) {
    throw std::invalid_argument("eval_T: negative index");
  }
  if (idx.lambda3_exponent() < 0) return Rational(0);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = t_memo_.find(idx);
    if (it != t_memo_.end()) return it->second;
  }
  Monomial mu = Monomial::of({{Gen::l1, idx.m},
                              {Gen::l3, idx.lambda3_exponent()},
                              {Gen::H1, idx.n1},
                              {Gen::H2, idx.n2},
                              {Gen::H3, idx.n3},
                              {Gen::H4, idx.n4},
                              {Gen::a, idx.l}});
  RingElement mu_elem(mu);
  RingElement mu_conic = mu_for_conic(mu_elem, conic4_);
  RingElement mu_lines = mu_for_three_lines(mu_elem);
  Rational value(0);
  for (int i = 0; i < 3; ++i) value += pair_r4_[i]->against(mu_conic);
  value += pair_ra1f_->against(mu_lines);
  value += Rational(2) * pair_rt1_->against(mu_conic);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return t_memo_.emplace(idx, std::move(value)).first->second;
}

Rational Evaluator::eval_R3_paired(int m, int j, int l) {
  if (m < 0 || j < 0 || l < 0) throw std::invalid_argument("eval_R3_paired: negative exponent");
  if (m + j + l != 13) return Rational(0);
  RingElement mu(Monomial::of({{Gen::l1, m}, {Gen::l3, j}, {Gen::a, l}}));
  return pair_r3_->against(mu_for_conic(mu, conic3_));
}

Rational Evaluator::pair_class(DegenerateClass which, const RingElement& mu) {
  switch (which) {
    case DegenerateClass::R3: return pair_r3_->against(mu_for_conic(mu, conic3_));
    case DegenerateClass::R4_1: return pair_r4_[0]->against(mu_for_conic(mu, conic4_));
    case DegenerateClass::R4_2: return pair_r4_[1]->against(mu_for_conic(mu, conic4_));
    case DegenerateClass::R4_3: return pair_r4_[2]->against(mu_for_conic(mu, conic4_));
    case DegenerateClass::RA1F: return pair_ra1f_->against(mu_for_three_lines(mu));
    case DegenerateClass::RT1: return pair_rt1_->against(mu_for_conic(mu, conic4_));
  }
  throw std::logic_error("pair_class: bad enum");
}

}  // namespace charnum::conics
