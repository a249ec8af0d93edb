#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>

#include "charnum/spaces.hpp"

namespace charnum::conics {

/// Index of a pairing monomial l1^m l3^j H1^n1 H2^n2 H3^n3 H4^n4 a^l with
/// j = 13 - (m + n1 + n2 + n3 + n4 + l).
struct TIndex {
  int m = 0, n1 = 0, n2 = 0, n3 = 0, n4 = 0, l = 0;

  int lambda3_exponent() const { return 13 - (m + n1 + n2 + n3 + n4 + l); }

  friend bool operator==(const TIndex&, const TIndex&) = default;
  friend auto operator<=>(const TIndex&, const TIndex&) = default;
};

/// Chern data of the relative tangent bundle of the moving plane, of the
/// tautological line subbundle along a marked line, and the Euler factor
/// expressing first-order tangency of the conic to the line.
struct TangencyBundleData {
  RingElement c1_w;             // 3 B1 - a
  RingElement c2_w;             // a^2 - 2 a B1 + 3 B1^2
  RingElement c1_line;          // 2 B1 - l1 - a
  RingElement euler_tangency;   // a + l1 + l2
};

TangencyBundleData tangency_bundle_data();

enum class DegenerateClass { R3, R4_1, R4_2, R4_3, RA1F, RT1 };
std::optional<DegenerateClass> degenerate_class_from_string(std::string_view name);

/// Evaluates the line-plus-conic degeneration classes and their pairings.
/// All state is immutable after construction except memo tables, which are
/// lock-protected; concurrent evaluation is safe.
class Evaluator {
 public:
  Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  const RingSpec& conic_ring3() const { return conic3_; }
  const RingSpec& conic_ring4() const { return conic4_; }
  const RingSpec& three_lines_ring() const { return three_lines_; }

  /// Line-plus-smooth-conic class with three points on the line, in conic(1,3).
  const RingElement& class_R3() const { return r3_; }
  /// Same with four points, the node bound to the i-th point (i in 1..3), in conic(1,4).
  const RingElement& class_R4(int i) const;
  /// Ordered line-pair (nodal conic) class, halved, in three-lines(1,4).
  const RingElement& class_RA1F4() const { return ra1f_; }
  /// Line-plus-conic tangency class, in conic(1,4).
  const RingElement& class_RT1_4() const { return rt1_; }

  /// Total degenerate contribution paired against the index monomial, with
  /// the cubic class l3 rewritten per ring before pairing. Memoized.
  Rational eval_T(const TIndex& idx);

  /// Pairing of R3 against l1^m l3^j a^l over conic(1,3); zero unless m+j+l = 13.
  Rational eval_R3_paired(int m, int j, int l);

  /// Pairing of one degenerate class against an arbitrary monomial element
  /// written in l1/l3/H/a letters (l3 is rewritten for the class's ring).
  Rational pair_class(DegenerateClass which, const RingElement& mu);

 private:
  RingElement mu_for_conic(const RingElement& mu, const RingSpec& ring) const;
  RingElement mu_for_three_lines(const RingElement& mu) const;

  RingSpec conic3_;
  RingSpec conic4_;
  RingSpec three_lines_;
  RingElement r3_;
  RingElement r4_[3];
  RingElement ra1f_;
  RingElement rt1_;
  std::unique_ptr<IntersectionPairing> pair_r3_;
  std::unique_ptr<IntersectionPairing> pair_r4_[3];
  std::unique_ptr<IntersectionPairing> pair_ra1f_;
  std::unique_ptr<IntersectionPairing> pair_rt1_;
  std::mutex memo_mutex_;
  std::map<TIndex, Rational> t_memo_;
};

}  // namespace charnum::conics
