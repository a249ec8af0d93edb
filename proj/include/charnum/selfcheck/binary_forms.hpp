#pragma once

#include <vector>

#include "charnum/rational.hpp"

namespace charnum::selfcheck {

/// Dense univariate polynomial over the exact rationals.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(Rational c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly scaled(const Rational& c) const;
  Poly derivative() const;

  /// Euclidean remainder; divisor must be nonzero.
  Poly remainder(const Poly& divisor) const;
  /// Exact quotient; throws if the division leaves a remainder.
  Poly exact_quotient(const Poly& divisor) const;

  static Poly gcd(Poly a, Poly b);  // monic

  /// Number of distinct complex roots: deg p - deg gcd(p, p').
  int distinct_root_count() const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[i] is the x^i coefficient; no trailing zeros
};

/// Number of members of a generic pencil of degree-d forms, restricted to a
/// line, that acquire a double root: the t-discriminant root count. Draws
/// random small-integer instances until a generic (squarefree) one appears.
int pencil_tangency_count(int d, unsigned seed);

/// Number of members of a generic 2-parameter net of degree-d forms on a line
/// with a root of multiplicity >= 3, counted by determinant elimination.
int triple_root_net_count(int d, unsigned seed);

/// Whether tangency to a fixed line at a fixed point cuts a generic
/// 2-parameter family in exactly one member (2x2 rank check).
bool unique_fixed_point_tangent(int d, unsigned seed);

}  // namespace charnum::selfcheck
