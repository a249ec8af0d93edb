#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charnum/rational.hpp"

namespace charnum {

/// Divisor-class generators of the parameter-space cohomology rings.
/// `a` is the hyperplane class of the dual projective 3-space; `l*` are the
/// hyperplane classes of the curve/line bundles over it; `B1` and `H1..H4`
/// are the hyperplane classes of the marked-point factors. All have degree 1.
enum class Gen : std::uint8_t {
  a = 0,
  l1,
  l2,
  l3,
  l1p,
  l1pp,
  B1,
  H1,
  H2,
  H3,
  H4,
};

inline constexpr std::size_t kGenCount = 11;

struct Generator {
  std::uint8_t id;
  std::string_view name;
  int degree;  // always 1: one unit of grading per complex codimension
};

const Generator& generator(Gen g);
std::optional<Gen> find_generator(std::string_view name);
Gen h_class(int i);  // H1..H4 for i = 1..4

bool is_point_class(Gen g);   // B or H
bool is_lambda_class(Gen g);  // l1, l2, l3, l1p, l1pp

/// Exponent vector over the fixed generator table. Generators carry degree 1,
/// so the total degree is the exponent sum. Comparison follows the canonical
/// generator order (a, lambdas, B, H), which makes serialization deterministic.
class Monomial {
 public:
  Monomial() = default;

  static Monomial unit() { return Monomial{}; }
  static Monomial of(std::initializer_list<std::pair<Gen, int>> factors);

  int exponent(Gen g) const { return exp_[static_cast<std::size_t>(g)]; }
  Monomial& mul_in(Gen g, int k = 1);
  [[nodiscard]] Monomial times(const Monomial& other) const;
  [[nodiscard]] Monomial without(Gen g) const;

  int total_degree() const;
  bool is_unit() const;

  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kGenCount> exp_{};
};

/// Parses "a^3*l1^2*l3^9" (whitespace ignored; "1" or "" is the unit).
Monomial parse_monomial(std::string_view text);

/// Sparse linear combination of monomials with exact rational coefficients.
/// Zero coefficients are never stored. Elements are plain polynomials; ring
/// relations enter only through the operations that take a RingSpec.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(Monomial m, Rational c = Rational(1));

  static RingElement zero() { return RingElement{}; }
  static RingElement unit() { return RingElement(Monomial::unit()); }
  static RingElement gen(Gen g);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Homogeneity test; fills degree_out when homogeneous and nonzero.
  bool is_homogeneous(int* degree_out = nullptr) const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const Rational& c);
  RingElement operator-() const;

  std::string str() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  std::map<Monomial, Rational> terms_;
};

RingElement operator+(RingElement lhs, const RingElement& rhs);
RingElement operator-(RingElement lhs, const RingElement& rhs);
RingElement operator*(const Rational& c, RingElement e);

/// Plain polynomial product, no relations applied.
RingElement expand(const RingElement& e1, const RingElement& e2);

/// One nilpotency/rewrite relation: generator^power -> replacement, where the
/// replacement is homogeneous of degree `power` and has generator-exponent
/// strictly below `power` in every term.
struct RewriteRule {
  Gen generator;
  int power;
  RingElement replacement;
};

/// A graded quotient ring: generator subset, one rewrite rule per generator,
/// complex dimension, and the fundamental top monomial that integrates to 1.
class RingSpec {
 public:
  RingSpec(std::string name, std::vector<Gen> gens, std::vector<RewriteRule> rules,
           int dimension, Monomial fundamental);

  const std::string& name() const { return name_; }
  const std::vector<Gen>& generators() const { return generators_; }
  bool contains(Gen g) const;
  const RewriteRule* rule_for(Gen g) const;
  int dimension() const { return dimension_; }
  const Monomial& fundamental() const { return fundamental_; }

  /// True when no rule applies to the monomial.
  bool is_normal_form(const Monomial& m) const;
  /// True when every generator occurring in m belongs to this ring.
  bool supports(const Monomial& m) const;

 private:
  std::string name_;
  std::vector<Gen> generators_;
  std::array<std::optional<RewriteRule>, kGenCount> rules_;
  int dimension_;
  Monomial fundamental_;
};

/// Reduces e to normal form modulo the spec's relations. The non-`a` generator
/// of highest exponent is rewritten first, then `a` truncation applies.
RingElement normalize(const RingElement& e, const RingSpec& spec);

/// Normalized product.
RingElement multiply(const RingElement& e1, const RingElement& e2, const RingSpec& spec);

/// power >= 0; normalized.
RingElement power(const RingElement& e, int exponent, const RingSpec& spec);

/// Coefficient of the fundamental monomial in the normal form of e.
Rational integrate(const RingElement& e, const RingSpec& spec);

/// Replaces every occurrence of g by `replacement` (homogeneous of degree 1,
/// not containing g) and normalizes in `target`. g need not belong to target.
RingElement substitute(const RingElement& e, Gen g, const RingElement& replacement,
                       const RingSpec& target);

/// Integration of products against one fixed class, with the fixed class
/// pre-bucketed by its truncating-generator exponents and the lambda/a
/// reductions memoized. Matches integrate(multiply(fixed, e)) exactly.
/// Safe for concurrent use; the spec must outlive the pairing.
class IntersectionPairing {
 public:
  IntersectionPairing(const RingSpec& spec, const RingElement& fixed_class);

  IntersectionPairing(const IntersectionPairing&) = delete;
  IntersectionPairing& operator=(const IntersectionPairing&) = delete;

  Rational against(const RingElement& e) const;
  const RingElement& fixed_class() const { return fixed_nf_; }

 private:
  Rational reduce_active(const Monomial& active) const;

  const RingSpec& spec_;
  RingElement fixed_nf_;
  std::array<bool, kGenCount> inert_{};  // zero-replacement gens absent from all replacements
  Monomial fund_inert_;
  Monomial fund_active_;
  std::map<Monomial, std::vector<std::pair<Monomial, Rational>>> buckets_;
  mutable std::mutex memo_mutex_;
  mutable std::map<Monomial, Rational> active_memo_;
};

}  // namespace charnum
