#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "charnum/conics.hpp"

namespace charnum::fbcubic {

/// Internal-consistency failure: inconsistent or underdetermined linear
/// system, or a characteristic number that fails integrality.
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index of an unknown pairing phi against l1^m l3^j H1^n1..H4^n4 a^l with
/// j = 16 - (m + n1 + n2 + n3 + n4 + l).
struct PhiIndex {
  int m = 0, n1 = 0, n2 = 0, n3 = 0, n4 = 0, l = 0;

  int lambda3_exponent() const { return 16 - (m + n1 + n2 + n3 + n4 + l); }

  /// Sorts (n1,n2,n3) descending; phi is invariant under their permutations.
  PhiIndex canonical() const;

  /// True for indices that can be nonzero and appear as solver unknowns:
  /// the n4 = 3 slice in normal form.
  bool is_unknown() const;

  std::string str() const;

  friend bool operator==(const PhiIndex&, const PhiIndex&) = default;
  friend auto operator<=>(const PhiIndex&, const PhiIndex&) = default;
};

/// One linear relation among phi values with its conic-side right-hand side.
struct LinearEquation {
  std::map<PhiIndex, Rational> lhs;
  Rational rhs;
  conics::TIndex source;
};

/// Exact sparse Gauss-Jordan solve over the n4 = 3 unknowns of the system
/// (indices off that slice are folded to zero). Throws consistency_error when
/// the system is inconsistent or leaves an unknown unresolved.
std::map<PhiIndex, Rational> solve_linear_system(const std::vector<LinearEquation>& equations);

/// Diagnostic comparison of the solved phi table against a previously
/// hand-combined form of the three-equation reduction. Informational only.
struct RecursionVariantReport {
  int instances = 0;
  int matches = 0;
  int mismatches = 0;
};

/// Generates the pairing equations for the moving-plane nodal cubic family,
/// solves for the unknown pairings phi by back-substitution in descent order,
/// cross-checks against a full exact elimination, and assembles the
/// characteristic numbers.
///
/// The solve itself is single-threaded; run it to completion (any query
/// triggers it) before sharing the solver across threads. The solved tables
/// are immutable afterwards and safe for concurrent reads.
class Solver {
 public:
  Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  const RingSpec& family_ring() const { return cubic4_; }
  conics::Evaluator& conic_evaluator() { return conics_; }

  const std::vector<LinearEquation>& equations();

  /// Solved phi values on canonical indices (n1 >= n2 >= n3, n4 = 3).
  /// Triggers the dual-route solve on first use.
  const std::map<PhiIndex, Rational>& phi_table();
  /// Raw elimination solution over all index orderings, for cross-checks.
  const std::map<PhiIndex, Rational>& phi_table_eliminated();

  /// Value of phi at an arbitrary slice index (trivially-zero cases folded in).
  Rational phi(const PhiIndex& idx);

  /// (1/6) * (phi(m,0,0,0,3,l) + R3 pairing), the divisor chain collapsing the
  /// one-node family pairing; zero unless m + j + l = 13. Out-of-range
  /// exponents reduce through the ring rules first.
  Rational chain_A1F(int m, int j, int l);

  /// Same chain applied linearly to an element of the l1/l3/a subring.
  Rational chain_of(const RingElement& lambda_a_element);

  /// Number of one-nodal planar cubics in P^3 through r generic lines and
  /// s generic points; zero unless r + 2s = 11.
  std::int64_t characteristic_number(int r, int s);

  RecursionVariantReport check_recursion_variant();

 private:
  void ensure_equations();
  void ensure_solved();
  std::map<PhiIndex, Rational> solve_descent();
  std::map<PhiIndex, Rational> solve_elimination();
  Rational lookup(const std::map<PhiIndex, Rational>& table, const PhiIndex& idx) const;

  RingSpec cubic4_;
  conics::Evaluator conics_;
  std::vector<LinearEquation> equations_;
  bool equations_ready_ = false;
  bool solved_ = false;
  std::map<PhiIndex, Rational> phi_;        // canonical indices
  std::map<PhiIndex, Rational> phi_elim_;   // raw indices
};

}  // namespace charnum::fbcubic
