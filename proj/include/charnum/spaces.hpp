#pragma once

#include <optional>
#include <string_view>

#include "charnum/ring.hpp"

namespace charnum {

enum class Family {
  Cubic,      // line x cubic bundle pair over the dual P^3
  Conic,      // line x conic bundle pair
  ThreeLines, // three ordered line bundles
};

/// Parameter-space shape: m marked B-points, n incidence H-points.
struct SpaceKind {
  Family family;
  int m = 0;
  int n = 0;
};

std::optional<Family> family_from_string(std::string_view name);  // cubic|conic|three-lines
std::string_view family_name(Family f);

/// Builds the cohomology ring of the chosen parameter space. Only the shapes
/// used here are constructible: m in {0,1}, n in {0..4}.
RingSpec build_ring(const SpaceKind& kind);

/// Class of "the marked point lies on the moving plane": a + X.
RingElement plane_incidence(Gen point_class);

/// Class of "the marked point lies on the line": l1 + X.
RingElement line_incidence(Gen point_class);

/// Class of "the marked point lies on the degree-d curve": l_d + d*X, d in {1,2,3}.
RingElement curve_incidence(int degree, Gen point_class);

/// Class of "two marked points coincide": X^3 + X^2 Y + X Y^2 + Y^3.
RingElement diagonal(Gen x, Gen y);

/// Constraint classes for lines/cubics in the ambient P^3.
struct P3ConstraintClasses {
  RingElement line_meets_line;    // l1 + a
  RingElement line_meets_point;   // l1 * a
  RingElement cubic_meets_line;   // l3 + 3a
  RingElement cubic_meets_point;  // l3 * a
};

P3ConstraintClasses p3_constraint_classes();

}  // namespace charnum
