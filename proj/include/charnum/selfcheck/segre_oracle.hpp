#pragma once

#include <optional>

#include "charnum/ring.hpp"

namespace charnum::selfcheck {

/// Pushforward route for integrals over the bundle rings: lambda powers above
/// the fiber top convert to Segre coefficients read off the rewrite rules, and
/// the base direction pairs the residual a-power. Returns nullopt when the
/// ring is not of the product-of-projective-bundles form handled here.
std::optional<Rational> segre_integrate(const RingSpec& spec, const Monomial& m);

}  // namespace charnum::selfcheck
