#pragma once

#include "charnum/ring.hpp"

namespace charnum::selfcheck {

/// Independent reduction route used to cross-check the ring engine: terms are
/// kept as raw exponent tuples and rewritten lowest-generator-first until no
/// rule applies. Shares nothing with normalize() except the rule data.
RingElement dense_normal_form(const RingSpec& spec, const RingElement& e);

/// Coefficient of the fundamental monomial in the dense normal form.
Rational dense_integrate(const RingSpec& spec, const RingElement& e);

}  // namespace charnum::selfcheck
