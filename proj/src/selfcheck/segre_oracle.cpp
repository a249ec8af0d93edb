#include "charnum/selfcheck/segre_oracle.hpp"

#include <array>
#include <vector>

namespace charnum::selfcheck {

namespace {

struct BundleData {
  Gen gen;
  int fiber_dim;                   // rule power - 1
  std::array<Rational, 4> segre;   // s_0..s_3 of the defining bundle
};

// Reads the Chern coefficients out of g^p = -c1 g^{p-1} a - c2 g^{p-2} a^2 - c3 g^{p-3} a^3
// and inverts the total class up to degree 3.
std::optional<BundleData> bundle_data(Gen g, const RewriteRule& rule) {
  std::array<Rational, 4> chern = {Rational(1), Rational(0), Rational(0), Rational(0)};
  for (const auto& [m, c] : rule.replacement.terms()) {
    int k = m.exponent(Gen::a);
    if (k < 1 || k > 3) return std::nullopt;
    if (m.exponent(g) != rule.power - k) return std::nullopt;
    if (m.total_degree() != rule.power) return std::nullopt;
    chern[static_cast<std::size_t>(k)] = -c;
  }
  BundleData out{g, rule.power - 1, {Rational(1), Rational(0), Rational(0), Rational(0)}};
  // s = 1/c truncated at degree 3
  out.segre[1] = -chern[1];
  out.segre[2] = chern[1] * chern[1] - chern[2];
  out.segre[3] = -chern[1] * chern[1] * chern[1] + 2 * chern[1] * chern[2] - chern[3];
  return out;
}

}  // namespace

std::optional<Rational> segre_integrate(const RingSpec& spec, const Monomial& m) {
  if (!spec.supports(m)) return std::nullopt;
  std::vector<BundleData> bundles;
  for (Gen g : spec.generators()) {
    const RewriteRule* rule = spec.rule_for(g);
    if (g == Gen::a) {
      if (rule->power != 4 || !rule->replacement.is_zero()) return std::nullopt;
      continue;
    }
    if (is_point_class(g)) {
      if (rule->power != 4 || !rule->replacement.is_zero()) return std::nullopt;
      // point factors pair only against their full top power
      if (m.exponent(g) != spec.fundamental().exponent(g)) return Rational(0);
      continue;
    }
    auto data = bundle_data(g, *rule);
    if (!data) return std::nullopt;
    bundles.push_back(std::move(*data));
  }
  int base_degree = m.exponent(Gen::a);
  Rational value(1);
  for (const BundleData& b : bundles) {
    int k = m.exponent(b.gen) - b.fiber_dim;
    if (k < 0 || k > 3) return Rational(0);
    value *= b.segre[static_cast<std::size_t>(k)];
    base_degree += k;
  }
  if (base_degree != 3) return Rational(0);
  return value;
}

}  // namespace charnum::selfcheck
