#include "charnum/selfcheck/dense_oracle.hpp"

#include <array>
#include <map>
#include <vector>

namespace charnum::selfcheck {

namespace {

using ExpTuple = std::array<int, kGenCount>;

ExpTuple tuple_of(const Monomial& m) {
  ExpTuple t{};
  for (std::size_t i = 0; i < kGenCount; ++i) t[i] = m.exponent(static_cast<Gen>(i));
  return t;
}

Monomial monomial_of(const ExpTuple& t) {
  Monomial m;
  for (std::size_t i = 0; i < kGenCount; ++i) {
    if (t[i] > 0) m.mul_in(static_cast<Gen>(i), t[i]);
  }
  return m;
}

struct DenseRule {
  std::size_t gen;
  int power;
  std::vector<std::pair<ExpTuple, Rational>> replacement;
};

std::vector<DenseRule> dense_rules(const RingSpec& spec) {
  std::vector<DenseRule> rules;
  for (Gen g : spec.generators()) {
    const RewriteRule* rule = spec.rule_for(g);
    DenseRule dr{static_cast<std::size_t>(g), rule->power, {}};
    for (const auto& [m, c] : rule->replacement.terms()) {
      dr.replacement.emplace_back(tuple_of(m), c);
    }
    rules.push_back(std::move(dr));
  }
  return rules;
}

}  // namespace

RingElement dense_normal_form(const RingSpec& spec, const RingElement& e) {
  const std::vector<DenseRule> rules = dense_rules(spec);
  std::map<ExpTuple, Rational> work;
  for (const auto& [m, c] : e.terms()) {
    auto [it, inserted] = work.emplace(tuple_of(m), c);
    if (!inserted) it->second += c;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = work.begin(); it != work.end();) {
      if (it->second == 0) {
        it = work.erase(it);
        continue;
      }
      const DenseRule* applicable = nullptr;
      for (const DenseRule& rule : rules) {
        if (it->first[rule.gen] >= rule.power) {
          applicable = &rule;
          break;
        }
      }
      if (!applicable) {
        ++it;
        continue;
      }
      ExpTuple base = it->first;
      Rational coeff = it->second;
      it = work.erase(it);
      base[applicable->gen] -= applicable->power;
      for (const auto& [repl, rc] : applicable->replacement) {
        ExpTuple next = base;
        for (std::size_t i = 0; i < kGenCount; ++i) next[i] += repl[i];
        auto [slot, inserted] = work.emplace(next, coeff * rc);
        if (!inserted) slot->second += coeff * rc;
      }
      changed = true;
    }
  }
  RingElement out;
  for (const auto& [t, c] : work) out.add_term(monomial_of(t), c);
  return out;
}

Rational dense_integrate(const RingSpec& spec, const RingElement& e) {
  return dense_normal_form(spec, e).coefficient(spec.fundamental());
}

}  // namespace charnum::selfcheck
