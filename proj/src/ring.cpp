#include "charnum/ring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace charnum {

namespace {

constexpr std::array<std::string_view, kGenCount> kGenNames = {
    "a", "l1", "l2", "l3", "l1p", "l1pp", "B1", "H1", "H2", "H3", "H4"};

const std::array<Generator, kGenCount>& generator_table() {
  static const std::array<Generator, kGenCount> table = [] {
    std::array<Generator, kGenCount> t{};
    for (std::size_t i = 0; i < kGenCount; ++i) {
      t[i] = Generator{static_cast<std::uint8_t>(i), kGenNames[i], 1};
    }
    return t;
  }();
  return table;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

const Generator& generator(Gen g) { return generator_table()[static_cast<std::size_t>(g)]; }

std::optional<Gen> find_generator(std::string_view name) {
  for (std::size_t i = 0; i < kGenCount; ++i) {
    if (kGenNames[i] == name) return static_cast<Gen>(i);
  }
  return std::nullopt;
}

Gen h_class(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("h_class: index out of range");
  return static_cast<Gen>(static_cast<int>(Gen::H1) + (i - 1));
}

bool is_point_class(Gen g) { return g == Gen::B1 || (g >= Gen::H1 && g <= Gen::H4); }

bool is_lambda_class(Gen g) { return g >= Gen::l1 && g <= Gen::l1pp; }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(std::initializer_list<std::pair<Gen, int>> factors) {
  Monomial m;
  for (const auto& [g, k] : factors) m.mul_in(g, k);
  return m;
}

Monomial& Monomial::mul_in(Gen g, int k) {
  if (k < 0) throw std::invalid_argument("Monomial: negative exponent");
  int e = exp_[static_cast<std::size_t>(g)] + k;
  if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
  exp_[static_cast<std::size_t>(g)] = static_cast<std::uint8_t>(e);
  return *this;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < kGenCount; ++i) {
    int e = out.exp_[i] + other.exp_[i];
    if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
    out.exp_[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial Monomial::without(Gen g) const {
  Monomial out = *this;
  out.exp_[static_cast<std::size_t>(g)] = 0;
  return out;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp_) d += e;
  return d;
}

bool Monomial::is_unit() const { return total_degree() == 0; }

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < kGenCount; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kGenNames[i];
    if (exp_[i] > 1) {
      out += '^';
      out += std::to_string(static_cast<int>(exp_[i]));
    }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text) {
  Monomial m;
  std::size_t pos = 0;
  bool saw_factor = false;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view tok = trimmed(text.substr(pos, star == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : star - pos));
    if (!tok.empty()) {
      saw_factor = true;
      if (tok != "1") {
        std::string_view name = tok;
        int exp = 1;
        if (std::size_t caret = tok.find('^'); caret != std::string_view::npos) {
          name = trimmed(tok.substr(0, caret));
          std::string_view expstr = trimmed(tok.substr(caret + 1));
          try {
            std::size_t used = 0;
            exp = std::stoi(std::string(expstr), &used);
            if (used != expstr.size()) throw std::invalid_argument("");
          } catch (const std::exception&) {
            throw std::invalid_argument("parse_monomial: bad exponent in '" + std::string(tok) +
                                        "'");
          }
          if (exp < 0) throw std::invalid_argument("parse_monomial: negative exponent");
        }
        auto g = find_generator(name);
        if (!g) throw std::invalid_argument("parse_monomial: unknown generator '" +
                                            std::string(name) + "'");
        m.mul_in(*g, exp);
      }
    } else if (saw_factor || star != std::string_view::npos) {
      throw std::invalid_argument("parse_monomial: empty factor");
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return m;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(Monomial m, Rational c) {
  if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

RingElement RingElement::gen(Gen g) { return RingElement(Monomial::of({{g, 1}})); }

Rational RingElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RingElement::is_homogeneous(int* degree_out) const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_) {
    if (m.total_degree() != d) return false;
  }
  if (degree_out) *degree_out = d;
  return true;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& [m, coeff] : out.terms_) coeff = -coeff;
  return out;
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*" << m.str();
  }
  return out.str();
}

RingElement operator+(RingElement lhs, const RingElement& rhs) {
  lhs += rhs;
  return lhs;
}

RingElement operator-(RingElement lhs, const RingElement& rhs) {
  lhs -= rhs;
  return lhs;
}

RingElement operator*(const Rational& c, RingElement e) {
  e *= c;
  return e;
}

RingElement expand(const RingElement& e1, const RingElement& e2) {
  RingElement out;
  for (const auto& [m1, c1] : e1.terms()) {
    for (const auto& [m2, c2] : e2.terms()) {
      out.add_term(m1.times(m2), c1 * c2);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec::RingSpec(std::string name, std::vector<Gen> gens, std::vector<RewriteRule> rules,
                   int dimension, Monomial fundamental)
    : name_(std::move(name)),
      generators_(std::move(gens)),
      dimension_(dimension),
      fundamental_(fundamental) {
  std::sort(generators_.begin(), generators_.end());
  if (generators_.empty()) throw std::invalid_argument("RingSpec: no generators");
  if (std::adjacent_find(generators_.begin(), generators_.end()) != generators_.end()) {
    throw std::invalid_argument("RingSpec: duplicate generator");
  }
  for (auto& rule : rules) {
    if (!contains(rule.generator)) {
      throw std::invalid_argument("RingSpec '" + name_ + "': rule for foreign generator");
    }
    if (rule.power <= 0) throw std::invalid_argument("RingSpec: rule power must be positive");
    int deg = 0;
    if (!rule.replacement.is_homogeneous(&deg) ||
        (!rule.replacement.is_zero() && deg != rule.power)) {
      throw std::invalid_argument("RingSpec '" + name_ + "': rule replacement not homogeneous of the rule degree");
    }
    for (const auto& [m, c] : rule.replacement.terms()) {
      if (m.exponent(rule.generator) >= rule.power) {
        throw std::invalid_argument("RingSpec '" + name_ + "': replacement not reduced in its generator");
      }
      if (!supports(m)) {
        throw std::invalid_argument("RingSpec '" + name_ + "': replacement uses foreign generator");
      }
    }
    auto& slot = rules_[static_cast<std::size_t>(rule.generator)];
    if (slot) throw std::invalid_argument("RingSpec: duplicate rule for a generator");
    slot = std::move(rule);
  }
  for (Gen g : generators_) {
    if (!rules_[static_cast<std::size_t>(g)]) {
      throw std::invalid_argument("RingSpec '" + name_ + "': generator without rule");
    }
  }
  if (dimension_ < 0) throw std::invalid_argument("RingSpec: negative dimension");
  if (fundamental_.total_degree() != dimension_) {
    throw std::invalid_argument("RingSpec '" + name_ + "': fundamental degree != dimension");
  }
  if (!supports(fundamental_) || !is_normal_form(fundamental_)) {
    throw std::invalid_argument("RingSpec '" + name_ + "': fundamental not a normal-form monomial");
  }
}

bool RingSpec::contains(Gen g) const {
  return std::binary_search(generators_.begin(), generators_.end(), g);
}

const RewriteRule* RingSpec::rule_for(Gen g) const {
  const auto& slot = rules_[static_cast<std::size_t>(g)];
  return slot ? &*slot : nullptr;
}

bool RingSpec::is_normal_form(const Monomial& m) const {
  for (Gen g : generators_) {
    const RewriteRule* rule = rule_for(g);
    if (rule && m.exponent(g) >= rule->power) return false;
  }
  return true;
}

bool RingSpec::supports(const Monomial& m) const {
  for (std::size_t i = 0; i < kGenCount; ++i) {
    if (m.exponent(static_cast<Gen>(i)) > 0 && !contains(static_cast<Gen>(i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

void require_supported(const RingElement& e, const RingSpec& spec, const char* op) {
  for (const auto& [m, c] : e.terms()) {
    if (!spec.supports(m)) {
      throw std::invalid_argument(std::string(op) + ": element uses a generator outside ring '" +
                                  spec.name() + "'");
    }
  }
}

// Rewrite target: the non-`a` generator with the highest reducible exponent,
// ties broken by generator order; `a` truncation last.
std::optional<Gen> pick_rule_target(const Monomial& m, const RingSpec& spec) {
  std::optional<Gen> best;
  int best_exp = -1;
  for (Gen g : spec.generators()) {
    if (g == Gen::a) continue;
    const RewriteRule* rule = spec.rule_for(g);
    if (!rule) continue;
    int e = m.exponent(g);
    if (e >= rule->power && e > best_exp) {
      best = g;
      best_exp = e;
    }
  }
  if (best) return best;
  if (const RewriteRule* rule = spec.rule_for(Gen::a); rule && m.exponent(Gen::a) >= rule->power) {
    return Gen::a;
  }
  return std::nullopt;
}

}  // namespace

RingElement normalize(const RingElement& e, const RingSpec& spec) {
  require_supported(e, spec, "normalize");
  RingElement result;
  std::map<Monomial, Rational> pending(e.terms());
  while (!pending.empty()) {
    auto it = pending.begin();
    Monomial m = it->first;
    Rational c = std::move(it->second);
    pending.erase(it);
    if (c == 0) continue;
    auto target = pick_rule_target(m, spec);
    if (!target) {
      result.add_term(m, c);
      continue;
    }
    const RewriteRule& rule = *spec.rule_for(*target);
    Monomial rest = m.without(*target);
    rest.mul_in(*target, m.exponent(*target) - rule.power);
    for (const auto& [rm, rc] : rule.replacement.terms()) {
      Monomial nm = rest.times(rm);
      assert(nm.total_degree() == m.total_degree());
      auto [slot, inserted] = pending.emplace(nm, c * rc);
      if (!inserted) {
        slot->second += c * rc;
        if (slot->second == 0) pending.erase(slot);
      }
    }
  }
  return result;
}

RingElement multiply(const RingElement& e1, const RingElement& e2, const RingSpec& spec) {
  require_supported(e1, spec, "multiply");
  require_supported(e2, spec, "multiply");
  return normalize(expand(e1, e2), spec);
}

RingElement power(const RingElement& e, int exponent, const RingSpec& spec) {
  if (exponent < 0) throw std::invalid_argument("power: negative exponent");
  RingElement acc = RingElement::unit();
  for (int i = 0; i < exponent; ++i) acc = multiply(acc, e, spec);
  return acc;
}

Rational integrate(const RingElement& e, const RingSpec& spec) {
  return normalize(e, spec).coefficient(spec.fundamental());
}

RingElement substitute(const RingElement& e, Gen g, const RingElement& replacement,
                       const RingSpec& target) {
  int deg = 0;
  if (replacement.is_zero() || !replacement.is_homogeneous(&deg) || deg != 1) {
    throw std::invalid_argument("substitute: replacement must be homogeneous of degree 1");
  }
  for (const auto& [m, c] : replacement.terms()) {
    if (m.exponent(g) > 0) throw std::invalid_argument("substitute: replacement contains the substituted generator");
  }
  std::vector<RingElement> powers = {RingElement::unit()};
  RingElement out;
  for (const auto& [m, c] : e.terms()) {
    int k = m.exponent(g);
    while (static_cast<int>(powers.size()) <= k) {
      powers.push_back(multiply(powers.back(), replacement, target));
    }
    out += c * expand(RingElement(m.without(g)), powers[static_cast<std::size_t>(k)]);
  }
  return normalize(out, target);
}

// ---------------------------------------------------------------------------
// IntersectionPairing

IntersectionPairing::IntersectionPairing(const RingSpec& spec, const RingElement& fixed_class)
    : spec_(spec), fixed_nf_(normalize(fixed_class, spec)) {
  std::array<bool, kGenCount> in_replacement{};
  for (Gen g : spec_.generators()) {
    for (const auto& [m, c] : spec_.rule_for(g)->replacement.terms()) {
      for (std::size_t i = 0; i < kGenCount; ++i) {
        if (m.exponent(static_cast<Gen>(i)) > 0) in_replacement[i] = true;
      }
    }
  }
  for (Gen g : spec_.generators()) {
    std::size_t i = static_cast<std::size_t>(g);
    inert_[i] = spec_.rule_for(g)->replacement.is_zero() && !in_replacement[i];
  }
  auto split_inert = [&](const Monomial& m) {
    Monomial inert_part, active_part;
    for (std::size_t i = 0; i < kGenCount; ++i) {
      Gen g = static_cast<Gen>(i);
      int e = m.exponent(g);
      if (e == 0) continue;
      (inert_[i] ? inert_part : active_part).mul_in(g, e);
    }
    return std::pair{inert_part, active_part};
  };
  std::tie(fund_inert_, fund_active_) = split_inert(spec_.fundamental());
  for (const auto& [m, c] : fixed_nf_.terms()) {
    auto [inert_part, active_part] = split_inert(m);
    buckets_[inert_part].emplace_back(active_part, c);
  }
}

Rational IntersectionPairing::reduce_active(const Monomial& active) const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = active_memo_.find(active);
    if (it != active_memo_.end()) return it->second;
  }
  Rational value = normalize(RingElement(active), spec_).coefficient(fund_active_);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return active_memo_.emplace(active, std::move(value)).first->second;
}

Rational IntersectionPairing::against(const RingElement& e) const {
  require_supported(e, spec_, "IntersectionPairing::against");
  RingElement nf = normalize(e, spec_);
  Rational acc(0);
  for (const auto& [m, c] : nf.terms()) {
    Monomial needed, active_light;
    bool feasible = true;
    for (std::size_t i = 0; i < kGenCount && feasible; ++i) {
      Gen g = static_cast<Gen>(i);
      if (inert_[i]) {
        int complement = fund_inert_.exponent(g) - m.exponent(g);
        if (complement < 0) {
          feasible = false;
        } else {
          needed.mul_in(g, complement);
        }
      } else if (int exp = m.exponent(g); exp > 0) {
        active_light.mul_in(g, exp);
      }
    }
    if (!feasible) continue;
    auto bucket = buckets_.find(needed);
    if (bucket == buckets_.end()) continue;
    for (const auto& [active_heavy, heavy_c] : bucket->second) {
      Rational reduced = reduce_active(active_heavy.times(active_light));
      if (reduced != 0) acc += c * heavy_c * reduced;
    }
  }
  return acc;
}

}  // namespace charnum
