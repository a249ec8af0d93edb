#include "charnum/selfcheck/binary_forms.hpp"

#include <random>
#include <stdexcept>

namespace charnum::selfcheck {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational c) {
  Poly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::logic_error("Poly::leading on zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly& other) const {
  std::vector<Rational> out(std::max(c_.size(), other.c_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
  }
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
  std::vector<Rational> out(std::max(c_.size(), other.c_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i));
  }
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return Poly();
  std::vector<Rational> out(c_.size() + other.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < other.c_.size(); ++j) {
      out[i + j] += c_[i] * other.c_[j];
    }
  }
  return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
  std::vector<Rational> out = c_;
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> out(c_.size() - 1, Rational(0));
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return Poly(std::move(out));
}

Poly Poly::remainder(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("Poly::remainder by zero");
  std::vector<Rational> rem = c_;
  while (static_cast<int>(rem.size()) - 1 >= divisor.degree()) {
    Rational factor = rem.back() / divisor.leading();
    std::size_t shift = rem.size() - divisor.c_.size();
    for (std::size_t i = 0; i < divisor.c_.size(); ++i) {
      rem[shift + i] -= factor * divisor.c_[i];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) break;
  }
  return Poly(std::move(rem));
}

Poly Poly::exact_quotient(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("Poly::exact_quotient by zero");
  if (is_zero()) return Poly();
  if (degree() < divisor.degree()) {
    throw std::invalid_argument("Poly::exact_quotient: division not exact");
  }
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1, Rational(0));
  while (static_cast<int>(rem.size()) - 1 >= divisor.degree() && !rem.empty()) {
    Rational factor = rem.back() / divisor.leading();
    std::size_t shift = rem.size() - divisor.c_.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < divisor.c_.size(); ++i) {
      rem[shift + i] -= factor * divisor.c_[i];
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  if (!rem.empty()) throw std::invalid_argument("Poly::exact_quotient: division not exact");
  return Poly(std::move(quot));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.remainder(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(Rational(1) / a.leading());
  return a;
}

int Poly::distinct_root_count() const {
  if (degree() <= 0) return 0;
  return degree() - gcd(*this, derivative()).degree();
}

namespace {

// Polynomial in x whose coefficients are polynomials in a parameter.
using ParamPoly = std::vector<Poly>;  // index = x-exponent

ParamPoly derivative_in_x(const ParamPoly& p) {
  ParamPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    out.push_back(p[i].scaled(Rational(static_cast<long>(i))));
  }
  return out;
}

int degree_in_x(const ParamPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  return -1;
}

// Determinant over the parameter-polynomial ring by column-subset dynamic
// programming (no divisions); fine for the small Sylvester matrices here.
Poly determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  std::vector<Poly> dp(std::size_t{1} << n);
  dp[0] = Poly::constant(Rational(1));
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    int sign_flips = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) {
        ++sign_flips;
        continue;
      }
      if (m[row][col].is_zero()) continue;
      Poly contrib = dp[mask] * m[row][col];
      if (sign_flips % 2 != 0) contrib = contrib.scaled(Rational(-1));
      dp[mask | (std::size_t{1} << col)] = dp[mask | (std::size_t{1} << col)] + contrib;
    }
  }
  return dp.back();
}

Poly resultant_in_x(const ParamPoly& p, const ParamPoly& q) {
  int dp = degree_in_x(p);
  int dq = degree_in_x(q);
  if (dp < 0 || dq < 0) return Poly();
  std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<Poly>> sylvester(n, std::vector<Poly>(n));
  for (int row = 0; row < dq; ++row) {
    for (int k = 0; k <= dp; ++k) {
      sylvester[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] =
          p[static_cast<std::size_t>(dp - k)];
    }
  }
  for (int row = 0; row < dp; ++row) {
    for (int k = 0; k <= dq; ++k) {
      sylvester[static_cast<std::size_t>(dq + row)][static_cast<std::size_t>(row + k)] =
          q[static_cast<std::size_t>(dq - k)];
    }
  }
  return determinant(sylvester);
}

std::vector<Rational> random_form_coeffs(int d, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  for (auto& c : out) c = Rational(dist(rng));
  while (out.back() == 0) out.back() = Rational(dist(rng));
  return out;
}

}  // namespace

int pencil_tangency_count(int d, unsigned seed) {
  if (d < 2) throw std::invalid_argument("pencil_tangency_count: need d >= 2");
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Rational> f0 = random_form_coeffs(d, rng);
    std::vector<Rational> f1 = random_form_coeffs(d, rng);
    // g(x; t) = f0(x) + t f1(x)
    ParamPoly g(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
      g[static_cast<std::size_t>(i)] =
          Poly({f0[static_cast<std::size_t>(i)]}) + Poly({Rational(0), f1[static_cast<std::size_t>(i)]});
    }
    Poly res = resultant_in_x(g, derivative_in_x(g));
    if (res.is_zero()) continue;
    // Res(g, g_x) = lc_x(g) * disc(g); the lc root is a degeneration, not a tangency.
    Poly lc({f0.back(), f1.back()});
    Poly disc = res.exact_quotient(lc);
    if (disc.degree() <= 0) continue;
    if (Poly::gcd(disc, disc.derivative()).degree() != 0) continue;  // non-generic draw
    return disc.distinct_root_count();
  }
  throw std::runtime_error("pencil_tangency_count: no generic instance found");
}

int triple_root_net_count(int d, unsigned seed) {
  if (d < 3) throw std::invalid_argument("triple_root_net_count: need d >= 3");
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    // g(x; s, t) = g0 + s g1 + t g2; a member with a triple root at x makes
    // (g, g', g'') simultaneously vanish, i.e. the 3x3 determinant below.
    Poly g[3], g1[3], g2[3];
    for (int k = 0; k < 3; ++k) g[k] = Poly(random_form_coeffs(d, rng));
    for (int k = 0; k < 3; ++k) g1[k] = g[k].derivative();
    for (int k = 0; k < 3; ++k) g2[k] = g1[k].derivative();
    std::vector<std::vector<Poly>> m = {{g[0], g[1], g[2]},
                                        {g1[0], g1[1], g1[2]},
                                        {g2[0], g2[1], g2[2]}};
    Poly det = determinant(m);
    if (det.degree() <= 0) continue;
    if (Poly::gcd(det, det.derivative()).degree() != 0) continue;
    return det.distinct_root_count();
  }
  throw std::runtime_error("triple_root_net_count: no generic instance found");
}

bool unique_fixed_point_tangent(int d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pt(-4, 4);
  Poly g0(random_form_coeffs(d, rng));
  Poly g1(random_form_coeffs(d, rng));
  Poly g2(random_form_coeffs(d, rng));
  Rational x0(pt(rng));
  auto eval = [&](const Poly& p) {
    Rational acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * x0 + p.coeff(i);
    return acc;
  };
  // value and derivative conditions at the fixed point, linear in (s, t)
  Rational det = eval(g1) * eval(g2.derivative()) - eval(g2) * eval(g1.derivative());
  return det != 0;
}

}  // namespace charnum::selfcheck
