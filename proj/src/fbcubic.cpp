#include "charnum/fbcubic.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace charnum::fbcubic {

namespace {

Monomial phi_monomial(const PhiIndex& idx) {
  if (idx.lambda3_exponent() < 0) throw std::invalid_argument("phi index with negative l3 exponent has no monomial");
  return Monomial::of({{Gen::l1, idx.m},
                       {Gen::l3, idx.lambda3_exponent()},
                       {Gen::H1, idx.n1},
                       {Gen::H2, idx.n2},
                       {Gen::H3, idx.n3},
                       {Gen::H4, idx.n4},
                       {Gen::a, idx.l}});
}

PhiIndex phi_index_of(const Monomial& m) {
  PhiIndex idx{m.exponent(Gen::l1), m.exponent(Gen::H1), m.exponent(Gen::H2),
               m.exponent(Gen::H3), m.exponent(Gen::H4), m.exponent(Gen::a)};
  if (m.exponent(Gen::B1) != 0 || m.exponent(Gen::l2) != 0 || m.exponent(Gen::l1p) != 0 ||
      m.exponent(Gen::l1pp) != 0) {
    throw std::logic_error("phi_index_of: monomial outside the l1/l3/H/a letters");
  }
  if (idx.lambda3_exponent() != m.exponent(Gen::l3)) {
    throw std::logic_error("phi_index_of: monomial is not of total degree 16");
  }
  return idx;
}

}  // namespace

PhiIndex PhiIndex::canonical() const {
  PhiIndex out = *this;
  std::array<int, 3> ns = {n1, n2, n3};
  std::sort(ns.begin(), ns.end(), std::greater<int>());
  out.n1 = ns[0];
  out.n2 = ns[1];
  out.n3 = ns[2];
  return out;
}

bool PhiIndex::is_unknown() const {
  if (n4 != 3) return false;
  if (m < 0 || m > 2 || l < 0 || l > 3) return false;
  if (n1 < 0 || n1 > 3 || n2 < 0 || n2 > 3 || n3 < 0 || n3 > 3) return false;
  int j = lambda3_exponent();
  return j >= 0 && j <= 9;
}

std::string PhiIndex::str() const {
  std::ostringstream out;
  out << "phi(" << m << "," << n1 << "," << n2 << "," << n3 << "," << n4 << "," << l << ")";
  return out.str();
}

Solver::Solver() : cubic4_(build_ring({Family::Cubic, 1, 4})) {}

void Solver::ensure_equations() {
  if (equations_ready_) return;
  const RingElement point_factor = multiply(
      multiply(plane_incidence(Gen::H4), line_incidence(Gen::H4), cubic4_),
      curve_incidence(3, Gen::H4), cubic4_);
  for (int m = 0; m <= 2; ++m) {
    for (int n1 = 0; n1 <= 3; ++n1) {
      for (int n2 = 0; n2 <= 3; ++n2) {
        for (int n3 = 0; n3 <= 3; ++n3) {
          for (int n4 = 1; n4 <= 3; ++n4) {
            for (int l = 0; l <= 3; ++l) {
              conics::TIndex src{m, n1, n2, n3, n4, l};
              if (src.lambda3_exponent() < 0) continue;
              RingElement mu(Monomial::of({{Gen::l1, m},
                                           {Gen::l3, src.lambda3_exponent()},
                                           {Gen::H1, n1},
                                           {Gen::H2, n2},
                                           {Gen::H3, n3},
                                           {Gen::H4, n4},
                                           {Gen::a, l}}));
              RingElement lhs = multiply(point_factor, mu, cubic4_);
              for (int i = 1; i <= 3; ++i) {
                lhs -= multiply(diagonal(h_class(i), Gen::H4), mu, cubic4_);
              }
              LinearEquation eq;
              eq.source = src;
              eq.rhs = conics_.eval_T(src);
              for (const auto& [mono, c] : lhs.terms()) {
                eq.lhs.emplace(phi_index_of(mono), c);
              }
              if (!eq.lhs.empty()) equations_.push_back(std::move(eq));
            }
          }
        }
      }
    }
  }
  equations_ready_ = true;
}

const std::vector<LinearEquation>& Solver::equations() {
  ensure_equations();
  return equations_;
}

namespace {

// Substitutes known values into an equation, folding n4 != 3 indices to zero
// and identifying permuted indices. Returns the remaining unknown support.
struct ReducedEquation {
  std::map<PhiIndex, Rational> unknowns;  // canonical indices
  Rational rhs;
};

ReducedEquation reduce_equation(const std::map<PhiIndex, Rational>& lhs, const Rational& rhs,
                                const std::map<PhiIndex, Rational>& known) {
  ReducedEquation out;
  out.rhs = rhs;
  for (const auto& [idx, c] : lhs) {
    if (idx.n4 != 3) continue;  // vanishing slice
    PhiIndex canon = idx.canonical();
    auto it = known.find(canon);
    if (it != known.end()) {
      out.rhs -= c * it->second;
    } else {
      auto [slot, inserted] = out.unknowns.emplace(canon, c);
      if (!inserted) {
        slot->second += c;
        if (slot->second == 0) out.unknowns.erase(slot);
      }
    }
  }
  return out;
}

}  // namespace

std::map<PhiIndex, Rational> Solver::solve_descent() {
  ensure_equations();
  std::map<conics::TIndex, const LinearEquation*> by_source;
  for (const auto& eq : equations_) by_source.emplace(eq.source, &eq);

  std::map<PhiIndex, Rational> values;
  auto try_equation = [&](const std::map<PhiIndex, Rational>& lhs, const Rational& rhs) {
    ReducedEquation red = reduce_equation(lhs, rhs, values);
    if (red.unknowns.size() != 1) return red.unknowns.empty();
    const auto& [idx, coeff] = *red.unknowns.begin();
    values.emplace(idx, red.rhs / coeff);
    return true;
  };

  // Combine the three point-multiplicity instances with weights 1, -3, 9;
  // the shifted unknowns cancel and the sum-of-exponents descent closes.
  for (int sum = 9; sum >= 0; --sum) {
    for (int n1 = 3; n1 >= 0; --n1) {
      for (int n2 = n1; n2 >= 0; --n2) {
        int n3 = sum - n1 - n2;
        if (n3 < 0 || n3 > n2) continue;
        for (int m = 0; m <= 2; ++m) {
          for (int l = 0; l <= 3; ++l) {
            PhiIndex pivot{m, n1, n2, n3, 3, l};
            if (!pivot.is_unknown() || values.count(pivot)) continue;
            static constexpr int weights[3] = {1, -3, 9};
            std::map<PhiIndex, Rational> combined;
            Rational combined_rhs(0);
            bool available = true;
            for (int n4 = 1; n4 <= 3 && available; ++n4) {
              auto it = by_source.find(conics::TIndex{m, n1, n2, n3, n4, l});
              if (it == by_source.end()) {
                available = false;
                break;
              }
              for (const auto& [idx, c] : it->second->lhs) {
                auto [slot, inserted] = combined.emplace(idx, Rational(weights[n4 - 1]) * c);
                if (!inserted) {
                  slot->second += Rational(weights[n4 - 1]) * c;
                  if (slot->second == 0) combined.erase(slot);
                }
              }
              combined_rhs += Rational(weights[n4 - 1]) * it->second->rhs;
            }
            if (available) try_equation(combined, combined_rhs);
          }
        }
      }
    }
  }

  // The corner of the grid where not all three instances exist closes by
  // substitution sweeps over the generated equations.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& eq : equations_) {
      ReducedEquation red = reduce_equation(eq.lhs, eq.rhs, values);
      if (red.unknowns.size() == 1) {
        const auto& [idx, coeff] = *red.unknowns.begin();
        values.emplace(idx, red.rhs / coeff);
        changed = true;
      }
    }
  }

  for (int m = 0; m <= 2; ++m) {
    for (int l = 0; l <= 3; ++l) {
      for (int n1 = 3; n1 >= 0; --n1) {
        for (int n2 = n1; n2 >= 0; --n2) {
          for (int n3 = n2; n3 >= 0; --n3) {
            PhiIndex idx{m, n1, n2, n3, 3, l};
            if (idx.is_unknown() && !values.count(idx)) {
              throw consistency_error("descent solve left " + idx.str() + " undetermined");
            }
          }
        }
      }
    }
  }
  return values;
}

std::map<PhiIndex, Rational> solve_linear_system(const std::vector<LinearEquation>& equations) {
  struct Row {
    std::map<PhiIndex, Rational> lhs;
    Rational rhs;
    std::optional<PhiIndex> pivot;
  };
  std::vector<Row> rows;
  std::set<PhiIndex> columns;
  for (const auto& eq : equations) {
    Row row;
    row.rhs = eq.rhs;
    for (const auto& [idx, c] : eq.lhs) {
      if (idx.n4 != 3) continue;
      row.lhs.emplace(idx, c);
      columns.insert(idx);
    }
    rows.push_back(std::move(row));
  }

  for (const PhiIndex& col : columns) {
    std::size_t pivot_row = rows.size();
    std::size_t pivot_size = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].pivot || !rows[r].lhs.count(col)) continue;
      if (pivot_row == rows.size() || rows[r].lhs.size() < pivot_size) {
        pivot_row = r;
        pivot_size = rows[r].lhs.size();
      }
    }
    if (pivot_row == rows.size()) {
      throw consistency_error("elimination: no pivot for " + col.str());
    }
    Row& p = rows[pivot_row];
    Rational inv = Rational(1) / p.lhs.at(col);
    for (auto& [idx, c] : p.lhs) c *= inv;
    p.rhs *= inv;
    p.pivot = col;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row) continue;
      auto it = rows[r].lhs.find(col);
      if (it == rows[r].lhs.end()) continue;
      Rational factor = it->second;
      for (const auto& [idx, c] : p.lhs) {
        auto [slot, inserted] = rows[r].lhs.emplace(idx, -factor * c);
        if (!inserted) {
          slot->second -= factor * c;
          if (slot->second == 0) rows[r].lhs.erase(slot);
        }
      }
      rows[r].rhs -= factor * p.rhs;
    }
  }

  std::map<PhiIndex, Rational> values;
  for (const Row& row : rows) {
    if (row.pivot) {
      if (row.lhs.size() != 1) {
        throw consistency_error("elimination: pivot row not fully reduced");
      }
      values.emplace(*row.pivot, row.rhs);
    } else if (row.rhs != 0) {
      throw consistency_error("elimination: inconsistent system (0 = " + to_string(row.rhs) + ")");
    } else if (!row.lhs.empty()) {
      throw consistency_error("elimination: residual row left unresolved");
    }
  }
  return values;
}

std::map<PhiIndex, Rational> Solver::solve_elimination() {
  ensure_equations();
  std::map<PhiIndex, Rational> values = solve_linear_system(equations_);
  // Every grid unknown must come out pinned.
  for (int m = 0; m <= 2; ++m) {
    for (int l = 0; l <= 3; ++l) {
      for (int n1 = 0; n1 <= 3; ++n1) {
        for (int n2 = 0; n2 <= 3; ++n2) {
          for (int n3 = 0; n3 <= 3; ++n3) {
            PhiIndex idx{m, n1, n2, n3, 3, l};
            if (idx.is_unknown() && !values.count(idx)) {
              throw consistency_error("elimination left " + idx.str() + " undetermined");
            }
          }
        }
      }
    }
  }
  return values;
}

Rational Solver::lookup(const std::map<PhiIndex, Rational>& table, const PhiIndex& idx) const {
  if (idx.n4 != 3) return Rational(0);
  auto it = table.find(idx);
  if (it == table.end()) {
    auto canon = table.find(idx.canonical());
    if (canon != table.end()) return canon->second;
    throw consistency_error("phi value missing for " + idx.str());
  }
  return it->second;
}

void Solver::ensure_solved() {
  if (solved_) return;
  std::map<PhiIndex, Rational> descent = solve_descent();
  std::map<PhiIndex, Rational> elim = solve_elimination();

  for (const auto& [idx, value] : elim) {
    if (lookup(descent, idx.canonical()) != value) {
      throw consistency_error("descent and elimination disagree at " + idx.str());
    }
  }
  // Both solutions must satisfy every generated equation.
  for (const auto* table : {&descent, &elim}) {
    for (const auto& eq : equations_) {
      Rational acc(0);
      for (const auto& [idx, c] : eq.lhs) {
        if (idx.n4 != 3) continue;
        acc += c * lookup(*table, idx);
      }
      if (acc != eq.rhs) {
        throw consistency_error("solved phi table violates an equation");
      }
    }
  }
  phi_ = std::move(descent);
  phi_elim_ = std::move(elim);
  solved_ = true;
}

const std::map<PhiIndex, Rational>& Solver::phi_table() {
  ensure_solved();
  return phi_;
}

const std::map<PhiIndex, Rational>& Solver::phi_table_eliminated() {
  ensure_solved();
  return phi_elim_;
}

Rational Solver::phi(const PhiIndex& idx) {
  ensure_solved();
  if (idx.n4 != 3) return Rational(0);
  if (idx.n1 >= 4 || idx.n2 >= 4 || idx.n3 >= 4 || idx.n4 >= 4) return Rational(0);
  if (idx.lambda3_exponent() < 0) return Rational(0);
  Monomial mono = phi_monomial(idx);
  if (cubic4_.is_normal_form(mono)) return lookup(phi_, idx);
  // Out-of-range exponents reduce through the ring rules (linear extension).
  Rational acc(0);
  const RingElement reduced = normalize(RingElement(mono), cubic4_);
  for (const auto& [m, c] : reduced.terms()) {
    acc += c * lookup(phi_, phi_index_of(m));
  }
  return acc;
}

Rational Solver::chain_A1F(int m, int j, int l) {
  if (m < 0 || j < 0 || l < 0) return Rational(0);
  if (m + j + l != 13) return Rational(0);
  return chain_of(RingElement(Monomial::of({{Gen::l1, m}, {Gen::l3, j}, {Gen::a, l}})));
}

Rational Solver::chain_of(const RingElement& lambda_a_element) {
  ensure_solved();
  for (const auto& [mono, c] : lambda_a_element.terms()) {
    if (mono.exponent(Gen::l1) + mono.exponent(Gen::l3) + mono.exponent(Gen::a) !=
        mono.total_degree()) {
      throw std::invalid_argument("chain_of: element outside the l1/l3/a subring");
    }
  }
  Rational acc(0);
  const Rational sixth = make_rational(1, 6);
  const RingElement reduced = normalize(lambda_a_element, cubic4_);
  for (const auto& [mono, c] : reduced.terms()) {
    int m = mono.exponent(Gen::l1);
    int j = mono.exponent(Gen::l3);
    int l = mono.exponent(Gen::a);
    if (m + j + l != 13) continue;
    acc += c * sixth * (phi(PhiIndex{m, 0, 0, 0, 3, l}) + conics_.eval_R3_paired(m, j, l));
  }
  return acc;
}

std::int64_t Solver::characteristic_number(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("characteristic_number: negative condition count");
  if (r + 2 * s != 11) return 0;
  const P3ConstraintClasses classes = p3_constraint_classes();
  RingElement conditions = power(classes.cubic_meets_line, r, cubic4_);
  conditions = multiply(conditions, power(classes.cubic_meets_point, s, cubic4_), cubic4_);
  conditions = multiply(conditions, power(classes.line_meets_line, 2, cubic4_), cubic4_);
  Rational value = chain_of(conditions);
  if (!is_integer(value) || value < 0 || !value.get_num().fits_slong_p()) {
    throw consistency_error("characteristic_number(" + std::to_string(r) + "," +
                            std::to_string(s) + ") is not a small non-negative integer: " +
                            to_string(value));
  }
  return static_cast<std::int64_t>(value.get_num().get_si());
}

RecursionVariantReport Solver::check_recursion_variant() {
  ensure_solved();
  RecursionVariantReport report;
  auto v = [&](int m, int a1, int a2, int a3, int l) -> Rational {
    if (a1 >= 4 || a2 >= 4 || a3 >= 4) return Rational(0);
    PhiIndex idx{m, a1, a2, a3, 3, l};
    if (idx.lambda3_exponent() < 0) return Rational(0);
    return phi(idx);
  };
  for (int m = 0; m <= 2; ++m) {
    for (int l = 0; l <= 3; ++l) {
      for (int n1 = 0; n1 <= 3; ++n1) {
        for (int n2 = 0; n2 <= 3; ++n2) {
          for (int n3 = 0; n3 <= 3; ++n3) {
            if (13 - (m + n1 + n2 + n3 + 3 + l) < 0) continue;  // all three instances defined
            Rational lhs = -v(m, n1 + 1, n2, n3, l) - v(m, n1, n2 + 1, n3, l) -
                           v(m, n1, n2, n3 + 1, l) + v(m, n1, n2, n3, l) +
                           Rational(3) * v(m, n1 + 2, n2, n3, l) +
                           Rational(3) * v(m, n1, n2 + 2, n3, l) +
                           Rational(3) * v(m, n1 + 3, n2, n3, l) -
                           Rational(9) * v(m, n1, n2 + 3, n3, l) -
                           Rational(9) * v(m, n1, n2, n3 + 3, l);
            Rational rhs = conics_.eval_T({m, n1, n2, n3, 1, l}) -
                           Rational(3) * conics_.eval_T({m, n1, n2, n3, 2, l}) +
                           Rational(9) * conics_.eval_T({m, n1, n2, n3, 3, l});
            ++report.instances;
            if (lhs == rhs) {
              ++report.matches;
            } else {
              ++report.mismatches;
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace charnum::fbcubic
