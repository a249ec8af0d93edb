#include "charnum/selfcheck/acceptance.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "charnum/fbcubic.hpp"
#include "charnum/planar.hpp"
#include "charnum/selfcheck/binary_forms.hpp"
#include "charnum/selfcheck/dense_oracle.hpp"

namespace charnum::selfcheck {

namespace {

using planar::Invariant;

std::string fail_detail(const std::ostringstream& out) {
  std::string s = out.str();
  return s.empty() ? "ok" : s;
}

CriterionResult cubic_characteristic_numbers(fbcubic::Solver& solver) {
  CriterionResult r{"cubic-characteristic-numbers", true, ""};
  const std::array<std::array<std::int64_t, 3>, 4> expected = {
      {{11, 0, 12960}, {9, 1, 1392}, {7, 2, 144}, {5, 3, 12}}};
  std::ostringstream out;
  for (const auto& [rr, ss, want] : expected) {
    std::int64_t got = solver.characteristic_number(static_cast<int>(rr), static_cast<int>(ss));
    if (got != want) {
      r.pass = false;
      out << " N(" << rr << "," << ss << ")=" << got << " want " << want << ";";
    }
  }
  r.detail = r.pass ? "N(11,0)=12960 N(9,1)=1392 N(7,2)=144 N(5,3)=12" : fail_detail(out);
  return r;
}

CriterionResult cuspidal_count_table() {
  CriterionResult r{"cuspidal-count-table", true, ""};
  const std::array<std::int64_t, 6> expected = {24, 72, 144, 240, 360, 504};
  std::ostringstream out;
  for (int d = 3; d <= 8; ++d) {
    std::int64_t got = planar::count(Invariant::A2, d);
    if (got != expected[static_cast<std::size_t>(d - 3)]) {
      r.pass = false;
      out << " a2(" << d << ")=" << got << ";";
    }
  }
  r.detail = r.pass ? "a2(3..8) = 24 72 144 240 360 504" : fail_detail(out);
  return r;
}

CriterionResult closed_form_counts() {
  CriterionResult r{"closed-form-counts", true, ""};
  std::ostringstream out;
  for (int d = 2; d <= 12; ++d) {
    std::int64_t dd = d;
    if (planar::count(Invariant::A1, d) != 3 * (dd - 1) * (dd - 1)) {
      r.pass = false;
      out << " a1(" << d << ");";
    }
    if (planar::count(Invariant::A1L, d) != 3 * (dd - 1)) {
      r.pass = false;
      out << " a1l(" << d << ");";
    }
    if (planar::count(Invariant::A2, d) != 12 * (dd - 1) * (dd - 2)) {
      r.pass = false;
      out << " a2(" << d << ");";
    }
  }
  r.detail = r.pass ? "a1=3(d-1)^2, a1l=3(d-1), a2=12(d-1)(d-2) for d=2..12" : fail_detail(out);
  return r;
}

CriterionResult vanishing_law(fbcubic::Solver& solver) {
  CriterionResult r{"vanishing-law", true, ""};
  std::ostringstream out;
  for (int s = 4; 11 - 2 * s >= 0; ++s) {
    int rr = 11 - 2 * s;
    if (solver.characteristic_number(rr, s) != 0) {
      r.pass = false;
      out << " N(" << rr << "," << s << ") != 0;";
    }
  }
  for (int rr = 0; rr <= 13; ++rr) {
    for (int s = 0; s <= 7; ++s) {
      if (rr + 2 * s == 11) continue;
      if (solver.characteristic_number(rr, s) != 0) {
        r.pass = false;
        out << " N(" << rr << "," << s << ") != 0;";
      }
    }
  }
  r.detail = r.pass ? "zero for s >= 4 and for every r + 2s != 11" : fail_detail(out);
  return r;
}

void enumerate_top_monomials(const RingSpec& spec, std::size_t gen_index, Monomial prefix,
                             int remaining, std::vector<Monomial>& out) {
  const auto& gens = spec.generators();
  if (gen_index == gens.size()) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  Gen g = gens[gen_index];
  int cap = spec.rule_for(g)->power - 1;
  for (int e = 0; e <= std::min(cap, remaining); ++e) {
    Monomial next = prefix;
    if (e > 0) next.mul_in(g, e);
    enumerate_top_monomials(spec, gen_index + 1, next, remaining - e, out);
  }
}

CriterionResult ring_oracle_equivalence() {
  CriterionResult r{"ring-oracle-equivalence", true, ""};
  std::ostringstream out;
  std::mt19937 rng(20240817);
  const std::array<SpaceKind, 3> kinds = {
      SpaceKind{Family::Cubic, 1, 4}, SpaceKind{Family::Conic, 1, 4},
      SpaceKind{Family::ThreeLines, 1, 4}};
  for (const SpaceKind& kind : kinds) {
    RingSpec spec = build_ring(kind);
    std::vector<Monomial> tops;
    enumerate_top_monomials(spec, 0, Monomial::unit(), spec.dimension(), tops);
    for (const Monomial& m : tops) {
      RingElement e{m};
      if (integrate(e, spec) != dense_integrate(spec, e)) {
        r.pass = false;
        out << " top monomial mismatch in " << spec.name() << ";";
      }
    }
    int non_normal = 0;
    int checked = 0;
    while (non_normal < 1000) {
      Monomial m;
      for (Gen g : spec.generators()) {
        std::uniform_int_distribution<int> dist(0, spec.rule_for(g)->power + 2);
        if (int e = dist(rng); e > 0) m.mul_in(g, e);
      }
      if (spec.is_normal_form(m)) continue;
      ++non_normal;
      ++checked;
      RingElement e{m};
      if (integrate(e, spec) != dense_integrate(spec, e)) {
        r.pass = false;
        out << " random monomial mismatch in " << spec.name() << ": " << m.str() << ";";
        break;
      }
    }
    (void)checked;
  }
  r.detail = r.pass ? "dense-truncation oracle agrees on all top monomials and 1000 random non-normal-form monomials per ring"
                    : fail_detail(out);
  return r;
}

CriterionResult phi_solver_consistency(fbcubic::Solver& solver) {
  CriterionResult r{"phi-solver-consistency", true, ""};
  std::ostringstream out;
  const auto& descent = solver.phi_table();
  const auto& elim = solver.phi_table_eliminated();
  std::size_t compared = 0;
  for (const auto& [idx, value] : elim) {
    auto it = descent.find(idx.canonical());
    if (it == descent.end() || it->second != value) {
      r.pass = false;
      out << " mismatch at " << idx.str() << ";";
    }
    ++compared;
  }
  for (const auto& [idx, value] : descent) {
    if (!elim.count(idx)) {
      r.pass = false;
      out << " canonical index missing from elimination: " << idx.str() << ";";
    }
  }
  std::ostringstream okmsg;
  okmsg << "descent back-substitution equals exact elimination on " << compared << " unknowns";
  r.detail = r.pass ? okmsg.str() : fail_detail(out);
  return r;
}

CriterionResult symmetry_suite(fbcubic::Solver& solver) {
  CriterionResult r{"symmetry-suite", true, ""};
  std::ostringstream out;
  conics::Evaluator& conic = solver.conic_evaluator();
  const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int m = 0; m <= 2 && r.pass; ++m) {
    for (int n1 = 0; n1 <= 3 && r.pass; ++n1) {
      for (int n2 = 0; n2 <= 3 && r.pass; ++n2) {
        for (int n3 = 0; n3 <= 3 && r.pass; ++n3) {
          for (int n4 = 1; n4 <= 3 && r.pass; ++n4) {
            for (int l = 0; l <= 3 && r.pass; ++l) {
              std::array<int, 3> ns = {n1, n2, n3};
              Rational base = conic.eval_T({m, n1, n2, n3, n4, l});
              for (const auto& p : perms) {
                Rational permuted = conic.eval_T({m, ns[static_cast<std::size_t>(p[0])],
                                                  ns[static_cast<std::size_t>(p[1])],
                                                  ns[static_cast<std::size_t>(p[2])], n4, l});
                if (permuted != base) {
                  r.pass = false;
                  out << " T not symmetric at (" << m << "," << n1 << "," << n2 << "," << n3
                      << "," << n4 << "," << l << ");";
                  break;
                }
              }
            }
          }
        }
      }
    }
  }
  for (const auto& [idx, value] : solver.phi_table_eliminated()) {
    std::array<int, 3> ns = {idx.n1, idx.n2, idx.n3};
    for (const auto& p : perms) {
      fbcubic::PhiIndex permuted{idx.m, ns[static_cast<std::size_t>(p[0])],
                                 ns[static_cast<std::size_t>(p[1])],
                                 ns[static_cast<std::size_t>(p[2])], idx.n4, idx.l};
      if (solver.phi_table_eliminated().at(permuted) != value) {
        r.pass = false;
        out << " phi not symmetric at " << idx.str() << ";";
        break;
      }
    }
    if (!r.pass) break;
  }
  r.detail = r.pass ? "T and phi invariant under all permutations of (n1,n2,n3) over the full grid"
                    : fail_detail(out);
  return r;
}

CriterionResult tangency_input_oracles() {
  CriterionResult r{"tangency-input-oracles", true, ""};
  std::ostringstream out;
  for (int d : {2, 3, 4}) {
    int got = pencil_tangency_count(d, 9000u + static_cast<unsigned>(d));
    std::int64_t want = planar::count(Invariant::T1, d);
    if (got != want || want != 2 * (d - 1)) {
      r.pass = false;
      out << " t1(" << d << ") oracle=" << got << " table=" << want << ";";
    }
  }
  for (int d : {3, 4}) {
    int got = triple_root_net_count(d, 9100u + static_cast<unsigned>(d));
    std::int64_t want = planar::count(Invariant::T2, d);
    if (got != want || want != 3 * (d - 2)) {
      r.pass = false;
      out << " t2(" << d << ") oracle=" << got << " table=" << want << ";";
    }
  }
  int unique_count = 0;
  for (unsigned i = 0; i < 100; ++i) {
    if (unique_fixed_point_tangent(3, 9200u + i)) ++unique_count;
  }
  if (unique_count != 100 || planar::count(Invariant::T1Pt, 3) != 1) {
    r.pass = false;
    out << " t1pt unique in " << unique_count << "/100 instances;";
  }
  r.detail = r.pass ? "t1 = 2(d-1) for d=2..4, t2 = 3(d-2) for d=3..4, t1pt unique on 100/100 instances"
                    : fail_detail(out);
  return r;
}

CriterionResult cross_module_consistency(fbcubic::Solver& solver) {
  CriterionResult r{"cross-module-consistency", true, ""};
  std::int64_t family = solver.characteristic_number(5, 3);
  std::int64_t plane = planar::count(Invariant::A1, 3);
  r.pass = (family == 12 && plane == 12);
  std::ostringstream out;
  out << "N(5,3)=" << family << " equals nodal cubic count a1(3)=" << plane;
  r.detail = out.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_criteria() {
  std::vector<CriterionResult> results;
  fbcubic::Solver solver;
  results.push_back(cubic_characteristic_numbers(solver));
  results.push_back(cuspidal_count_table());
  results.push_back(closed_form_counts());
  results.push_back(vanishing_law(solver));
  results.push_back(ring_oracle_equivalence());
  results.push_back(phi_solver_consistency(solver));
  results.push_back(symmetry_suite(solver));
  results.push_back(tangency_input_oracles());
  results.push_back(cross_module_consistency(solver));
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

}  // namespace charnum::selfcheck
