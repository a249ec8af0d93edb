// Acceptance suite: runs every criterion and prints one pass/fail line each.

#include <chrono>
#include <cstdio>

#include "charnum/selfcheck/acceptance.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  auto results = charnum::selfcheck::run_acceptance_criteria();
  int index = 0;
  for (const auto& r : results) {
    ++index;
    std::printf("%s %d %s: %s\n", r.pass ? "PASS" : "FAIL", index, r.name.c_str(),
                r.detail.c_str());
  }
  auto seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() - start).count();
  bool ok = charnum::selfcheck::all_passed(results);
  std::printf("%s (%d criteria, %.1f s)\n", ok ? "ALL PASSED" : "FAILURES PRESENT",
              static_cast<int>(results.size()), seconds);
  return ok ? 0 : 1;
}
