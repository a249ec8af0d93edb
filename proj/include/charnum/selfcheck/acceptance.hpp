#pragma once

#include <string>
#include <vector>

namespace charnum::selfcheck {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full verification suite; one result per criterion.
std::vector<CriterionResult> run_acceptance_criteria();

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace charnum::selfcheck
