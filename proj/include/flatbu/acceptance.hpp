#pragma once

#include <string>
#include <vector>

namespace flatbu {

struct CriterionResult {
  int number = 0;  // 1..8 for acceptance criteria, 0 for supplementary checks
  std::string title;
  bool passed = false;
  std::vector<std::string> details;  // one line per failed (or noteworthy) item
};

inline constexpr int kCriterionCount = 8;

/// Runs one acceptance criterion, 1-based. Throws std::out_of_range otherwise.
CriterionResult run_criterion(int number);
std::vector<CriterionResult> run_acceptance();

/// Catalog consistency, class constancy, certificate/index agreement,
/// quotient-form independence and lift-witness soundness.
std::vector<CriterionResult> run_supplementary_checks();

}  // namespace flatbu
