// Prints one PASS/FAIL line per acceptance criterion. With a criterion number
// as the only argument, runs just that one; the exit code is nonzero on failure.
#include <cstdlib>
#include <iostream>
#include <string>

#include "flatbu/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace flatbu;
  std::vector<CriterionResult> results;
  if (argc > 1) {
    results.push_back(run_criterion(std::atoi(argv[1])));
  } else {
    results = run_acceptance();
  }
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.number << ": " << r.title << '\n';
    for (const auto& d : r.details) std::cout << "        " << d << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
