#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subplanck {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed_s = 0.0;
};

// Runs the full acceptance battery. When progress is non-null, one
// "criterion N (<name>): PASS/FAIL" line is printed per criterion.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace subplanck
