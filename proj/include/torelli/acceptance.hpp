#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace torelli::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Runs every acceptance criterion in order, printing one line per criterion
/// to `out` as it finishes. A criterion passes only within its time budget.
std::vector<CriterionResult> run_all(std::ostream& out);

/// Prints the summary line and returns 0 iff every criterion passed.
int report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace torelli::acceptance
