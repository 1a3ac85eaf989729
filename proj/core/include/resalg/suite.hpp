#pragma once

#include <string>
#include <vector>

namespace resalg {

enum class CheckStatus { Pass, Fail, Skip };

struct SuiteCheck {
  std::string name;    // stable identifier, e.g. "diamond-battery"
  std::string anchor;  // statement the check verifies, e.g. "Thm 5.3"
  CheckStatus status = CheckStatus::Skip;
  std::string detail;  // witness description on failure
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  bool all_passed() const;
};

/// Runs the verification battery; checks whose name contains `only` when it
/// is nonempty, all checks otherwise. Deterministic up to the timing fields.
SuiteReport run_paper_suite(const std::string& only = "");

std::vector<std::string> paper_suite_check_names();

}  // namespace resalg
