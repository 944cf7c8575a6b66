#pragma once

#include <string>
#include <vector>

namespace daf {

struct CriterionResult {
  int index = 0;
  std::string label;
  bool pass = false;
  std::string detail;  // first failure or a short metric summary
  double seconds = 0.0;
};

/// Full acceptance battery, deterministic, in a fixed order. Each entry is
/// independent: a failure records its diagnostic and the run continues.
std::vector<CriterionResult> run_acceptance();

}  // namespace daf
