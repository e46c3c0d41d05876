#pragma once

// Release acceptance suite: ten numbered criteria covering the special
// functions, residuals of the closed-form families, the porous-medium front
// law, simulator convergence, collapse, erratum detection, plot data and the
// exponent constraints.

#include <string>
#include <vector>

namespace eulerheat::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Runs the listed criteria (all when empty), in ascending id order.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids = {});

/// "[PASS] 3 quasi-stationary residuals: ..." style line.
std::string format_line(const CriterionResult& r);

}  // namespace eulerheat::acceptance
