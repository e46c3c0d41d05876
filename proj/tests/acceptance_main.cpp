#include <iostream>

#include "eulerheat/acceptance.hpp"

int main() {
  using namespace eulerheat::acceptance;
  bool ok = true;
  for (const auto& r : run_criteria()) {
    std::cout << format_line(r) << std::endl;
    ok = ok && r.passed;
  }
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return ok ? 0 : 1;
}
