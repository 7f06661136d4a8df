#pragma once
// Named verification batteries behind `morsekit verify <group>`. Each check
// recomputes a fact two independent ways and reports one line.

#include <string>
#include <vector>

namespace morsekit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

const std::vector<std::string>& verification_groups();

// group is one of verification_groups() or "all"; order is the series
// truncation used by the generating-function checks
std::vector<CheckResult> run_verification(const std::string& group,
                                          std::size_t order = 16);

}  // namespace morsekit
