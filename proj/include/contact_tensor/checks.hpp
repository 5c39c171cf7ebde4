#pragma once

#include <string>
#include <vector>

namespace ctensor {

/// Outcome of one exact identity check. `detail` names the first failing
/// component when `passed` is false.
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace ctensor
