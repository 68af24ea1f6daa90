#pragma once

#include <string>
#include <vector>

namespace potentia {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

inline bool all_pass(const std::vector<CheckResult>& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return true;
}

}  // namespace potentia
