#pragma once

#include <string>
#include <vector>

namespace scoreseq {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

constexpr unsigned kMaxOracle = 13;

// Cross-module identity suite. Each check is isolated: an exception inside a
// check marks that check failed and the rest still run. max_oracle bounds the
// brute-force enumerations and must lie in [1, 13].
std::vector<CheckResult> run_verification(unsigned max_oracle = 12);

}  // namespace scoreseq
