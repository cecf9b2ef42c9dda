// Cross-oracle consistency checks, run by `tierperm check`.

#pragma once

#include <string>
#include <vector>

namespace tierperm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample or a short summary
};

struct ValidationOptions {
  int max_n = 9;  // exhaustive length bound; individual checks may use less
  unsigned threads = 1;
};

std::vector<CheckResult> run_validation(const ValidationOptions& options);

}  // namespace tierperm
