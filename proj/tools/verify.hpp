#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace mmk::verify {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Property checks over su2 levels k <= 32 and minimal models 3 <= m <= max_m
/// (enumeration is capped at m <= 12). `workers` is passed to the enumerator.
std::vector<CheckResult> run_all(int max_m, unsigned workers = 0);

/// Writes one PASS/FAIL line per check; returns true when all passed.
bool report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace mmk::verify
