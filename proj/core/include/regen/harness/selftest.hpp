#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regen::harness {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Exhaustive small-parameter invariant suites: field axioms, every
/// reconstruction subset, every single-node repair, partial-download
/// equivalence and file-format round trips.
std::vector<SuiteResult> run_selftest();

/// Prints one line per suite; returns true when all passed.
bool print_selftest(std::ostream& out, const std::vector<SuiteResult>& results);

}  // namespace regen::harness
