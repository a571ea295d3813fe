#pragma once

// Named verification suites comparing closed forms, recurrences, formulas
// and bijections against brute force and against each other.

#include <optional>
#include <string>
#include <vector>

#include "flatcat/poly.hpp"

namespace flatcat {

struct VerifyCase {
  std::string id;
  int n_lo = 0;
  int n_hi = 0;
  bool pass = true;
  std::string detail;  // first mismatch when failing
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCase> cases;
  double elapsed = 0.0;

  bool passed() const;
  /// {"suite":..,"cases":[{"id","n_range":[lo,hi],"status","detail"}],"elapsed":..}
  Json to_json() const;
};

struct VerifyOptions {
  int max_n = 10;        // brute-force bound
  int terms = 20;        // series order for generating-function identities
  unsigned threads = 1;  // workers for large enumerations
  bool timing = true;    // false pins elapsed to 0 for byte-stable output
};

/// cardinality, table1, theorems, functional, recurrences, totals, avoiders,
/// bijections, equidistribution, all.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown suite name.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace flatcat
