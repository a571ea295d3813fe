#pragma once

#include <stdexcept>
#include <string>

namespace flatcat {

// Malformed arguments: empty words, bad patterns, out-of-range n, etc.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested pattern or identifier has no catalog entry / formula.
class NotInCatalog : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Rational function whose denominator cannot be normalized to constant term 1.
class NonExpandable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two routes that must agree did not (e.g. u/v/w recurrence vs. definition).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace flatcat
