#pragma once

#include <stdexcept>
#include <string>

namespace lcubes {

/// Input that violates a schema or a value invariant (bad JSON, overlapping
/// cubes, arity mismatch, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rewrite move or operation was requested where its precondition fails.
class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lcubes
