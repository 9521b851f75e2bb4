#pragma once

#include <stdexcept>
#include <string>

namespace moran {

// Input failed a structural precondition (bad vector, malformed text, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleDetected : ValidationError {
  using ValidationError::ValidationError;
};

struct MultipleParents : ValidationError {
  using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

struct DomainError : ValidationError {
  using ValidationError::ValidationError;
};

// Enumeration refused: the state space is too large for an exact oracle.
struct TooLarge : ValidationError {
  using ValidationError::ValidationError;
};

// No exact reference law exists for the requested statistic/size pair.
struct IncompatibleReference : ValidationError {
  using ValidationError::ValidationError;
};

// Lazy expansion of the local limit hit its node budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

// The exact stationary solve hit a non-stochastic kernel or singular system.
struct SolverDegenerate : InternalCheckError {
  using InternalCheckError::InternalCheckError;
};

}  // namespace moran
