#pragma once

#include <stdexcept>
#include <string>

namespace gl11 {

/// Evaluation at a point where a formula is singular (zero normalization,
/// pole of a Q-ratio, root at a forbidden value).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input violates an operation precondition (non-generic inhomogeneities,
/// wrong boundary kind, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; signals a construction or sign bug.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative solver did not converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gl11
