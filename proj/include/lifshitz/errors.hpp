#pragma once

#include <stdexcept>
#include <string>

namespace lifshitz {

/// Precondition violated by a caller-supplied argument.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures of the numerical machinery. The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Argument outside the domain of a mathematical function (log of a non-positive
/// quantity, polylog outside [0,1), ...).
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Two independent routes to the same quantity disagree beyond their error budgets.
class MethodDisagreement : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StepTooLarge : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IllConditionedFit : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace detail
}  // namespace lifshitz
