#pragma once

#include <stdexcept>
#include <string>

namespace probgems {

/// Violated precondition on an argument (out-of-range index, p outside (0,1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested method does not apply to the query; the caller should use
/// the named alternative instead.
class MethodInapplicable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Floating-point breakdown or an iteration that failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotConverged : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace probgems
