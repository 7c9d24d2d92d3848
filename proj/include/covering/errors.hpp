#pragma once

#include <stdexcept>
#include <string>

namespace covering {

/// Caller passed arguments that violate an operation's precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested full-space scan exceeds the configured enumeration guard.
class GuardError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Bound parameters outside the feasible region (e.g. x <= R ln y).
class InfeasibleError : public UsageError {
 public:
  using UsageError::UsageError;
};

/// Malformed input file or text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace covering
