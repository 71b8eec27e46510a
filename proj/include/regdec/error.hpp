#pragma once

#include <stdexcept>
#include <string>

namespace regdec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
/// This is an implementation bug, never a data condition.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace regdec
