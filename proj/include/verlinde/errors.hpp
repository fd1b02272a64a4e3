#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad prime, index out of range, malformed input).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A brute-force construction would exceed the configured dimension cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// exact_div found no integral quotient.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// Input data is inconsistent with the structure it claims to describe.
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

}  // namespace verlinde
