#pragma once

#include <stdexcept>
#include <string>

namespace soergel {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1 (bad input) unless a subclass says otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A KL basis coefficient left vZ[v] or a triangularity check failed. This is
/// an internal consistency failure, never a property of valid input.
class DegreeViolation : public Error {
 public:
  using Error::Error;
};

class NotEffective : public Error {
 public:
  using Error::Error;
};

class InvalidTarget : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class SplitFailed : public Error {
 public:
  using Error::Error;
};

/// Raised by the fixed-width KL engine when a coefficient leaves int64 range.
class KernelOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace soergel
