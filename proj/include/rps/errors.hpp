#pragma once

#include <stdexcept>

namespace rps {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematically undefined request: an element absent from an event,
/// negation on a singleton frame, a kernel over two empty events.
class domain_error : public error {
 public:
  using error::error;
};

/// Input data that violates a mass-function invariant (duplicate events,
/// masses outside [0,1], total mass away from 1, nonzero mass on the
/// empty event).
class validation_error : public error {
 public:
  using error::error;
};

/// An exact integer count left the 64-bit range.
class overflow_error : public error {
 public:
  using error::error;
};

/// An enumeration request beyond the configured frame-size cap.
class resource_error : public error {
 public:
  using error::error;
};

/// A malformed model file.
class parse_error : public error {
 public:
  using error::error;
};

/// A floating-point result outside its contract, e.g. a squared distance
/// more negative than rounding noise can explain.
class numerical_error : public error {
 public:
  using error::error;
};

}  // namespace rps
