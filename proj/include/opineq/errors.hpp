#pragma once

#include <stdexcept>
#include <string>

namespace opineq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input matrix is too far from symmetric to be symmetrized silently.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

/// Fractional or negative power requested on a near-singular matrix.
class IllConditioned : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A scalar function produced a non-finite value on the spectrum.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: bad JSON, missing fields, bad flag values.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The inputs of an inequality check do not satisfy its hypotheses.
/// Never used to signal that an inequality failed.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace opineq
