#pragma once

#include <stdexcept>
#include <string>

namespace cohsys {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The numerical data admits no extension with the requested Segre invariant.
class FeasibilityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// c2 lies in none of the windows covered by a closed-form statement.
class RangeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A chamber query was made at a critical parameter.
class CriticalInputError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NegativeDimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Gr(2, H^0(O(r-s))) is empty.
class EmptyGrassmannianError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Random point generation exhausted its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (an identity that must hold did not).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace cohsys
