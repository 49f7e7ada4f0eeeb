#pragma once

#include <stdexcept>
#include <string>

namespace specsum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or argument violation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A query point lies in the spectrum of a coordinate where the operation
// requires a resolvent point.
class SpectrumHit : public Error {
 public:
  using Error::Error;
};

// The model cannot answer the query (e.g. eigenvalue enumeration of a shift).
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

// The tail rule does not certify what the operation needs.
class UncertifiableTail : public Error {
 public:
  using Error::Error;
};

// Dense eigensolver or SVD failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class TruncationCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace specsum
