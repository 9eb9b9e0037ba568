#pragma once

#include <stdexcept>
#include <string>

namespace concord {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that the pipeline does not support (CLI exit code 2).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// gcd(cover order, a*b) > 1 where coprimality is required.
class NotCoprimeError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

// Every Diophantine candidate for a Brieskorn plumbing failed.
class NoAdmissibleGraphError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

class TooManyBadVerticesError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

class NotNegativeDefiniteError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

// The d-invariant search exceeded its state cap (CLI exit code 3).
class StateBudgetExceededError : public Error {
 public:
  using Error::Error;
};

// The +-3-surgery spin-c selection rule did not single out one class.
class SelectionAmbiguousError : public Error {
 public:
  using Error::Error;
};

// Certified numerics could not separate an eigenvalue from zero.
class EigenvalueNearZeroError : public Error {
 public:
  using Error::Error;
};

// Malformed .plb input; message carries a line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A golden-table cell disagreed with the computed value (CLI exit code 4).
class TableMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace concord
