#pragma once

#include <stdexcept>
#include <string>

namespace qae {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (bad header, unparseable line).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An orbital or variable index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Two stored values for the same entry disagree beyond tolerance.
class ConflictError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition was violated (asymmetric matrix,
/// mismatched electron counts, zero step size).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An inconsistent or unusable configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A size limit (basis dimension, enumeration width) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be nonzero degenerated to zero.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A scan produced no usable solution at any point.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qae
