#pragma once

#include <stdexcept>
#include <string>

namespace pnt {

// Base of every error raised by the library. The CLI maps CertificationError
// to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Magnitude outside what the representation may hold.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Query beyond the coverage of loaded data (sieve limit, zero catalog height).
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A computed bound does not meet the published target it is checked against.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace pnt
