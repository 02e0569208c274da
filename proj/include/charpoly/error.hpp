#pragma once

#include <stdexcept>
#include <string>

namespace charpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (pole outside the disc,
/// coincident parameters, vanishing denominator, wrong parity, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, parameter lists, JSON payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Exact computation refused because the problem exceeds the desk-scale limits.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace charpoly
