#pragma once

#include <stdexcept>
#include <string>

namespace superdop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must live on the same chart do not.
class ChartMismatch : public Error {
 public:
  using Error::Error;
};

/// An object has the wrong parity for the requested operation.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// A coordinate index or chart size is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed (order too high, form not closed, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace superdop
