#pragma once

#include <stdexcept>
#include <string>

namespace ircsna {

/// Base class for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input file or path could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (graph CSV, corpus records, config files).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A caller violated a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace ircsna
