#pragma once

#include <stdexcept>

namespace spaceprint {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation requires at least one record but the dataset has none.
class EmptyDataset : public Error {
 public:
  using Error::Error;
};

// A container argument (vector list, matrix, label list, ...) was empty.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

// Numeric parameters violate a precondition (fd % fr != 0, t >= fd, ...).
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

// Two feature vectors do not share a layout and cannot be compared.
class IncomparableVectors : public Error {
 public:
  using Error::Error;
};

// The data is well-formed but too small for the requested computation.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

// A configuration struct holds out-of-range fields.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// A record or argument is malformed (empty id, negative timestamp, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A file or string could not be parsed; messages carry the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spaceprint
