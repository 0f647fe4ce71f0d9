#pragma once

#include <stdexcept>
#include <string>

namespace gradelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, inverse of a singular matrix, and similar.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Incompatible shapes, orders or ambient dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input (JSON, names, partitions, labelings).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A search or closure exceeded its configured cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace gradelab
