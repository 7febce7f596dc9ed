#pragma once

#include <stdexcept>
#include <string>

namespace octacat {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Partition construction.
class DuplicateVertex : public Error {
 public:
  using Error::Error;
};
class MissingVertex : public Error {
 public:
  using Error::Error;
};
class OutOfRangeVertex : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};
class CategoryMismatch : public Error {
 public:
  using Error::Error;
};
class NotEndomorphism : public Error {
 public:
  using Error::Error;
};
class NotIdempotent : public Error {
 public:
  using Error::Error;
};
class CompressionViolation : public Error {
 public:
  using Error::Error;
};
class NotEven : public Error {
 public:
  using Error::Error;
};
class ArityMismatch : public Error {
 public:
  using Error::Error;
};
class DatumViolation : public Error {
 public:
  using Error::Error;
};
class TooLarge : public Error {
 public:
  using Error::Error;
};
class SpecializationMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace octacat
