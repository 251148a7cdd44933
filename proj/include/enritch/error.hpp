#pragma once

#include <stdexcept>
#include <string>

namespace enritch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input documents and tables.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Values from two different quantale instances were combined.
class InstanceMismatch : public Error {
 public:
  using Error::Error;
};

// Incompatible typed sets, relation shapes or diagonal endpoints.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The operation needs a finite quantale.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction did not. Always a bug or a bad table.
class LawViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace enritch
