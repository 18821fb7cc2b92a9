#pragma once

#include <stdexcept>
#include <string>

namespace tpsgeo {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class DegeneratePlaneError : public Error {
 public:
  using Error::Error;
};

class NotClosedError : public Error {
 public:
  using Error::Error;
};

class NumericDomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateSurfaceError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace tpsgeo
