#pragma once

#include <stdexcept>
#include <string>

namespace mpp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidSupport : public Error {
 public:
  using Error::Error;
};

class InvalidStepSequence : public Error {
 public:
  using Error::Error;
};

class InvalidLatticePath : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Raised when a secondary direction does not single out a unique next vertex.
class NonGenericOmega : public Error {
 public:
  using Error::Error;
};

class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mpp
