#pragma once

#include <stdexcept>
#include <string>

namespace flowext {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed data: ids out of range, bad JSON, wrong dimensions.
class InputError : public Error {
 public:
  using Error::Error;
};

// The operation needs a validated (acyclic, trimmed) network or some other
// state the caller did not establish.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the explicit budget.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// A builder produced something inconsistent with its own closed form.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace flowext
