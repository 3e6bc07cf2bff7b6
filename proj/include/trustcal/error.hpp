#pragma once

#include <stdexcept>
#include <string>

namespace trustcal {

// Malformed user input: files, flags, record payloads. The CLI maps these to
// exit code 2; any other exception is treated as an internal error (exit 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInputError : public InputError {
 public:
  EmptyInputError() : InputError("empty input") {}
  explicit EmptyInputError(const std::string& what) : InputError(what) {}
};

// Input whose fitting objective is flat, so no meaningful optimum exists.
class DegenerateInputError : public InputError {
 public:
  using InputError::InputError;
};

// The opinion -> evidence mapping is undefined when uncertainty is zero.
class DogmaticOpinionError : public std::domain_error {
 public:
  DogmaticOpinionError()
      : std::domain_error(
            "dogmatic opinion: uncertainty is zero, evidence mapping undefined") {}
};

// Cumulative fusion of two dogmatic opinions has a vanishing denominator.
class DualDogmaticError : public std::domain_error {
 public:
  DualDogmaticError()
      : std::domain_error(
            "cannot fuse two dogmatic opinions (both uncertainties are zero)") {}
};

}  // namespace trustcal
