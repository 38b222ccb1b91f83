#pragma once

#include <stdexcept>
#include <string>

namespace dmoments {

// Base for every error raised by the library. The CLI maps the concrete
// type onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

class RegimeViolationError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public NonConvergenceError {
 public:
  QuadratureError(const std::string& what, double previous, double last)
      : NonConvergenceError(what), previous_(previous), last_(last) {}

  double previous_estimate() const noexcept { return previous_; }
  double last_estimate() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

}  // namespace dmoments
