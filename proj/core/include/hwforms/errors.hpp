#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hwforms {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MeshError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

/// Raised when a quadrature point sees J = θ¹∧θ² <= 0, where ln J is undefined.
class NonPositiveJacobian : public Error {
public:
  NonPositiveJacobian(double jacobian, std::ptrdiff_t element = -1)
      : Error(make_message(jacobian, element)), jacobian_(jacobian), element_(element) {}

  double jacobian() const noexcept { return jacobian_; }
  /// Offending triangle, or -1 when raised outside of an element loop.
  std::ptrdiff_t element() const noexcept { return element_; }

private:
  static std::string make_message(double jacobian, std::ptrdiff_t element) {
    std::string msg = "non-positive Jacobian J=" + std::to_string(jacobian);
    if (element >= 0) msg += " in element " + std::to_string(element);
    return msg;
  }

  double jacobian_;
  std::ptrdiff_t element_;
};

class LinearSolveFailure : public Error {
public:
  using Error::Error;
};

class NoConvergence : public Error {
public:
  using Error::Error;
};

class LineSearchExhausted : public Error {
public:
  using Error::Error;
};

}  // namespace hwforms
