#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boundscope {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: dimension mismatch, invalid box, bad configuration.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Polynomial expression that does not conform to the grammar.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Base for failures of the numerical machinery.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// B was not numerically positive definite.
class ConditioningError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Adaptive quadrature did not reach the requested tolerance.
class AccuracyError : public NumericError {
 public:
  AccuracyError(const std::string& what, double previous, double last)
      : NumericError(what), previous_(previous), last_(last) {}

  [[nodiscard]] double previous_estimate() const noexcept { return previous_; }
  [[nodiscard]] double last_estimate() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

/// A computation would leave the representable range of doubles.
class RangeError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Operation only defined for a particular number of variables.
class UnsupportedDimension : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace boundscope
