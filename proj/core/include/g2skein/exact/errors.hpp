#pragma once

#include <stdexcept>
#include <string>

namespace g2skein::exact {

// Base class for every error raised by the exact arithmetic layer.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public ArithmeticError {
 public:
  DivisionByZero() : ArithmeticError("division by the zero expression") {}
  explicit DivisionByZero(const std::string& what) : ArithmeticError(what) {}
};

class ExponentOverflow : public ArithmeticError {
 public:
  ExponentOverflow() : ArithmeticError("monomial exponent out of range") {}
};

// A substitution sent a denominator factor to the zero polynomial.
class DegenerateSubstitution : public ArithmeticError {
 public:
  explicit DegenerateSubstitution(std::string factor)
      : ArithmeticError("denominator factor vanishes identically after substitution: " + factor),
        factor_(std::move(factor)) {}

  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

}  // namespace g2skein::exact
