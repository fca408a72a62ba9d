#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "g2skein/exact/rational_expr.hpp"

namespace g2skein::exact {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reads expressions such as `-q^{1/2}/x0^2`, `3+2*I`, `(1-a*b)/c`.
/// Names: q, s, I and every Var. Exponents are integers, except on q where
/// any multiple of 1/4 is allowed (`q^{1/2}`, `q^(-3/4)`, `q^-1`).
RationalExpr parse_expr(std::string_view text);

}  // namespace g2skein::exact
