#include "g2skein/exact/parse.hpp"

#include <cctype>

namespace g2skein::exact {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : t_(text) {}

  RationalExpr run() {
    RationalExpr e = expr();
    skip();
    if (p_ != t_.size()) fail("unexpected '" + std::string(1, t_[p_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(t_) + "' at position " + std::to_string(p_) + ": " + why);
  }
  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < t_.size() && t_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  RationalExpr expr() {
    RationalExpr e = term();
    for (;;) {
      if (eat('+')) e += term();
      else if (eat('-')) e -= term();
      else return e;
    }
  }

  RationalExpr term() {
    RationalExpr e = unary();
    for (;;) {
      if (eat('*')) {
        e *= unary();
      } else if (eat('/')) {
        RationalExpr d = unary();
        if (d.is_zero()) fail("division by zero");
        e /= d;
      } else {
        return e;
      }
    }
  }

  RationalExpr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  long integer() {
    skip();
    const std::size_t start = p_;
    while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
    if (start == p_) fail("expected an integer");
    if (p_ - start > 9) fail("integer too large");
    return std::stol(std::string(t_.substr(start, p_ - start)));
  }

  // Exponent as num/den with den > 0.
  std::pair<long, long> exponent() {
    char close = 0;
    if (eat('{')) close = '}';
    else if (eat('(')) close = ')';
    const bool neg = eat('-');
    long num = integer();
    long den = 1;
    if (eat('/')) den = integer();
    if (den == 0) fail("zero denominator in exponent");
    if (close && !eat(close)) fail(std::string("expected '") + close + "'");
    return {neg ? -num : num, den};
  }

  RationalExpr power() {
    skip();
    if (p_ >= t_.size()) fail("unexpected end of input");
    RationalExpr base;
    bool is_q = false;
    if (eat('(')) {
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(t_[p_]))) {
      base = RationalExpr(integer());
    } else if (std::isalpha(static_cast<unsigned char>(t_[p_]))) {
      const std::size_t start = p_;
      while (p_ < t_.size() && std::isalnum(static_cast<unsigned char>(t_[p_]))) ++p_;
      const std::string_view name = t_.substr(start, p_ - start);
      if (name == "q") {
        is_q = true;
        base = RationalExpr::q_quarter(4);
      } else if (name == "I") {
        base = RationalExpr::i();
      } else if (auto v = var_from_name(name)) {
        base = RationalExpr::var(*v);
      } else {
        p_ = start;
        fail("unknown name '" + std::string(name) + "'");
      }
    } else {
      fail("unexpected '" + std::string(1, t_[p_]) + "'");
    }
    if (!eat('^')) return base;
    const auto [num, den] = exponent();
    if (is_q) {
      if ((4 * num) % den != 0) fail("powers of q must be multiples of 1/4");
      return RationalExpr::q_quarter(static_cast<int>(4 * num / den));
    }
    if (den != 1) fail("fractional exponent on a non-q base");
    if (base.is_zero() && num < 0) fail("division by zero");
    return base.pow(static_cast<int>(num));
  }

  std::string_view t_;
  std::size_t p_ = 0;
};

}  // namespace

RationalExpr parse_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace g2skein::exact
