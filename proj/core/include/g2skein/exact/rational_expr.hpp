#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2skein/exact/laurent_polynomial.hpp"

namespace g2skein::exact {

/// One denominator factor: a polynomial (nonnegative exponents) with no
/// monomial content and leading coefficient 1, raised to `mult` > 0.
struct DenFactor {
  LaurentPolynomial poly;
  int mult = 1;
};

class RationalExpr;
using Assignment = std::map<Var, RationalExpr>;

/// Exact rational function num / den over Q(i) in the variables of Var.
///
/// The denominator is kept as a list of monic, content-free factors; its
/// expansion den() is therefore monic with no monomial factor, and any
/// monomial part of a denominator lives in the numerator as a Laurent
/// exponent. Sums combine denominators by factor-wise lcm and cancel
/// denominator factors that divide the new numerator. There is no
/// multivariate gcd, so the representation is not unique; use equal().
class RationalExpr {
 public:
  RationalExpr() = default;
  RationalExpr(Scalar c) : num_(std::move(c)) {}                 // NOLINT
  RationalExpr(long c) : num_(Scalar(c)) {}                      // NOLINT
  RationalExpr(LaurentPolynomial p) : num_(std::move(p)) {}      // NOLINT

  static RationalExpr var(Var v, int e = 1);
  /// q^(k/4) = s^k.
  static RationalExpr q_quarter(int k);
  static RationalExpr i() { return RationalExpr(Scalar::i()); }
  static RationalExpr fraction(const LaurentPolynomial& num, const LaurentPolynomial& den);

  const LaurentPolynomial& num() const noexcept { return num_; }
  /// Expanded denominator (product of the stored factors).
  LaurentPolynomial den() const;
  const std::vector<DenFactor>& den_factors() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.empty(); }
  bool depends_on(Var v) const;

  RationalExpr operator-() const;
  RationalExpr& operator+=(const RationalExpr& o);
  RationalExpr& operator-=(const RationalExpr& o);
  RationalExpr& operator*=(const RationalExpr& o);
  RationalExpr& operator/=(const RationalExpr& o);
  friend RationalExpr operator+(RationalExpr a, const RationalExpr& b) { return a += b; }
  friend RationalExpr operator-(RationalExpr a, const RationalExpr& b) { return a -= b; }
  friend RationalExpr operator*(RationalExpr a, const RationalExpr& b) { return a *= b; }
  friend RationalExpr operator/(RationalExpr a, const RationalExpr& b) { return a /= b; }

  RationalExpr inverse() const;
  RationalExpr pow(int k) const;

  /// Simultaneous substitution. Throws DegenerateSubstitution naming the
  /// first denominator factor that becomes identically zero.
  RationalExpr substitute(const Assignment& assignment) const;

  /// Numerator and expanded denominator after substitution, without the
  /// degenerate-denominator check (used to classify 0/0 specializations).
  std::pair<LaurentPolynomial, LaurentPolynomial> substitute_parts(const Assignment& assignment) const;

  /// Coefficient of v^e, for expressions whose denominator is free of v.
  RationalExpr coefficient(Var v, int e) const;
  /// Lowest and highest exponent of v in the numerator.
  std::pair<int, int> degree_range(Var v) const;

  /// nullopt when the denominator vanishes at the point.
  std::optional<std::uint64_t> eval_mod(const ModPoint& pt) const;

  /// Canonical text: `num` or `(num)/(den)` with den expanded.
  std::string to_string() const;
  /// Human form with the denominator left factored.
  std::string to_factored_string() const;

  /// Cancels denominator factors that divide the numerator. Idempotent.
  void reduce();

 private:
  LaurentPolynomial num_;
  std::vector<DenFactor> den_;
};

/// f == g as rational functions, decided by cross multiplication.
bool equal(const RationalExpr& f, const RationalExpr& g);

/// x + 1/x and x - 1/x. Throw DivisionByZero on zero input.
RationalExpr ch(const RationalExpr& f);
RationalExpr sh(const RationalExpr& f);

/// (z; q)_k = prod_{i<k} (1 - z q^i) for k >= 0, with q = s^4.
RationalExpr q_pochhammer(const RationalExpr& z, int k);

/// Monomial substitution map helpers: v -> c * s^quarter * v^power etc.
Assignment scale_var(Var v, const RationalExpr& factor);

}  // namespace g2skein::exact
