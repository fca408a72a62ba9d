#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2skein/exact/monomial.hpp"
#include "g2skein/exact/scalar.hpp"

namespace g2skein::exact {

struct Term {
  Monomial m;
  Scalar c;
};

/// Image of each variable under a monomial substitution v -> c * m.
/// Unset entries leave the variable alone.
using MonomialMap = std::array<std::optional<std::pair<Scalar, Monomial>>, kNumVars>;

/// Point for modular evaluation: every variable gets a nonzero residue.
struct ModPoint {
  std::uint64_t p = 0;
  std::uint64_t sqrt_minus_one = 0;
  std::array<std::uint64_t, kNumVars> values{};
};

/// Sparse multivariate Laurent polynomial over Q(i).
///
/// Terms are stored in strictly decreasing graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Scalar c);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(long c) : LaurentPolynomial(Scalar(c)) {}  // NOLINT
  static LaurentPolynomial term(Scalar c, Monomial m);
  static LaurentPolynomial var(Var v, int e = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static LaurentPolynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_single_term() const noexcept { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }

  /// Componentwise min / max of the exponent vectors (zero polynomial: unit).
  Monomial min_exponents() const;
  Monomial max_exponents() const;
  bool depends_on(Var v) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial mul_term(const Scalar& c, const Monomial& m) const;
  LaurentPolynomial pow(unsigned k) const;

  /// Exact quotient in the Laurent ring, or nullopt when `g` does not divide.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& g) const;

  LaurentPolynomial substitute(const MonomialMap& map) const;

  /// Terms whose exponent of `v` equals `e`, with that power removed.
  LaurentPolynomial coefficient(Var v, int e) const;

  std::optional<std::uint64_t> eval_mod(const ModPoint& pt) const;

  std::string to_string() const;

  /// Total order used to sort denominator factors.
  static int compare(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  explicit LaurentPolynomial(std::vector<Term> sorted) : terms_(std::move(sorted)) {}

  std::vector<Term> terms_;
};

}  // namespace g2skein::exact
