#pragma once

#include <compare>
#include <map>
#include <string>

#include "g2skein/exact/rational_expr.hpp"

namespace g2skein::qops {

using exact::RationalExpr;

/// s^reflect * D^e * D0^e0 * D1^e1, where s: x -> 1/x, D: x -> q^(1/2) x and
/// D_b: x_b -> q^(1/2) x_b. The reflection is always written leftmost.
struct ShiftWord {
  bool reflect = false;
  int e = 0;
  int e0 = 0;
  int e1 = 0;

  static ShiftWord reflection() { return {true, 0, 0, 0}; }
  static ShiftWord shift(int e) { return {false, e, 0, 0}; }
  static ShiftWord shift0(int e0) { return {false, 0, e0, 0}; }
  static ShiftWord shift1(int e1) { return {false, 0, 0, e1}; }

  bool is_identity() const { return !reflect && e == 0 && e0 == 0 && e1 == 0; }

  /// Word product in normal form; uses s D = D^-1 s.
  ShiftWord operator*(const ShiftWord& o) const;
  friend auto operator<=>(const ShiftWord&, const ShiftWord&) = default;

  /// Argument map applied by the word: x -> q^(e/2) x^(+-1), x_b -> q^(e_b/2) x_b.
  exact::Assignment assignment() const;

  /// `s^1 * D^2 * D0^0 * D1^-1`.
  std::string to_string() const;
};

/// Finite sum of coefficient * word with coefficients on the left.
/// Terms are kept in a map keyed by word, so every word appears once and
/// zero coefficients are dropped.
class Operator {
 public:
  Operator() = default;
  static Operator identity();
  static Operator multiplication(const RationalExpr& c);
  static Operator word(const ShiftWord& w, const RationalExpr& c = RationalExpr(1));

  const std::map<ShiftWord, RationalExpr>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator operator-() const;
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }

  /// Composition A * B (B acts first).
  friend Operator operator*(const Operator& a, const Operator& b);
  /// Left multiplication by a function: c * A.
  friend Operator operator*(const RationalExpr& c, const Operator& a);

  RationalExpr apply(const RationalExpr& f) const;

  /// Terms whose word has the given (e0, e1), with that part of the word kept.
  Operator part(int e0, int e1) const;

  /// One line per term: `coeff * s^r * D^e * D0^e0 * D1^e1`.
  std::string to_string() const;

 private:
  void add_term(const ShiftWord& w, const RationalExpr& c);
  std::map<ShiftWord, RationalExpr> terms_;
};

}  // namespace g2skein::qops
