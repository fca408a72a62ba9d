#pragma once

#include <optional>
#include <string>

#include "g2skein/exact/rational_expr.hpp"

namespace g2skein::askey_wilson {

using exact::RationalExpr;

struct AWParams {
  RationalExpr a, b, c, d;

  /// (-q^(1/2), -q^(1/2), -q^(1/2)/x0^2, -q^(1/2)/x1^2).
  static AWParams star();
  /// Free symbols a, b, c, d.
  static AWParams symbolic();
  /// Every parameter multiplied by q^(k/4).
  AWParams scaled(int quarter_a, int quarter_b, int quarter_c, int quarter_d) const;
};

struct AWPolynomial {
  int n = 0;
  RationalExpr poly;  // symmetric Laurent polynomial in x
};

/// Terminating 4phi3 with the monic normalization (leading term x^n).
/// Throws exact::DegenerateSubstitution when (abcd q^(n-1); q)_n vanishes.
AWPolynomial aw_general(int n, const AWParams& params);

/// P_n(x; x0, x1) from its expansion in g_k(x) = (-q^(1/2) x, -q^(1/2)/x; q)_k.
/// Cached; safe to call concurrently.
const AWPolynomial& aw_star(int n);

/// The index n: either concrete or the formal symbol with u = q^n.
/// `offset` shifts it, so NIndex::formal().shifted(1) stands for n+1.
class NIndex {
 public:
  static NIndex formal() { return NIndex(std::nullopt, 0); }
  static NIndex at(int n) { return NIndex(n, 0); }

  bool is_formal() const noexcept { return !n_; }
  int value() const;  // concrete n + offset
  NIndex shifted(int k) const { return NIndex(n_, offset_ + k); }

  /// q^(n + offset + k).
  RationalExpr qpow(int k = 0) const;
  /// Maps u -> q^n when concrete, identity otherwise.
  RationalExpr specialize(const RationalExpr& f) const;
  /// `n+1` in formal mode, the integer otherwise.
  std::string label(int k = 0) const;

 private:
  NIndex(std::optional<int> n, int offset) : n_(n), offset_(offset) {}
  std::optional<int> n_;
  int offset_;
};

/// Three-term recurrence and connection coefficients at index N, with the
/// x0, x1 slots filled by arbitrary expressions.
RationalExpr beta(const NIndex& N, const RationalExpr& x0, const RationalExpr& x1);
RationalExpr gamma(const NIndex& N, const RationalExpr& x0, const RationalExpr& x1);
RationalExpr lambda(const NIndex& N, const RationalExpr& x0, const RationalExpr& x1);

}  // namespace g2skein::askey_wilson
