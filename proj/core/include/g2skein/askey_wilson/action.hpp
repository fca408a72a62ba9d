#pragma once

#include <string>
#include <vector>

#include "g2skein/askey_wilson/nu.hpp"

namespace g2skein::askey_wilson {

enum class ActionMode { prop, corollary };

/// One summand of A(k) Pbar_n: coefficient times Pbar_(n+dn), produced by
/// the half-shift (e0, e1) of (x0, x1).
struct ActionEntry {
  int dn = 0;
  int e0 = 0;
  int e1 = 0;
  RationalExpr coeff;
};

struct ActionTermList {
  NIndex n = NIndex::formal();
  std::vector<ActionEntry> entries;

  /// Coefficient of the (dn, e0, e1) entry, zero when absent.
  RationalExpr coefficient(int dn, int e0, int e1) const;
  /// `(n+1, -1, -1) : <coeff>` per line.
  std::string to_string() const;
};

/// Action of the curve operator A(k_curve) on the reduced polynomial Pbar_n.
/// `prop` keeps the nu-ratio and gamma/lambda form; `corollary` uses the
/// simplified coefficients with the diagonal split by shift label. Entries
/// with target index below 0 are dropped for concrete n = 0.
ActionTermList pbar_action(int curve, ActionMode mode, const NIndex& N);

}  // namespace g2skein::askey_wilson
