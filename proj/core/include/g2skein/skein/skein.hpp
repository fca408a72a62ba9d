#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2skein/check/check.hpp"
#include "g2skein/exact/rational_expr.hpp"

namespace g2skein::skein {

using exact::RationalExpr;

/// Label of the theta-link n(i, j, k).
struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  std::string to_string() const;  // n(i,j,k)
};

/// i+j+k even, |i-j| <= k <= i+j (and all components nonnegative).
bool is_admissible(int i, int j, int k);
inline bool is_admissible(const Triple& t) { return is_admissible(t.i, t.j, t.k); }
/// Human-readable reason a triple fails admissibility; empty when admissible.
std::string admissibility_violation(const Triple& t);

/// A D coefficient was requested at a boundary where its display is 0/0.
class BoundaryCoefficient : public std::domain_error {
 public:
  BoundaryCoefficient() : std::domain_error("boundary coefficient requested") {}
};

/// The coefficient D_{a,b}(i, j, k), rational in q. a, b in {1, -1}.
RationalExpr d_coeff(int a, int b, int i, int j, int k);
/// True when the display of D_{a,b}(i, j, k) has a vanishing denominator.
bool d_degenerate(int a, int b, int i, int j);

/// Finite combination of admissible theta-links with nonzero coefficients.
class SkeinVector {
 public:
  SkeinVector() = default;
  static SkeinVector basis(const Triple& t);

  void add(const Triple& t, const RationalExpr& c);
  const std::map<Triple, RationalExpr>& terms() const noexcept { return terms_; }
  RationalExpr coefficient(const Triple& t) const;

  /// `n(i,j,k) : <coefficient in q>` per line.
  std::string to_string() const;

 private:
  std::map<Triple, RationalExpr> terms_;
};

/// Action of the curve k_curve (1..6); non-admissible summands are omitted
/// before their coefficient is evaluated.
SkeinVector curve_action_skein(int curve, const SkeinVector& v);

/// Rational function of s = q^(1/4) only, printed with q^{m/4} exponents.
std::string q_text(const RationalExpr& f);

/// x0 -> -q^((i+1)/2), x1 -> -q^((k+1)/2), u -> q^((i-j+k)/2).
exact::Assignment triple_specialization(const Triple& t);

/// Target of a shift-labelled entry (n+dn, e0, e1) read from source t.
Triple map_target(const Triple& source, int dn, int e0, int e1);

/// Where x0, x1 in a DAHA coefficient are evaluated.
enum class Convention { target, source };

struct TargetRecord {
  Triple target;
  RationalExpr skein;
  RationalExpr daha;
  bool equal = false;
  std::string note;
};

struct CorrespondenceReport {
  int curve = 0;
  Triple source;
  std::vector<TargetRecord> targets;
  bool pass = false;
  std::string detail;
};

/// Compares curve_action_skein on n(source) with the corollary-mode term
/// list of the curve action on reduced polynomials, specialized per entry.
CorrespondenceReport correspondence_check(int curve, const Triple& source, check::Comparator& cmp,
                                          Convention convention = Convention::target);
check::CheckRecord to_record(const CorrespondenceReport& report);

/// Admissible triples with i+j+k <= bound, ordered by sum, then i, then j.
std::vector<Triple> enumerate_admissible(int bound);

/// With i, j, k symbolic: -n - 1/2 + (i+1)/2 + (k+1)/2 = (j+1)/2 at n = (i-j+k)/2.
check::CheckRecord verify_k3_exponent_identity();

}  // namespace g2skein::skein
