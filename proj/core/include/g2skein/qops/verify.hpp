#pragma once

#include <vector>

#include "g2skein/check/check.hpp"
#include "g2skein/qops/library.hpp"

namespace g2skein::qops {

using check::CheckRecord;
using check::Comparator;

/// A == B coefficient-wise.
bool equal(const Operator& a, const Operator& b, Comparator& cmp);

/// Left-hand side of a quadratic relation, (X + f1)(X + f2); zero when the
/// relation holds. `perturb` scales the reflection part of T0 by q.
Operator hecke_relation(Hecke which, bool perturb = false);

/// The four quadratic relations (one record each).
std::vector<CheckRecord> verify_hecke_relations(Comparator& cmp);
/// Perturbed T0; the record is expected to FAIL.
CheckRecord hecke_negative_control(Comparator& cmp);

/// The four d factorizations, d_{1,1} for two (c, d) choices.
std::vector<CheckRecord> verify_dhat_factorizations(Comparator& cmp);
/// d_{1,-1} with the two factors swapped; expected to FAIL.
CheckRecord dhat_negative_control(Comparator& cmp);
/// A(k6) rebuilt from the four d_{a,b}.
CheckRecord verify_k6_reconstruction(Comparator& cmp);

/// X A(k_a) f = X^2 f + f for the DAHA element X paired with curve a.
/// Throws std::invalid_argument on a test function that is not symmetric.
std::vector<CheckRecord> verify_mult_compatibility(int a, const std::vector<RationalExpr>& testfns, Comparator& cmp);
std::vector<RationalExpr> default_test_functions();

/// A(k_a) ch(x^m), m = 0..max_deg, is symmetric in x and free of poles in x.
std::vector<CheckRecord> verify_symmetric_preservation(int a, int max_deg, Comparator& cmp);

}  // namespace g2skein::qops
