#pragma once

#include "g2skein/askey_wilson/polynomial.hpp"

namespace g2skein::askey_wilson {

/// nu_n(q^(e0/2) x0, q^(e1/2) x1) / nu_(n+dn)(x0, x1) with dn in {-1, 0, 1}.
///
/// nu itself carries an infinite product and a branch factor; only the
/// ratio is rational. A half-shift of x_b contributes (i s)^(+-1) times
/// (x_b^2; q)_1 or 1/(1 - x_b^2/q); the finite Pochhammer parts telescope.
/// Formal N yields a function of u; concrete N is specialized at u = q^n.
RationalExpr nu_ratio(int e0, int e1, int dn, const NIndex& N);

}  // namespace g2skein::askey_wilson
