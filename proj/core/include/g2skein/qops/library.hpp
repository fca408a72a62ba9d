#pragma once

#include "g2skein/qops/operator.hpp"

namespace g2skein::qops {

enum class Hecke { T0, T1, U0, U1 };
enum class KGKind { K, G };
enum class Kalnins { m, l, lstar };

struct KalninsParams {
  RationalExpr a, b, c, d;
};

/// Iwahori-Hecke operators of the polynomial representation.
Operator build_hecke(Hecke which);

/// K_n(x_b; y) or G_n(x_b; y): two terms in D_b^(+-1). `y` replaces x in
/// the coefficients (y = x for the plain operators).
Operator build_KG(KGKind kind, int n, int b, const RationalExpr& y);
Operator build_KG(KGKind kind, int n, int b);

/// omega(y) = y (1 + q^(1/2) y) / (q^(1/2) (1 - y^2)(1 - q^(1/2) y)).
RationalExpr omega(const RationalExpr& y);

/// Curve operators A(k_1) ... A(k_6).
Operator build_curve(int a);

/// Multiplication by ch(x): the separating curve.
Operator build_separating_curve();

/// Kalnins-Miller shift operators. For lstar the parameters are the ones
/// written in the superscript (already shifted by q^(1/2)).
Operator build_kalnins(Kalnins kind, const KalninsParams& params);

/// d_{a,b} for a, b in {+1, -1}.
Operator build_dhat(int a, int b);

/// x^(-e) in x_b's place for the b(., .) and c(., .) helpers.
RationalExpr dhat_b(const RationalExpr& xb, const RationalExpr& y);
RationalExpr dhat_c(const RationalExpr& xb, const RationalExpr& y);

}  // namespace g2skein::qops
