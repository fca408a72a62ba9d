#include "g2skein/askey_wilson/nu.hpp"

#include <stdexcept>

namespace g2skein::askey_wilson {

using exact::Var;

namespace {

const RationalExpr kOne(1);
RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }

// prod_{e=lo}^{hi} (1 - z u^k q^e)
RationalExpr run(const RationalExpr& z, int k, int lo, int hi) {
  RationalExpr r(1);
  const RationalExpr zu = z * RationalExpr::var(Var::u, k);
  for (int e = lo; e <= hi; ++e) r *= kOne - zu * qq(4 * e);
  return r;
}

// Ratio of prod_{i<n+L} (1 - z u^k q^(alpha+i)) to prod_{i<n+M} (1 - z u^k q^(beta+i))
// for formal n: the common middle cancels, the ends are finite products;
// q^(n+e) at the tail becomes u q^e.
RationalExpr poch_ratio(const RationalExpr& z, int k, int alpha, int L, int beta, int M) {
  RationalExpr r(1);
  if (alpha < beta) r *= run(z, k, alpha, beta - 1);
  if (alpha > beta) r /= run(z, k, beta, alpha - 1);
  const int end1 = alpha + L - 1;
  const int end2 = beta + M - 1;
  if (end1 > end2) r *= run(z, k + 1, end2 + 1, end1);
  if (end1 < end2) r /= run(z, k + 1, end1 + 1, end2);
  return r;
}

}  // namespace

RationalExpr nu_ratio(int e0, int e1, int dn, const NIndex& N) {
  if (dn < -1 || dn > 1) throw std::invalid_argument("nu_ratio: target index must be n-1, n or n+1");
  if (e0 < -1 || e0 > 1 || e1 < -1 || e1 > 1) throw std::invalid_argument("nu_ratio: shifts must be in {-1, 0, 1}");
  const RationalExpr x0 = RationalExpr::var(Var::x0);
  const RationalExpr x1 = RationalExpr::var(Var::x1);
  const RationalExpr u = RationalExpr::var(Var::u);
  const int sigma = e0 + e1;
  const RationalExpr invX = (x0 * x0 * x1 * x1).inverse();

  RationalExpr r(dn == -1 ? -1 : (dn == 1 ? -1 : 1));
  if (dn == 1) r *= u * qq(4);
  if (dn == -1) r /= u;
  // (q^(n+1)/X')_n (q^(n+1)/X')_(n+1) over the same at index n+dn.
  r *= poch_ratio(invX, 1, 1 - sigma, 0, 1 + dn, dn);
  r *= poch_ratio(invX, 1, 1 - sigma, 1, 1 + dn, dn + 1);
  const std::pair<int, RationalExpr> slots[] = {{e0, x0}, {e1, x1}};
  for (const auto& [e, xb] : slots) {
    const RationalExpr xb2 = xb * xb;
    const RationalExpr inv2 = xb2.inverse();
    // 1 / ((1/x_b'^2)_(n+1) (q/x_b'^2)_n), relative to index n+dn.
    r *= poch_ratio(inv2, 0, 0, dn + 1, -e, 1);
    r *= poch_ratio(inv2, 0, 1, dn, 1 - e, 0);
    const RationalExpr is = RationalExpr::i() * qq(1);
    if (e == 1) r *= is * (kOne - xb2);
    if (e == -1) r /= is * (kOne - xb2 / qq(4));
  }
  return N.specialize(r);
}

}  // namespace g2skein::askey_wilson
