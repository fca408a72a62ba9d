#include "g2skein/askey_wilson/polynomial.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

#include "g2skein/exact/errors.hpp"

namespace g2skein::askey_wilson {

using exact::LaurentPolynomial;
using exact::Var;

namespace {

const RationalExpr kOne(1);
RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }
RationalExpr X() { return RationalExpr::var(Var::x); }
RationalExpr X0() { return RationalExpr::var(Var::x0); }
RationalExpr X1() { return RationalExpr::var(Var::x1); }

// prod_{i=lo}^{hi} (1 - z q^i); empty product is 1.
RationalExpr run(const RationalExpr& z, int lo, int hi) {
  RationalExpr r(1);
  for (int i = lo; i <= hi; ++i) r *= kOne - z * qq(4 * i);
  return r;
}

// Gaussian binomial [n, k]_q as a polynomial in s.
LaurentPolynomial gauss_binomial(int n, int k) {
  std::vector<LaurentPolynomial> row{LaurentPolynomial(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentPolynomial> next(m + 1);
    next[0] = LaurentPolynomial(1);
    next[m] = LaurentPolynomial(1);
    for (int j = 1; j < m; ++j) {
      next[j] = row[j - 1] + row[j].mul_term(exact::Scalar(1), exact::Monomial::of(Var::s, 4 * j));
    }
    row = std::move(next);
  }
  return row[k];
}

// (q^-n; q)_k q^k / (q; q)_k = (-1)^k q^(k(k+1)/2 - nk) [n, k]_q.
RationalExpr terminating_weight(int n, int k) {
  const int quarter = 4 * (k * (k + 1) / 2 - n * k);
  return RationalExpr(gauss_binomial(n, k).mul_term(exact::Scalar(k % 2 == 0 ? 1 : -1),
                                                    exact::Monomial::of(Var::s, quarter)));
}

}  // namespace

AWParams AWParams::star() {
  const RationalExpr h = -qq(2);
  return {h, h, h / (X0() * X0()), h / (X1() * X1())};
}

AWParams AWParams::symbolic() {
  return {RationalExpr::var(Var::a), RationalExpr::var(Var::b), RationalExpr::var(Var::c), RationalExpr::var(Var::d)};
}

AWParams AWParams::scaled(int qa, int qb, int qc, int qd) const {
  return {a * qq(qa), b * qq(qb), c * qq(qc), d * qq(qd)};
}

AWPolynomial aw_general(int n, const AWParams& p) {
  if (n < 0) throw std::invalid_argument("aw_general: n must be nonnegative");
  const RationalExpr abcd = p.a * p.b * p.c * p.d;
  const RationalExpr top = abcd * qq(4 * (n - 1));  // abcd q^(n-1)
  // Normalization denominator (abcd q^(n-1))_n, kept factor by factor.
  RationalExpr inv_norm(1);
  for (int i = 0; i < n; ++i) {
    const RationalExpr f = kOne - top * qq(4 * i);
    if (f.is_zero()) throw exact::DegenerateSubstitution("1 - abcd q^" + std::to_string(n - 1 + i));
    inv_norm *= f.inverse();
  }
  const RationalExpr ab = p.a * p.b;
  const RationalExpr ac = p.a * p.c;
  const RationalExpr ad = p.a * p.d;
  const RationalExpr ax = p.a * X();
  const RationalExpr a_over_x = p.a / X();
  RationalExpr sum;
  RationalExpr gx(1);  // (ax)_k (a/x)_k
  RationalExpr top_k(1);  // (abcd q^(n-1))_k
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      gx *= (kOne - ax * qq(4 * (k - 1))) * (kOne - a_over_x * qq(4 * (k - 1)));
      top_k *= kOne - top * qq(4 * (k - 1));
    }
    // (ab)_n / (ab)_k etc. are the tails prod_{i=k}^{n-1}.
    sum += terminating_weight(n, k) * top_k * run(ab, k, n - 1) * run(ac, k, n - 1) * run(ad, k, n - 1) * gx;
  }
  return {n, sum * inv_norm * p.a.pow(-n)};
}

namespace {

AWPolynomial compute_star(int n) {
  const RationalExpr y0 = qq(4) / (X0() * X0());  // q/x0^2
  const RationalExpr y1 = qq(4) / (X1() * X1());
  const RationalExpr w = qq(4 * (n + 1)) / (X0() * X0() * X1() * X1());  // q^(n+1)/X
  RationalExpr inv_norm(1);
  for (int i = 0; i < n; ++i) inv_norm *= (kOne - w * qq(4 * i)).inverse();
  const RationalExpr hx = -qq(2) * X();
  const RationalExpr hxi = -qq(2) / X();
  RationalExpr sum;
  RationalExpr g(1);
  RationalExpr w_k(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      g *= (kOne - hx * qq(4 * (k - 1))) * (kOne - hxi * qq(4 * (k - 1)));
      w_k *= kOne - w * qq(4 * (k - 1));
    }
    // (q)_n / (q)_k^2 (q^-n)_k q^k = tail(q, k+1..n) * weight(n, k).
    sum += terminating_weight(n, k) * run(qq(4), k, n - 1) * run(y0, k, n - 1) * run(y1, k, n - 1) * w_k * g;
  }
  const RationalExpr pre = RationalExpr(n % 2 == 0 ? 1 : -1) * qq(-2 * n);
  return {n, pre * sum * inv_norm};
}

}  // namespace

const AWPolynomial& aw_star(int n) {
  if (n < 0) throw std::invalid_argument("aw_star: n must be nonnegative");
  static std::mutex mu;
  static std::deque<std::optional<AWPolynomial>> cache;  // deque: stable references
  {
    std::lock_guard lock(mu);
    if (static_cast<std::size_t>(n) < cache.size() && cache[n]) return *cache[n];
  }
  AWPolynomial p = compute_star(n);
  std::lock_guard lock(mu);
  if (cache.size() <= static_cast<std::size_t>(n)) cache.resize(n + 1);
  if (!cache[n]) cache[n] = std::move(p);
  return *cache[n];
}

int NIndex::value() const {
  if (!n_) throw std::logic_error("formal index has no value");
  return *n_ + offset_;
}

RationalExpr NIndex::qpow(int k) const {
  if (n_) return qq(4 * (*n_ + offset_ + k));
  return RationalExpr::var(Var::u) * qq(4 * (offset_ + k));
}

RationalExpr NIndex::specialize(const RationalExpr& f) const {
  if (!n_) return f;
  return f.substitute({{Var::u, qq(4 * (*n_ + offset_))}});
}

std::string NIndex::label(int k) const {
  if (n_) return std::to_string(*n_ + offset_ + k);
  const int off = offset_ + k;
  if (off == 0) return "n";
  return off > 0 ? "n+" + std::to_string(off) : "n" + std::to_string(off);
}

RationalExpr beta(const NIndex& N, const RationalExpr& x0, const RationalExpr& x1) {
  const RationalExpr a0 = (x0 * x0).inverse();
  const RationalExpr a1 = (x1 * x1).inverse();
  const RationalExpr z = a0 * a1;
  const RationalExpr qn = N.qpow(0);
  const RationalExpr qn1 = N.qpow(1);
  const RationalExpr q2n = qn * qn;
  const RationalExpr t1 = (kOne - qn1) * (kOne - qn1 * z) * (kOne - qn1 * a0) * (kOne - qn1 * a1) /
                              ((kOne - q2n * qq(4) * z) * (kOne - q2n * qq(8) * z)) -
                          kOne;
  const RationalExpr t2 = (kOne - qn) * (kOne - qn * z) * (kOne - qn * a0) * (kOne - qn * a1) /
                              ((kOne - q2n * z) * (kOne - q2n * qq(4) * z)) -
                          kOne;
  return qq(-2) * t1 + qq(2) * t2;
}

RationalExpr gamma(const NIndex& N, const RationalExpr& x0, const RationalExpr& x1) {
  const RationalExpr a0 = (x0 * x0).inverse();
  const RationalExpr a1 = (x1 * x1).inverse();
  const RationalExpr z = a0 * a1;
  const RationalExpr qn = N.qpow(0);
  const RationalExpr q2n = qn * qn;
  const RationalExpr num = ((kOne - qn) * (kOne - qn * z) * (kOne - qn * a0) * (kOne - qn * a1)).pow(2);
  return num / ((kOne - q2n * qq(-4) * z) * (kOne - q2n * z).pow(2) * (kOne - q2n * qq(4) * z));
}

RationalExpr lambda(const NIndex& N, const RationalExpr& x0, const RationalExpr& x1) {
  const RationalExpr a1 = (x1 * x1).inverse();
  const RationalExpr z = (x0 * x0).inverse() * a1;
  const RationalExpr qn = N.qpow(0);
  const RationalExpr q2n = qn * qn;
  return qq(-2) * ((kOne - qn) * (kOne - qn * a1)).pow(2) /
         (x0 * x0 * (kOne - q2n * qq(-4) * z) * (kOne - q2n * z));
}

}  // namespace g2skein::askey_wilson
