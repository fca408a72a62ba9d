#include <gtest/gtest.h>

#include "g2skein/askey_wilson/verify.hpp"
#include "g2skein/exact/errors.hpp"

namespace {

using namespace g2skein;
using askey_wilson::NIndex;
using askey_wilson::RationalExpr;
using exact::Var;

RationalExpr X() { return RationalExpr::var(Var::x); }
RationalExpr X0() { return RationalExpr::var(Var::x0); }
RationalExpr X1() { return RationalExpr::var(Var::x1); }
RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }
const RationalExpr kOne(1);

void expect_pass(const check::CheckRecord& r) {
  EXPECT_EQ(r.status, check::Status::pass) << r.case_id << " " << r.detail << "\n" << r.lhs << "\n" << r.rhs;
}
void expect_all_pass(const std::vector<check::CheckRecord>& records) {
  for (const auto& r : records) expect_pass(r);
}

TEST(AWStar, LowDegrees) {
  EXPECT_TRUE(equal(askey_wilson::aw_star(0).poly, kOne));
  const NIndex zero = NIndex::at(0);
  EXPECT_TRUE(equal(askey_wilson::aw_star(1).poly, exact::ch(X()) - askey_wilson::beta(zero, X0(), X1())));
  EXPECT_TRUE(askey_wilson::gamma(zero, X0(), X1()).is_zero());
  EXPECT_TRUE(askey_wilson::lambda(zero, X0(), X1()).is_zero());
}

TEST(AWStar, SymmetricAndMonic) {
  for (int n = 0; n <= 4; ++n) {
    const RationalExpr& p = askey_wilson::aw_star(n).poly;
    EXPECT_TRUE(equal(p, p.substitute({{Var::x, X().inverse()}}))) << n;
    EXPECT_TRUE(equal(p.coefficient(Var::x, n), kOne)) << n;
    EXPECT_EQ(p.degree_range(Var::x), std::make_pair(-n, n));
    EXPECT_TRUE(equal(p, p.substitute({{Var::x0, X1()}, {Var::x1, X0()}}))) << n;
  }
}

TEST(AWStar, BetaZeroExample) {
  // P_1 = ch(x) - beta_0 survives specialization of x0, x1 to integers.
  const RationalExpr at = askey_wilson::aw_star(1).poly.substitute({{Var::x0, RationalExpr(2)}, {Var::x1, RationalExpr(3)}});
  const RationalExpr b0 = askey_wilson::beta(NIndex::at(0), RationalExpr(2), RationalExpr(3));
  EXPECT_TRUE(equal(at, exact::ch(X()) - b0));
}

TEST(AWGeneral, DegenerateNormalization) {
  askey_wilson::AWParams p = askey_wilson::AWParams::symbolic();
  p.d = qq(-4) / (p.a * p.b * p.c);  // abcd q = 1 kills the first factor of (abcd q; q)_2
  EXPECT_THROW(askey_wilson::aw_general(2, p), exact::DegenerateSubstitution);
}

TEST(AWVerify, EigenAndRecurrence) {
  auto cmp = check::Comparator::exact();
  for (int n = 0; n <= 4; ++n) {
    expect_pass(askey_wilson::verify_eigen(n, cmp));
    expect_pass(askey_wilson::verify_three_term(n, cmp));
    expect_pass(askey_wilson::verify_star_vs_general(n, cmp));
    if (n >= 1) expect_all_pass(askey_wilson::verify_connection(n, cmp));
  }
  EXPECT_EQ(askey_wilson::verify_eigen(2, cmp, true).status, check::Status::fail);
}

TEST(AWVerify, BetaLambdaGamma) {
  auto cmp = check::Comparator::exact();
  expect_all_pass(askey_wilson::verify_beta_lambda_gamma(std::nullopt, cmp));
  for (int n = 1; n <= 3; ++n) expect_all_pass(askey_wilson::verify_beta_lambda_gamma(n, cmp));
}

TEST(AWVerify, Kalnins) {
  auto cmp = check::Comparator::exact();
  for (int n = 0; n <= 3; ++n) expect_all_pass(askey_wilson::verify_kalnins_actions(n, cmp));
}

TEST(AWVerify, DhatOnPolynomials) {
  auto cmp = check::Comparator::exact();
  for (int n = 0; n <= 3; ++n) expect_all_pass(askey_wilson::verify_dhat_on_aw(n, cmp));
}

// Direct finite-product form of the normalization ratio at concrete n.
RationalExpr nu_oracle_F(int n, const RationalExpr& x0, const RationalExpr& x1) {
  const RationalExpr X2 = x0 * x0 * x1 * x1;
  const RationalExpr z = qq(4 * (n + 1)) / X2;
  RationalExpr f = (n % 2 == 0 ? kOne : -kOne) * qq(-2 * n * (n + 1)) * exact::q_pochhammer(z, n) *
                   exact::q_pochhammer(z, n + 1);
  for (const RationalExpr& xb : {x0, x1}) {
    const RationalExpr inv = (xb * xb).inverse();
    f /= exact::q_pochhammer(inv, n + 1) * exact::q_pochhammer(qq(4) * inv, n);
  }
  return f;
}

TEST(Nu, MatchesFiniteProducts) {
  // Unit factors of a half shift: (i s)(1 - x_b^2) up, 1/((i s)(1 - x_b^2/q)) down.
  auto unit = [](int e, const RationalExpr& xb) {
    if (e == 0) return kOne;
    const RationalExpr is = RationalExpr::i() * qq(1);
    return e > 0 ? is * (kOne - xb * xb) : (is * (kOne - xb * xb * qq(-4))).inverse();
  };
  for (int n = 1; n <= 3; ++n) {
    for (int e0 : {-1, 0, 1}) {
      for (int e1 : {-1, 0, 1}) {
        for (int dn : {-1, 0, 1}) {
          const RationalExpr sx0 = qq(2 * e0) * X0();
          const RationalExpr sx1 = qq(2 * e1) * X1();
          const RationalExpr expect =
              nu_oracle_F(n, sx0, sx1) / nu_oracle_F(n + dn, X0(), X1()) * unit(e0, X0()) * unit(e1, X1());
          EXPECT_TRUE(equal(askey_wilson::nu_ratio(e0, e1, dn, NIndex::at(n)), expect))
              << n << " " << e0 << " " << e1 << " " << dn;
        }
      }
    }
  }
  EXPECT_TRUE(equal(askey_wilson::nu_ratio(0, 0, 0, NIndex::formal()), kOne));
}

TEST(Nu, Telescoping) {
  auto cmp = check::Comparator::exact();
  for (int e0 : {-1, 0, 1})
    for (int e1 : {-1, 0, 1})
      for (int dn : {-1, 0, 1}) expect_pass(askey_wilson::verify_nu_telescoping(e0, e1, dn, cmp));
}

TEST(Action, TermListShape) {
  using askey_wilson::ActionMode;
  const auto k6 = askey_wilson::pbar_action(6, ActionMode::corollary, NIndex::formal());
  EXPECT_TRUE(equal(k6.coefficient(1, -1, -1), kOne));
  const auto k2 = askey_wilson::pbar_action(2, ActionMode::corollary, NIndex::at(0));
  for (const auto& e : k2.entries) EXPECT_NE(e.dn, -1);
  EXPECT_NE(k6.to_string().find("(n+1, -1, -1) : 1"), std::string::npos) << k6.to_string();
}

TEST(Action, PropMatchesCorollaryAndOperator) {
  auto cmp = check::Comparator::exact();
  for (int k = 1; k <= 6; ++k) {
    expect_pass(askey_wilson::verify_prop_vs_corollary(k, cmp));
    for (int n = 0; n <= 2; ++n) expect_pass(askey_wilson::verify_prop_action(k, n, cmp));
  }
}

}  // namespace
