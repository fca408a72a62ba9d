#include <gtest/gtest.h>

#include <random>

#include "g2skein/exact/errors.hpp"
#include "g2skein/exact/modular.hpp"
#include "g2skein/exact/parse.hpp"
#include "g2skein/exact/rational_expr.hpp"

namespace {

using namespace g2skein::exact;

RationalExpr X() { return RationalExpr::var(Var::x); }
RationalExpr X0() { return RationalExpr::var(Var::x0); }
RationalExpr X1() { return RationalExpr::var(Var::x1); }
RationalExpr Q(int quarters = 4) { return RationalExpr::q_quarter(quarters); }

// Small random rational function in x, x0 and s.
RationalExpr random_expr(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> expo(-2, 2);
  auto poly = [&] {
    RationalExpr p(coef(rng) == 0 ? 1L : static_cast<long>(coef(rng)));
    for (int t = 0; t < 3; ++t) {
      p += RationalExpr(Scalar(coef(rng), coef(rng))) * X().pow(expo(rng)) * X0().pow(expo(rng)) *
           Q(expo(rng));
    }
    return p;
  };
  RationalExpr den = poly();
  while (den.is_zero()) den = poly();
  return poly() / den;
}

TEST(Scalar, GaussianFieldArithmetic) {
  Scalar a(mpq_class(3, 4), mpq_class(-2, 5));
  Scalar b(mpq_class(-1, 6), mpq_class(7, 3));
  EXPECT_EQ(a * b / b, a);
  EXPECT_EQ(a * a.inverse(), Scalar(1));
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_EQ(Scalar::rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ((Scalar(1) + Scalar::i() * Scalar(2)).to_string(), "(1+2*I)");
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
}

TEST(Scalar, ModularImage) {
  const auto p = modular::default_prime();
  const auto r = *modular::sqrt_minus_one(p);
  EXPECT_EQ(modular::mul(r, r, p), p - 1);
  EXPECT_EQ(*Scalar::i().mod(p, r), r);
  EXPECT_EQ(p % 4, 1U);
  EXPECT_TRUE(modular::is_prime(p));
}

TEST(RationalExpr, DifferenceOfSquares) {
  RationalExpr prod = ch(X()) * sh(X());
  EXPECT_TRUE(prod.is_polynomial());
  EXPECT_EQ(prod.to_string(), "x^2 - x^-2");
}

TEST(RationalExpr, MonomialContentMovesToNumerator) {
  RationalExpr f = RationalExpr(1) - Q() / X0().pow(2);
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num().to_string(), "-s^4*x0^-2 + 1");
  RationalExpr g = RationalExpr(1) / f;
  ASSERT_EQ(g.den_factors().size(), 1U);
  EXPECT_EQ(g.den().to_string(), "s^4 - x0^2");
  EXPECT_EQ(g.num().to_string(), "-x0^2");
}

TEST(RationalExpr, CancellationAndEquality) {
  RationalExpr f = (RationalExpr(1) - Q().pow(2)) / (RationalExpr(1) - Q());
  EXPECT_TRUE(equal(f, RationalExpr(1) + Q()));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_FALSE(equal(X(), X().inverse()));
}

TEST(RationalExpr, FieldPropertiesOnRandomValues) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    RationalExpr f = random_expr(rng);
    RationalExpr g = random_expr(rng);
    RationalExpr h = random_expr(rng);
    EXPECT_TRUE(equal((f + g) * h, f * h + g * h));
    EXPECT_TRUE((f - f).is_zero());
    if (!g.is_zero()) EXPECT_TRUE(equal((f / g) * g, f));
    if (!f.is_zero()) EXPECT_TRUE(equal(f / f, RationalExpr(1)));
    EXPECT_TRUE(equal(ch(f + 2) * ch(f + 2) - sh(f + 2) * sh(f + 2), RationalExpr(4)));
  }
}

TEST(RationalExpr, ReduceIsIdempotent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    RationalExpr f = random_expr(rng);
    RationalExpr g = f;
    g.reduce();
    EXPECT_EQ(f.to_string(), g.to_string());
  }
}

TEST(RationalExpr, DivisionErrors) {
  EXPECT_THROW(RationalExpr(1) / RationalExpr(0L), DivisionByZero);
  EXPECT_THROW(ch(RationalExpr()), DivisionByZero);
  EXPECT_THROW(X().pow(40000), ExponentOverflow);
}

TEST(RationalExpr, QPochhammer) {
  RationalExpr z = RationalExpr::var(Var::a);
  EXPECT_TRUE(equal(q_pochhammer(z, 0), RationalExpr(1)));
  EXPECT_TRUE(equal(q_pochhammer(z, 2), (RationalExpr(1) - z) * (RationalExpr(1) - z * Q())));
  EXPECT_TRUE(equal(q_pochhammer(Q(), 2), (RationalExpr(1) - Q()) * (RationalExpr(1) - Q().pow(2))));
  for (int k = 0; k <= 8; ++k) {
    EXPECT_TRUE(equal(q_pochhammer(z, k + 1), q_pochhammer(z, k) * (RationalExpr(1) - z * Q().pow(k))));
  }
}

TEST(RationalExpr, ChInFormalN) {
  RationalExpr u = RationalExpr::var(Var::u);
  RationalExpr f = ch(u.inverse() * Q(-2) * X0() * X1());
  EXPECT_EQ(f.to_string(), "s^2*x0^-1*x1^-1*u + s^-2*x0*x1*u^-1");
}

TEST(RationalExpr, Substitution) {
  Assignment at_zero{{Var::x0, -Q(2)}};
  EXPECT_TRUE(equal(ch(X0()).substitute(at_zero), -ch(Q(2))));

  RationalExpr sym = ch(X()) * ch(X()) / (ch(X()) + 3);
  EXPECT_TRUE(equal(sym.substitute({{Var::x, X().inverse()}}), sym));

  RationalExpr u = RationalExpr::var(Var::u);
  RationalExpr formal = (RationalExpr(1) - u * Q()) / (RationalExpr(1) - u * u * X0());
  for (int n = 0; n < 4; ++n) {
    RationalExpr direct = (RationalExpr(1) - Q().pow(n + 1)) / (RationalExpr(1) - Q().pow(2 * n) * X0());
    EXPECT_TRUE(equal(formal.substitute({{Var::u, Q().pow(n)}}), direct));
  }

  RationalExpr bad = RationalExpr(1) / (X0() - Q());
  try {
    (void)bad.substitute({{Var::x0, Q()}});
    FAIL() << "expected DegenerateSubstitution";
  } catch (const DegenerateSubstitution& e) {
    EXPECT_EQ(e.factor(), "s^4 - x0");
  }
}

TEST(RationalExpr, NonMonomialSubstitutionIsHomomorphic) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    RationalExpr f = random_expr(rng);
    RationalExpr g = random_expr(rng);
    Assignment a{{Var::x, (X() + 2) / (X0() + 3)}};
    EXPECT_TRUE(equal((f * g).substitute(a), f.substitute(a) * g.substitute(a)));
    EXPECT_TRUE(equal((f + g).substitute(a), f.substitute(a) + g.substitute(a)));
  }
}

TEST(RationalExpr, ModularEvaluationIsHomomorphic) {
  std::mt19937_64 rng(3);
  const auto p = modular::default_prime();
  ModPoint pt{p, *modular::sqrt_minus_one(p), {}};
  for (auto& v : pt.values) v = rng() % (p - 2) + 2;
  for (int trial = 0; trial < 20; ++trial) {
    RationalExpr f = random_expr(rng);
    RationalExpr g = random_expr(rng);
    auto ef = f.eval_mod(pt);
    auto eg = g.eval_mod(pt);
    auto efg = (f * g).eval_mod(pt);
    auto esum = (f + g).eval_mod(pt);
    if (!ef || !eg || !efg || !esum) continue;
    EXPECT_EQ(*efg, modular::mul(*ef, *eg, p));
    EXPECT_EQ(*esum, modular::add(*ef, *eg, p));
  }
  RationalExpr zero = (RationalExpr(1) - Q().pow(2)) / (RationalExpr(1) - Q()) - (RationalExpr(1) + Q());
  EXPECT_EQ(*zero.eval_mod(pt), 0U);
}

TEST(Parse, Expressions) {
  const RationalExpr x0 = RationalExpr::var(Var::x0);
  EXPECT_TRUE(equal(parse_expr("-q^{1/2}/x0^2"), -RationalExpr::q_quarter(2) / (x0 * x0)));
  EXPECT_TRUE(equal(parse_expr("3+2*I"), RationalExpr(Scalar(mpq_class(3), mpq_class(2)))));
  EXPECT_TRUE(equal(parse_expr("q^(-3/4) * s^3"), RationalExpr(1)));
  EXPECT_TRUE(equal(parse_expr("(1 - a*b)/c"), (RationalExpr(1) - RationalExpr::var(Var::a) * RationalExpr::var(Var::b)) /
                                                   RationalExpr::var(Var::c)));
  EXPECT_TRUE(equal(parse_expr("q^-1"), RationalExpr::q_quarter(-4)));
  EXPECT_THROW(parse_expr("q^{1/3}"), ParseError);
  EXPECT_THROW(parse_expr("x^{1/2}"), ParseError);
  EXPECT_THROW(parse_expr("1/0"), ParseError);
  EXPECT_THROW(parse_expr("y"), ParseError);
  EXPECT_THROW(parse_expr("(1+x"), ParseError);
  EXPECT_THROW(parse_expr(""), ParseError);
}

}  // namespace
