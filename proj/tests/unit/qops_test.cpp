#include <gtest/gtest.h>

#include "g2skein/exact/modular.hpp"
#include "g2skein/qops/verify.hpp"

namespace {

using namespace g2skein;
using exact::Var;
using qops::Operator;
using qops::RationalExpr;
using qops::ShiftWord;

RationalExpr X() { return RationalExpr::var(Var::x); }
RationalExpr X0() { return RationalExpr::var(Var::x0); }
RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }

void expect_all_pass(const std::vector<check::CheckRecord>& records) {
  for (const auto& r : records) EXPECT_EQ(r.status, check::Status::pass) << r.case_id << "\n" << r.lhs << "\n" << r.rhs;
}

TEST(ShiftWord, ApplyToFunctions) {
  EXPECT_TRUE(equal(Operator::word(ShiftWord::shift(1)).apply(exact::ch(X())), qq(2) * X() + qq(-2) / X()));
  EXPECT_TRUE(equal(Operator::word(ShiftWord::reflection()).apply(exact::ch(X().pow(3))), exact::ch(X().pow(3))));
  EXPECT_TRUE(equal(Operator::word(ShiftWord::shift0(1)).apply(X0() * X0()), qq(4) * X0() * X0()));
}

TEST(ShiftWord, WordRelations) {
  check::Comparator cmp = check::Comparator::exact();
  const Operator s = Operator::word(ShiftWord::reflection());
  const Operator D = Operator::word(ShiftWord::shift(1));
  const Operator Dinv = Operator::word(ShiftWord::shift(-1));
  const Operator D0 = Operator::word(ShiftWord::shift0(1));
  EXPECT_TRUE(qops::equal(s * s, Operator::identity(), cmp));
  EXPECT_TRUE(qops::equal(s * D, Dinv * s, cmp));
  EXPECT_TRUE(qops::equal(D * Dinv, Operator::identity(), cmp));
  EXPECT_TRUE(qops::equal(D0 * s, s * D0, cmp));
  EXPECT_TRUE(qops::equal(D0 * D, D * D0, cmp));
  EXPECT_TRUE(qops::equal(D * Operator::multiplication(X()), Operator::word(ShiftWord::shift(1), qq(2) * X()), cmp));
}

TEST(Operator, CombineAndPrint) {
  const Operator A = qops::build_curve(2);
  EXPECT_TRUE((A + RationalExpr(-1) * A).is_zero());
  check::Comparator cmp = check::Comparator::exact();
  EXPECT_TRUE(qops::equal(RationalExpr(1) * A, A, cmp));
  EXPECT_EQ(Operator::word(ShiftWord::shift0(-1), X()).to_string(), "(x) * s^0 * D^0 * D0^-1 * D1^0\n");
}

TEST(Operator, CompositionIsHomomorphic) {
  std::vector<Operator> lib{qops::build_hecke(qops::Hecke::T0), qops::build_hecke(qops::Hecke::T1),
                            qops::build_hecke(qops::Hecke::U0), qops::build_curve(3), qops::build_curve(2)};
  std::vector<RationalExpr> fs{RationalExpr(1), exact::ch(X()), exact::ch(X()) * exact::ch(X()),
                               X0() * exact::ch(X()), exact::ch(X0())};
  for (const auto& A : lib) {
    for (const auto& B : lib) {
      const Operator AB = A * B;
      for (const auto& f : fs) EXPECT_TRUE(equal(AB.apply(f), A.apply(B.apply(f))));
    }
  }
}

TEST(Library, NamedOperatorFacts) {
  const RationalExpr I = RationalExpr::i();
  const RationalExpr x1 = RationalExpr::var(Var::x1);
  EXPECT_TRUE(equal(qops::build_hecke(qops::Hecke::T1).apply(RationalExpr(1)), -I * qq(2) / x1));
  const Operator K = qops::build_KG(qops::KGKind::K, 0, 0);
  EXPECT_TRUE(equal(K.terms().at(ShiftWord::shift0(1)), RationalExpr(-1) / (RationalExpr(1) - X0() * X0())));
  const Operator G = qops::build_KG(qops::KGKind::G, 0, 0);
  const RationalExpr g_down = (qq(2) * X() + X0() * X0()) * (qq(2) + X() * X0() * X0()) /
                              (qq(2) * X() * (RationalExpr(1) - X0() * X0()));
  EXPECT_TRUE(equal(G.terms().at(ShiftWord::shift0(-1)), g_down));
  EXPECT_EQ((K - G).terms().count(ShiftWord::shift0(1)), 0U);
  EXPECT_TRUE(equal(qops::build_curve(3).apply(RationalExpr(1)),
                    -exact::ch(qq(-2) * X0() * x1)));
  EXPECT_TRUE(qops::build_dhat(1, 1).apply(RationalExpr(1)).is_zero());
  EXPECT_TRUE(qops::build_kalnins(qops::Kalnins::l, {1, 1, 1, 1}).apply(RationalExpr(7)).is_zero());
}

TEST(Verify, HeckeRelations) {
  check::Comparator cmp = check::Comparator::exact();
  auto recs = qops::verify_hecke_relations(cmp);
  ASSERT_EQ(recs.size(), 4U);
  expect_all_pass(recs);
  EXPECT_EQ(qops::hecke_negative_control(cmp).status, check::Status::fail);
}

TEST(Verify, DhatFactorizations) {
  check::Comparator cmp = check::Comparator::exact();
  expect_all_pass(qops::verify_dhat_factorizations(cmp));
  EXPECT_EQ(qops::dhat_negative_control(cmp).status, check::Status::fail);
  EXPECT_EQ(qops::verify_k6_reconstruction(cmp).status, check::Status::pass);
}

TEST(Verify, MultiplicationCompatibility) {
  check::Comparator cmp = check::Comparator::exact();
  for (int a = 1; a <= 6; ++a) expect_all_pass(qops::verify_mult_compatibility(a, qops::default_test_functions(), cmp));
  EXPECT_THROW(qops::verify_mult_compatibility(1, {X()}, cmp), std::invalid_argument);
}

TEST(Verify, SymmetricPreservation) {
  check::Comparator cmp = check::Comparator::exact();
  for (int a : {1, 3, 6}) expect_all_pass(qops::verify_symmetric_preservation(a, 2, cmp));
}

TEST(Verify, RandomModeAgrees) {
  check::Comparator cmp = check::Comparator::random(exact::modular::default_prime(), 11);
  expect_all_pass(qops::verify_hecke_relations(cmp));
  EXPECT_EQ(qops::hecke_negative_control(cmp).status, check::Status::fail);
}

}  // namespace
