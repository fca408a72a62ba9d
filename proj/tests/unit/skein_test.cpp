#include <gtest/gtest.h>

#include "g2skein/skein/skein.hpp"

namespace {

using namespace g2skein;
using skein::RationalExpr;
using skein::Triple;

RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }
const RationalExpr kOne(1);

TEST(Triple, Admissibility) {
  EXPECT_TRUE(skein::is_admissible(0, 0, 0));
  EXPECT_FALSE(skein::is_admissible(1, 1, 1));
  EXPECT_FALSE(skein::is_admissible(1, 1, 4));
  EXPECT_FALSE(skein::is_admissible(-1, 1, 0));
  EXPECT_EQ(skein::admissibility_violation({1, 1, 1}), "i+j+k must be even");
  EXPECT_EQ(skein::admissibility_violation({1, 1, 4}), "k must be at most i+j");
}

TEST(Triple, Enumeration) {
  const std::vector<Triple> two{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  EXPECT_EQ(skein::enumerate_admissible(0), (std::vector<Triple>{{0, 0, 0}}));
  EXPECT_EQ(skein::enumerate_admissible(2), two);
  EXPECT_EQ(skein::enumerate_admissible(6).size(), 20U);
  EXPECT_EQ(skein::enumerate_admissible(10).size(), 56U);
}

TEST(DCoeff, Values) {
  EXPECT_TRUE(equal(skein::d_coeff(1, 1, 3, 2, 1), kOne));
  const RationalExpr expect = -qq(2) / (kOne + qq(4));
  EXPECT_TRUE(equal(skein::d_coeff(1, -1, 1, 1, 2), expect));
  EXPECT_TRUE(equal(skein::d_coeff(-1, 1, 1, 1, 2), expect));
  EXPECT_THROW(skein::d_coeff(-1, 1, 0, 2, 2), skein::BoundaryCoefficient);
  EXPECT_THROW(skein::d_coeff(1, -1, 2, 0, 2), skein::BoundaryCoefficient);
}

TEST(SkeinAction, Examples) {
  const auto k1 = skein::curve_action_skein(1, skein::SkeinVector::basis({0, 0, 0}));
  EXPECT_EQ(k1.terms().size(), 1U);
  EXPECT_TRUE(equal(k1.coefficient({0, 0, 0}), -(qq(2) + qq(-2))));
  EXPECT_EQ(k1.to_string(), "n(0,0,0) : -q^{1/2} - q^{-1/2}\n");

  const auto k2 = skein::curve_action_skein(2, skein::SkeinVector::basis({0, 0, 0}));
  EXPECT_EQ(k2.to_string(), "n(1,1,0) : 1\n");

  const auto k6 = skein::curve_action_skein(6, skein::SkeinVector::basis({1, 1, 2}));
  EXPECT_TRUE(equal(k6.coefficient({2, 1, 3}), kOne));
}

TEST(SkeinAction, OutputsStayAdmissible) {
  for (const Triple& t : skein::enumerate_admissible(10)) {
    for (int c = 1; c <= 6; ++c) {
      const auto image = skein::curve_action_skein(c, skein::SkeinVector::basis(t));
      for (const auto& [target, coeff] : image.terms()) {
        EXPECT_TRUE(skein::is_admissible(target)) << c << " " << t.to_string();
      }
    }
  }
}

TEST(Specialization, Examples) {
  const auto at = skein::triple_specialization({0, 0, 0});
  EXPECT_TRUE(equal(at.at(exact::Var::x0), -qq(2)));
  EXPECT_TRUE(equal(at.at(exact::Var::u), kOne));
  EXPECT_TRUE(equal(exact::ch(RationalExpr::var(exact::Var::x0)).substitute(at), -exact::ch(qq(2))));
  EXPECT_EQ(skein::map_target({1, 1, 2}, 1, -1, 0), (Triple{2, 0, 2}));
  EXPECT_EQ(skein::map_target({1, 1, 2}, 0, -1, 0), (Triple{2, 2, 2}));
  EXPECT_EQ(skein::map_target({3, 2, 1}, 0, 0, 0), (Triple{3, 2, 1}));
  EXPECT_EQ(skein::verify_k3_exponent_identity().status, check::Status::pass);
}

TEST(Correspondence, Examples) {
  auto cmp = check::Comparator::exact();
  const auto r = skein::correspondence_check(2, {1, 1, 2}, cmp);
  EXPECT_TRUE(r.pass) << r.detail;
  bool saw = false;
  for (const auto& t : r.targets) {
    if (t.target == Triple{2, 0, 2}) {
      saw = true;
      EXPECT_TRUE(equal(t.daha, -qq(2) / (kOne + qq(4))));
    }
  }
  EXPECT_TRUE(saw);
  const auto k6 = skein::correspondence_check(6, {0, 0, 0}, cmp);
  EXPECT_TRUE(k6.pass) << k6.detail;
}

TEST(Correspondence, SourceConventionFails) {
  auto cmp = check::Comparator::exact();
  EXPECT_FALSE(skein::correspondence_check(2, {1, 1, 2}, cmp, skein::Convention::source).pass);
}

TEST(Correspondence, SweepToSix) {
  auto cmp = check::Comparator::exact();
  for (const Triple& t : skein::enumerate_admissible(6)) {
    for (int c = 1; c <= 6; ++c) {
      const auto r = skein::correspondence_check(c, t, cmp);
      EXPECT_TRUE(r.pass) << c << " " << t.to_string() << " " << r.detail;
    }
  }
}

}  // namespace
