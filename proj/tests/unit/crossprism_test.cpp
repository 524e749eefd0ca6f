#include <gtest/gtest.h>

#include "tropgame/crossprism.hpp"
#include "tropgame/error.hpp"

using namespace tropgame;

namespace {

CrossPrismParams params(std::size_t L, const char* beta = "1") {
  std::vector<Complex> lambdas;
  for (std::size_t k = 0; k < L; ++k) lambdas.push_back(std::polar(1.0 + static_cast<double>(k), 0.7 * k));
  return {L, Rational::parse(beta), lambdas};
}

bool usesVariable(const Equation& eq, std::size_t var) {
  for (const auto& t : eq.terms) {
    if (t.monomial[var] != 0) return true;
  }
  return false;
}

}  // namespace

TEST(BuildFamily, SingleRungIsSelfCyclic) {
  const PolySystem s = buildFamily(params(1));
  EXPECT_EQ(s.variables, (std::vector<std::string>{"x_1_A", "x_1_D"}));
  ASSERT_EQ(s.equations.size(), 2u);
  EXPECT_TRUE(usesVariable(s.equations[0], 0));
  EXPECT_TRUE(s.multilinear);
}

TEST(BuildFamily, SuccessorCoupling) {
  const PolySystem s = buildFamily({2, Rational(1), {Complex(1.0), Complex(1.0)}});
  ASSERT_EQ(s.equations.size(), 4u);
  EXPECT_EQ(s.equations[0].name, "g_1_A");
  // g_1_A couples rung 2, g_2_A couples rung 1.
  EXPECT_TRUE(usesVariable(s.equations[0], 2) && usesVariable(s.equations[0], 3));
  EXPECT_TRUE(usesVariable(s.equations[2], 0) && usesVariable(s.equations[2], 1));
  ASSERT_EQ(s.equations[0].terms.size(), 4u);
  const PuiseuxScalar& constant = s.equations[0].terms[3].coeff;
  EXPECT_EQ(constant.coefficientAt(Rational(0)), Complex(1.0));
  EXPECT_EQ(constant.coefficientAt(Rational(1)), Complex(-1.0));
}

TEST(BuildFamily, RungEquationsAvoidOwnVariables) {
  for (std::size_t L = 2; L <= 6; ++L) {
    const PolySystem s = buildFamily(params(L));
    for (std::size_t k = 0; k < L; ++k) {
      for (std::size_t e : {2 * k, 2 * k + 1}) {
        EXPECT_FALSE(usesVariable(s.equations[e], 2 * k));
        EXPECT_FALSE(usesVariable(s.equations[e], 2 * k + 1));
      }
    }
  }
}

TEST(BuildFamily, InvalidParams) {
  EXPECT_THROW(buildFamily({0, Rational(1), {}}), Error);
  EXPECT_THROW(buildFamily({1, Rational(0), {Complex(1.0)}}), Error);
  EXPECT_THROW(buildFamily({1, Rational(-1), {Complex(1.0)}}), Error);
  EXPECT_THROW(buildFamily({2, Rational(1), {Complex(1.0)}}), Error);
  EXPECT_THROW(buildFamily({1, Rational(1), {Complex(0.0)}}), Error);
}

TEST(AnalyticBranches, SingleRungWithLambdaFour) {
  const auto e = analyticBranches({1, Rational(1), {Complex(4.0)}});
  ASSERT_EQ(e.branches.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    const double sign = e.profiles[i].epsilons[0];
    for (std::size_t j = 0; j < 2; ++j) {
      const PuiseuxScalar& x = e.branches[i][j];
      ASSERT_TRUE(x.isExact());
      ASSERT_EQ(x.terms().size(), 2u);
      EXPECT_EQ(x.terms()[1].exponent, Rational::parse("1/2"));
      EXPECT_EQ(x.terms()[1].coeff, Complex(2.0 * sign));
    }
  }
}

TEST(AnalyticBranches, ValuationZeroAndUnitLeadingCoefficients) {
  const auto e = analyticBranches(params(4, "3/2"));
  ASSERT_EQ(e.branches.size(), 16u);
  for (const auto& b : e.branches) {
    for (const auto& v : b.valuation()) EXPECT_EQ(v, Rational(0));
    for (const auto& c : b.leadingCoefficients()) EXPECT_EQ(c, Complex(1.0));
  }
}

TEST(AnalyticBranches, DistinctSignProfiles) {
  const auto e = analyticBranches(params(3));
  EXPECT_EQ(e.profiles[0].label(), "+++");
  EXPECT_EQ(e.profiles[5].label(), "-+-");
  EXPECT_FALSE(groupByValuation(e.branches).distinctnessUnverified);
}

TEST(AnalyticBranches, CountOnlyAboveCap) {
  const auto e = analyticBranches(params(21));
  EXPECT_TRUE(e.countOnly);
  EXPECT_TRUE(e.branches.empty());
  EXPECT_EQ(e.count, BigInt(1) << 21);
}

TEST(CollisionReport, ChainForSmallL) {
  for (std::size_t L = 1; L <= 6; ++L) {
    const CollisionReport r = collisionReport(params(L, "1/2"));
    const BigInt expected = BigInt(1) << static_cast<mp_bitcnt_t>(L);
    EXPECT_EQ(r.branchCount, expected);
    EXPECT_EQ(r.fiber.length, expected);
    EXPECT_EQ(r.valuationClasses, 1u);
    EXPECT_TRUE(r.residualsVerified);
    ASSERT_TRUE(r.degreeCheck.clusterSum);
    EXPECT_EQ(*r.degreeCheck.clusterSum, expected);
    EXPECT_TRUE(r.consistent);
    EXPECT_EQ(r.warnings.empty(), L != 1);
  }
}

TEST(CollisionReport, DistinctLambdasDifferAcrossRungs) {
  const CrossPrismParams p{2, Rational(1), {Complex(1.0), Complex(9.0)}};
  const auto e = analyticBranches(p);
  EXPECT_NE(e.branches[0][0].terms()[1].coeff, e.branches[0][2].terms()[1].coeff);
  EXPECT_EQ(e.branches[0][2].terms()[1].coeff, Complex(3.0));
  const CollisionReport r = collisionReport(p);
  EXPECT_EQ(r.branchCount, 4);
  EXPECT_EQ(r.fiber.length, 4);
}
