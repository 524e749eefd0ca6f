#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tropgame/cluster.hpp"
#include "tropgame/crossprism.hpp"
#include "tropgame/error.hpp"

using namespace tropgame;

namespace {

BranchPoint constantBranch(std::initializer_list<Complex> values) {
  std::vector<PuiseuxScalar> coords;
  for (auto v : values) coords.push_back(PuiseuxScalar::constant(v));
  return BranchPoint(coords);
}

}  // namespace

TEST(GroupByValuation, CrossPrismIsOneCollisionClass) {
  const CrossPrismParams p{2, Rational(1), {Complex(2.0), Complex(0.0, 3.0)}};
  const auto branches = analyticBranches(p).branches;
  const ClassReport r = groupByValuation(branches);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_EQ(r.multiplicities, std::vector<std::size_t>{4});
  EXPECT_TRUE(r.classes[0].coalescent);
  EXPECT_TRUE(r.classes[0].leadingCoeffCollision);
  EXPECT_EQ(classifyCoalescence(r.classes[0]), Coalescence::Collision);
  EXPECT_FALSE(r.distinctnessUnverified);
}

TEST(GroupByValuation, DifferentValuationsSplit) {
  const std::vector<BranchPoint> b{
      BranchPoint({PuiseuxScalar::monomial(1.0, Rational(1)), PuiseuxScalar::constant(1.0)}),
      BranchPoint({PuiseuxScalar::monomial(1.0, Rational(2)), PuiseuxScalar::constant(1.0)})};
  const ClassReport r = groupByValuation(b);
  ASSERT_EQ(r.classes.size(), 2u);
  EXPECT_EQ(classifyCoalescence(r.classes[0]), Coalescence::Singleton);
  EXPECT_EQ(r.classes[0].v[0], Rational(1));
  EXPECT_EQ(r.classes[1].v[0], Rational(2));
}

TEST(GroupByValuation, TorsionPairIsReducedTorsion) {
  const std::vector<BranchPoint> b{constantBranch({1.0, 1.0}), constantBranch({-1.0, -1.0})};
  const ClassReport r = groupByValuation(b);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_TRUE(r.classes[0].coalescent);
  EXPECT_FALSE(r.classes[0].leadingCoeffCollision);
  EXPECT_EQ(classifyCoalescence(r.classes[0]), Coalescence::ReducedTorsion);
}

TEST(GroupByValuation, IndistinguishableBranchesAreFlaggedNotMerged) {
  const PuiseuxScalar x = PuiseuxScalar::fromTerms({{Rational(0), 1.0}}, Rational(1));
  const std::vector<BranchPoint> b{BranchPoint({x}), BranchPoint({x})};
  const ClassReport r = groupByValuation(b);
  EXPECT_EQ(r.total, 2u);
  EXPECT_EQ(r.multiplicities, std::vector<std::size_t>{2});
  EXPECT_TRUE(r.distinctnessUnverified);
}

TEST(GroupByValuation, MismatchedLengthsRejected) {
  const std::vector<BranchPoint> b{constantBranch({1.0}), constantBranch({1.0, 2.0})};
  EXPECT_THROW(groupByValuation(b), Error);
}

TEST(GroupByValuation, PartitionOfRandomBranches) {
  std::mt19937_64 rng(oracle::seed() + 12);
  std::uniform_int_distribution<int> exponent(-2, 2);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BranchPoint> branches;
    for (int k = 0; k < 12; ++k) {
      std::vector<PuiseuxScalar> coords;
      for (int j = 0; j < 3; ++j) {
        int c = coef(rng);
        if (c == 0) c = 1;
        coords.push_back(PuiseuxScalar::monomial(static_cast<double>(c), Rational(exponent(rng))));
      }
      branches.emplace_back(coords);
    }
    const ClassReport r = groupByValuation(branches);
    std::vector<std::size_t> seen;
    std::size_t sum = 0;
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      const auto& cls = r.classes[i];
      ASSERT_FALSE(cls.members.empty());
      ASSERT_EQ(cls.coalescent, cls.members.size() > 1);
      ASSERT_EQ(r.multiplicities[i], cls.members.size());
      if (i > 0) ASSERT_LT(r.classes[i - 1].v, cls.v);
      for (std::size_t m : cls.members) {
        ASSERT_EQ(branches[m].valuation(), cls.v);
        seen.push_back(m);
      }
      sum += cls.members.size();
    }
    ASSERT_EQ(sum, branches.size());
    std::sort(seen.begin(), seen.end());
    ASSERT_TRUE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}
