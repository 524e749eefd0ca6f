#pragma once

// The collision-normalized cross-prism family: L rungs with cyclic successor
// coupling, g_{k,A} = (x_{k+1,A} - 1)(x_{k+1,D} - 1) - lambda_{k+1} t^beta and
// g_{k,D} = x_{k+1,A} - x_{k+1,D}, together with its closed-form branches.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropgame/cluster.hpp"
#include "tropgame/fiber.hpp"
#include "tropgame/polysys.hpp"

namespace tropgame {

struct CrossPrismParams {
  std::size_t L = 1;
  Rational beta = 1;
  std::vector<Complex> lambdas;
};

/// Throws Error{InvalidParams} unless L >= 1, beta > 0 and there are L
/// nonzero lambdas.
void validateParams(const CrossPrismParams& p);

/// Variables x_1_A, x_1_D, x_2_A, ...; equations g_1_A, g_1_D, g_2_A, ...
PolySystem buildFamily(const CrossPrismParams& p);

/// Bit k of `index` set means epsilon_{k+1} = -1.
struct SignProfile {
  std::vector<int> epsilons;

  static SignProfile fromIndex(std::size_t index, std::size_t L);
  std::string label() const;
};

/// Branch enumeration is refused above this L; only the count is reported.
inline constexpr std::size_t kBranchEnumerationCap = 20;

struct BranchEnumeration {
  std::vector<SignProfile> profiles;
  /// x_{k,A}(t) = x_{k,D}(t) = 1 + eps_k sqrt(lambda_k) t^{beta/2}, stored
  /// exactly; aligned with profiles.
  std::vector<BranchPoint> branches;
  BigInt count = 0;
  bool countOnly = false;
};

BranchEnumeration analyticBranches(const CrossPrismParams& p);

struct DegreeCheck {
  /// Sum of cluster multiplicities; absent in count-only mode.
  std::optional<BigInt> clusterSum;
  /// 2^L.
  BigInt expected = 0;
  bool consistent = false;
};

struct CollisionReport {
  BigInt branchCount = 0;
  bool countOnly = false;
  std::optional<ClassReport> classes;
  std::size_t valuationClasses = 0;
  /// Every equation Cancelled for every enumerated branch.
  bool residualsVerified = false;
  LengthReport fiber;
  DegreeCheck degreeCheck;
  /// branchCount = 2^L = fiber length, one valuation class, residuals ok.
  bool consistent = false;
  std::vector<std::string> warnings;
};

CollisionReport collisionReport(const CrossPrismParams& p, double tolerance = kDefaultResidualTolerance);

}  // namespace tropgame
