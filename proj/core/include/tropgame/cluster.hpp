#pragma once

// Grouping branches by valuation vector: cluster multiplicities, coalescence
// and whether coalescent branches also share leading coefficients.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tropgame/puiseux.hpp"
#include "tropgame/tropical.hpp"

namespace tropgame {

/// Absolute per-coordinate tolerance for comparing leading coefficients.
inline constexpr double kLeadingCoeffTolerance = 1e-9;

struct ValuationClass {
  ValuationVector v;
  /// Indices into the input branch list, ascending.
  std::vector<std::size_t> members;
  std::vector<std::vector<Complex>> leadingCoeffs;
  bool coalescent = false;
  bool leadingCoeffCollision = false;
};

struct ClassReport {
  /// Sorted lexicographically by valuation vector.
  std::vector<ValuationClass> classes;
  std::vector<std::size_t> multiplicities;
  std::size_t total = 0;
  /// Some pair in a class cannot be told apart from the known terms. Such
  /// branches are still counted separately.
  bool distinctnessUnverified = false;
};

/// Throws Error{ZeroCoordinate} (via BranchPoint) and DimensionMismatch when
/// branches have different lengths.
ClassReport groupByValuation(std::span<const BranchPoint> branches, double tolerance = kLeadingCoeffTolerance);

enum class Coalescence { Singleton, ReducedTorsion, Collision };
std::string_view toString(Coalescence kind);

Coalescence classifyCoalescence(const ValuationClass& cls);

/// True when some coordinate has a known term, below both truncations, whose
/// coefficients differ by more than the tolerance.
bool provablyDistinct(const BranchPoint& a, const BranchPoint& b, double tolerance = kLeadingCoeffTolerance);

}  // namespace tropgame
