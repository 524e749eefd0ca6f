#pragma once

// Length of a collision initial fiber at a torus point, for local ideals made
// of linear differences u_a - u_b plus generators that become monomials once
// those differences are substituted away. Anything else is reported as
// UNSUPPORTED instead of being approximated.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropgame/binomial.hpp"
#include "tropgame/polysys.hpp"
#include "tropgame/tropical.hpp"

namespace tropgame {

/// Sparse polynomial in the local coordinates u = x - basePoint.
using LocalPolynomial = std::map<Monomial, Complex>;

enum class GeneratorKind { LinearDifference, General };
std::string_view toString(GeneratorKind kind);

struct LocalGenerator {
  LocalPolynomial poly;
  GeneratorKind kind = GeneratorKind::General;
};

struct LocalIdealPresentation {
  ComplexVector basePoint;
  /// Names of the local coordinates, one per ambient variable.
  std::vector<std::string> variables;
  /// Coordinates removed by substitution; their exponents are always 0.
  std::vector<bool> eliminated;
  std::vector<LocalGenerator> generators;
};

/// Rewrites each initial form in u = x - basePoint. The constant terms must
/// vanish (|f(p)| <= tol * max |c_alpha p^alpha|) and are then dropped;
/// otherwise Error{NotASolution}.
LocalIdealPresentation shiftToLocal(std::span<const InitialForm> initial, const ComplexVector& basePoint,
                                    std::vector<std::string> variableNames = {},
                                    double tolerance = kDefaultResidualTolerance);

/// Substitutes u_a := u_b for every linear difference u_a - u_b (a < b),
/// removing it, until none remain.
LocalIdealPresentation eliminateLinearDifferences(LocalIdealPresentation presentation,
                                                  double tolerance = kDefaultResidualTolerance);

enum class LengthStatus { Finite, Unsupported };
std::string_view toString(LengthStatus status);

struct LengthReport {
  LengthStatus status = LengthStatus::Unsupported;
  BigInt length = 0;
  /// Standard monomials over all ambient coordinates (eliminated ones are 0).
  std::vector<Monomial> staircase;
  bool staircaseTruncated = false;
  /// Lengths of the variable-disjoint factors, when there are at least two.
  std::vector<BigInt> perRungFactors;
  /// NON_MONOMIAL_GENERATOR, NOT_ZERO_DIMENSIONAL or SIZE_CAP when unsupported.
  std::string reason;
  std::optional<std::size_t> offendingGenerator;
};

/// Staircase count of the monomial ideal left after elimination.
LengthReport monomialQuotientLength(const LocalIdealPresentation& presentation,
                                    double tolerance = kDefaultResidualTolerance);

/// shiftToLocal -> eliminateLinearDifferences -> monomialQuotientLength.
LengthReport fiberLength(std::span<const InitialForm> initial, const ComplexVector& basePoint,
                         double tolerance = kDefaultResidualTolerance);

}  // namespace tropgame
