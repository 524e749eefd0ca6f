#pragma once

// Tropical weights, initial forms and pointwise cell classification of a
// valuation vector against each generator's tropical hypersurface.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tropgame/polysys.hpp"

namespace tropgame {

using ValuationVector = std::vector<Rational>;

/// Parses "0,0,1/2,..." into a valuation vector.
ValuationVector parseValuationVector(std::string_view text);

struct TropicalWeight {
  Rational minWeight;
  std::vector<Monomial> minimizers;
  /// Indices into Equation::terms, ascending.
  std::vector<std::size_t> minimizerTerms;
};

/// min over terms of val(c_alpha) + alpha . v, with all minimizers.
/// Throws DimensionMismatch, ZeroCoefficient.
TropicalWeight tropicalWeight(const Equation& equation, const ValuationVector& v);

struct InitialTerm {
  Complex coeff;
  Monomial monomial;
};

struct InitialForm {
  std::vector<InitialTerm> terms;
  Rational minWeight;
};

/// Minimizing terms with their leading complex coefficients, in term order.
InitialForm initialForm(const Equation& equation, const ValuationVector& v);

std::vector<InitialForm> initialSystem(const PolySystem& system, const ValuationVector& v);

/// The initial system re-encoded in the polysys schema, each coefficient a
/// single exponent-0 term.
PolySystem initialSystemAsPolySystem(const PolySystem& system, const ValuationVector& v);

/// Reads an initial system back (every coefficient must be a constant).
std::vector<InitialForm> initialFormsFrom(const PolySystem& initial);

enum class CellTag { MonomialInitial, Binomial, Collision };
std::string_view toString(CellTag tag);

struct GeneratorCell {
  std::size_t minimizerCount = 0;
  CellTag tag = CellTag::MonomialInitial;
  Rational minWeight;
};

struct CellClassification {
  std::vector<GeneratorCell> perGenerator;
  /// Every generator has exactly two minimizers.
  bool generatorWiseGeneric = false;
  /// Every generator has at least two minimizers.
  bool inTropPrevariety = false;
};

CellClassification classifyCell(const PolySystem& system, const ValuationVector& v);

/// |in_v(f)(c)| <= tol * max term modulus counts as zero.
inline constexpr double kDefaultResidualTolerance = 1e-9;

enum class ResidualStatus { Cancelled, NotCancelled, Indeterminate };
std::string_view toString(ResidualStatus status);

struct ResidualReport {
  ResidualStatus status = ResidualStatus::Indeterminate;
  Rational tropicalWeight;
  /// Least exponent of f(x(t)) with a non-negligible coefficient. Absent when
  /// the substituted series is zero and exact.
  std::optional<Rational> residualValuation;
  /// Set when residualValuation is only the truncation order of the result.
  bool residualIsLowerBound = false;
  /// |in_v(f)(lc(x))|, the coefficient of t^W.
  double initialResidual = 0.0;
};

struct ResidualOptions {
  double tolerance = kDefaultResidualTolerance;
  double zeroThreshold = kDefaultZeroThreshold;
};

/// Substitutes the branch into every equation and checks that the
/// coefficient of t^W (W = tropical weight at v = val(branch)) cancels.
/// Equations whose substituted series is not known beyond W are
/// Indeterminate.
std::vector<ResidualReport> verifyBranchResidual(const PolySystem& system, const BranchPoint& branch,
                                                 const ResidualOptions& options = {});

}  // namespace tropgame
