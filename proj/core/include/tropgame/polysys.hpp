#pragma once

// Sparse polynomial systems with Puiseux coefficients.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropgame/puiseux.hpp"

namespace tropgame {

/// Exponent vector; entries are nonnegative.
using Monomial = std::vector<int>;

struct Term {
  PuiseuxScalar coeff;
  Monomial monomial;
};

struct Equation {
  std::string name;
  std::vector<Term> terms;
};

struct PolySystem {
  std::vector<std::string> variables;
  std::vector<Equation> equations;
  bool multilinear = false;

  std::size_t arity() const { return variables.size(); }
};

/// Checks every structural invariant, throwing the matching ErrorCode:
/// EmptySystem, DimensionMismatch, Multilinearity, DuplicateMonomial,
/// ZeroCoefficient or Schema (negative exponents, repeated variable names).
void validateSystem(const PolySystem& system);

/// Parses and validates the system JSON schema:
///   {"variables": [...], "multilinear": bool,
///    "equations": [{"name": str, "terms": [{"coeff": scalar, "monomial": [int...]}]}]}
PolySystem parseSystem(std::string_view jsonText);
PolySystem systemFromJson(const nlohmann::json& doc);
nlohmann::json systemToJson(const PolySystem& system);

/// Exponent vectors carrying a nonzero coefficient, in term order.
std::vector<Monomial> newtonSupport(const Equation& equation);

/// Substitutes the branch into the equation. Throws DimensionMismatch.
PuiseuxScalar evaluatePolyAt(const BranchPoint& branch, const Equation& equation,
                             double zeroThreshold = kDefaultZeroThreshold);

}  // namespace tropgame
