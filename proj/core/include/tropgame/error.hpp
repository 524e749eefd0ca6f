#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropgame {

/// Error classes raised by the library. Every failing operation throws an
/// Error carrying one of these codes; the CLI maps each code to an exit
/// status and a structured error object.
enum class ErrorCode {
  Schema,               // malformed JSON or wrong field types
  DuplicateMonomial,    // two terms of one equation share a monomial
  Multilinearity,       // exponent > 1 under "multilinear": true
  DimensionMismatch,    // vector/monomial length disagrees with the arity
  EmptySystem,          // no equations, or an equation with no terms
  ZeroCoefficient,      // a Puiseux coefficient that is identically zero
  ValuationOfZero,      // val() or leadingCoeff() of the zero scalar
  ZeroCoordinate,       // branch coordinate or binomial right-hand side is zero
  NonSquare,            // square matrix / square system required
  NonBinomial,          // initial form with != 2 terms reached the binomial stage
  NotASolution,         // base point does not solve the initial system
  InvalidParams,        // out-of-range parameters (cross-prism, sizes, parsing)
  SizeCap,              // computation refused because of a size cap
  Io,                   // unreadable input file
};

std::string_view toString(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropgame
