#include "tropgame/error.hpp"

namespace tropgame {

std::string_view toString(ErrorCode code) {
  switch (code) {
    case ErrorCode::Schema: return "SCHEMA";
    case ErrorCode::DuplicateMonomial: return "DUPLICATE_MONOMIAL";
    case ErrorCode::Multilinearity: return "MULTILINEARITY";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::EmptySystem: return "EMPTY_SYSTEM";
    case ErrorCode::ZeroCoefficient: return "ZERO_COEFFICIENT";
    case ErrorCode::ValuationOfZero: return "VALUATION_OF_ZERO";
    case ErrorCode::ZeroCoordinate: return "ZERO_COORDINATE";
    case ErrorCode::NonSquare: return "NON_SQUARE";
    case ErrorCode::NonBinomial: return "NON_BINOMIAL";
    case ErrorCode::NotASolution: return "NOT_A_SOLUTION";
    case ErrorCode::InvalidParams: return "INVALID_PARAMS";
    case ErrorCode::SizeCap: return "SIZE_CAP";
    case ErrorCode::Io: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace tropgame
