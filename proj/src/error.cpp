#include "wefhouse/error.hpp"

namespace wefhouse {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NegativeUtility: return "NegativeUtility";
    case ErrorCode::TooFewHouses: return "TooFewHouses";
    case ErrorCode::MalformedNumber: return "MalformedNumber";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidAllocation: return "InvalidAllocation";
    case ErrorCode::NegativeSubsidy: return "NegativeSubsidy";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::MatchingSaturating: return "MatchingSaturating";
    case ErrorCode::NotWefable: return "NotWefable";
    case ErrorCode::NotIdenticalUtilities: return "NotIdenticalUtilities";
    case ErrorCode::InconsistentPartition: return "InconsistentPartition";
    case ErrorCode::NotBivalued: return "NotBivalued";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotTwoAgents: return "NotTwoAgents";
    case ErrorCode::SearchFailed: return "SearchFailed";
    case ErrorCode::NotUnweighted: return "NotUnweighted";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace wefhouse
