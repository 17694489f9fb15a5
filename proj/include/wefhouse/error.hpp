#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wefhouse {

enum class ErrorCode {
  NonPositiveWeight,
  NegativeUtility,
  TooFewHouses,
  MalformedNumber,
  DimensionMismatch,
  InvalidAllocation,
  NegativeSubsidy,
  EmptySet,
  MatchingSaturating,
  NotWefable,
  NotIdenticalUtilities,
  InconsistentPartition,
  NotBivalued,
  NotSquare,
  NotNormalized,
  NotTwoAgents,
  SearchFailed,
  NotUnweighted,
  CapExceeded,
  ModeMismatch,
  InvalidConfig,
  Io,
  Parse,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto a stable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wefhouse
