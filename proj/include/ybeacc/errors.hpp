#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ybeacc {

enum class ErrorCode {
  DimensionMismatch,
  SizeOverflow,
  SingularSystem,
  CandidatesNotDistinct,
  MinimalPolynomialMismatch,
  NonIntegerMultiplicity,
  NotAccShaped,
  DegenerateDomain,
  DomainViolation,
  NotHecke,
  DegenerateSpectrum,
  RankMismatch,
  ZeroQ,
  NonIntegerTrace,
  DimensionIdentityFailure,
  CharacterCrosscheckFailure,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ybeacc
