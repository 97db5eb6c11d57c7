#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcoul {

/// Failure categories raised by the library. The enumerator name is the
/// stable identifier reported by the CLI.
enum class ErrorCode {
  InvalidArgument,
  NonPositiveC,
  NegativeTheta,
  NonPositiveBeta,
  NoConvergence,
  PoleArgument,
  IntegerC,
  SingularOrigin,
  ThetaZero,
  UnsupportedConfiguration,
  NonIntegerDimension,
  NoBoundStates,
  NearPole,
  SingularTruncation,
  ZeroMomentum,
  GridTooCoarse,
  NotConverged,
  TooFewStatesFound,
  ToleranceNotMet,
  MatchRadiusTooSmall,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gcoul
