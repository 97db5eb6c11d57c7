#include "gcoul/error.hpp"

namespace gcoul {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveC: return "NonPositiveC";
    case ErrorCode::NegativeTheta: return "NegativeTheta";
    case ErrorCode::NonPositiveBeta: return "NonPositiveBeta";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::PoleArgument: return "PoleArgument";
    case ErrorCode::IntegerC: return "IntegerC";
    case ErrorCode::SingularOrigin: return "SingularOrigin";
    case ErrorCode::ThetaZero: return "ThetaZero";
    case ErrorCode::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorCode::NonIntegerDimension: return "NonIntegerDimension";
    case ErrorCode::NoBoundStates: return "NoBoundStates";
    case ErrorCode::NearPole: return "NearPole";
    case ErrorCode::SingularTruncation: return "SingularTruncation";
    case ErrorCode::ZeroMomentum: return "ZeroMomentum";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::TooFewStatesFound: return "TooFewStatesFound";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::MatchRadiusTooSmall: return "MatchRadiusTooSmall";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace gcoul
