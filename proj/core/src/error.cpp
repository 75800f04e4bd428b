#include "steercorr/error.hpp"

namespace steercorr {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotUnbiased: return "NotUnbiased";
    case ErrorCode::InvalidSettings: return "InvalidSettings";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, double magnitude)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      magnitude_(magnitude) {}

}  // namespace steercorr
