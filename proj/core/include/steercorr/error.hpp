#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steercorr {

enum class ErrorCode {
  NotHermitian,
  TraceNotOne,
  NotPositiveSemidefinite,
  OutOfRange,
  OutOfDomain,
  DomainError,
  ZeroVector,
  NotUnbiased,
  InvalidSettings,
  ConvergenceFailure,
  MonotonicityViolation,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type. `magnitude()` carries
// the measured violation (e.g. the most negative eigenvalue) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double magnitude = 0.0);

  ErrorCode code() const noexcept { return code_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorCode code_;
  double magnitude_;
};

}  // namespace steercorr
