#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toepsense {

enum class ErrorCode {
  kDimensionMismatch,
  kInvalidPermutation,
  kInvalidArgument,
  kGuardExceeded,
  kZeroPolynomial,
  kRankDeficient,
  kInvariantViolation,
  kUnknownFixture,
  kIo,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code lets callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toepsense
