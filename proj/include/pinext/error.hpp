#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinext {

enum class ErrorCode {
  kInputError,
  kClosureExceedsCap,
  kNotInvertible,
  kNotAHomomorphism,
  kMismatchedAmbient,
  kInvalidCocycle,
  kNonF2Coefficients,
  kNotElementaryAbelian,
  kNoSolution,
  kNotNormal,
  kNotOrthogonal,
  kScalarMismatch,
  kDimensionMismatch,
  kDimensionTooSmall,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// command line front end can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pinext
