#include "pinext/error.hpp"

namespace pinext {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInputError: return "InputError";
    case ErrorCode::kClosureExceedsCap: return "ClosureExceedsCap";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::kMismatchedAmbient: return "MismatchedAmbient";
    case ErrorCode::kInvalidCocycle: return "InvalidCocycle";
    case ErrorCode::kNonF2Coefficients: return "NonF2Coefficients";
    case ErrorCode::kNotElementaryAbelian: return "NotElementaryAbelian";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNotOrthogonal: return "NotOrthogonal";
    case ErrorCode::kScalarMismatch: return "ScalarMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDimensionTooSmall: return "DimensionTooSmall";
  }
  return "Unknown";
}

}  // namespace pinext
