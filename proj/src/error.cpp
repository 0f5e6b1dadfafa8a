#include "covertor/error.hpp"

namespace covertor {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DiagramTooLarge: return "DiagramTooLarge";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::DegenerateAtRoot: return "DegenerateAtRoot";
    case ErrorCode::NotRationalHomologySphere: return "NotRationalHomologySphere";
    case ErrorCode::MissingFroyshov: return "MissingFroyshov";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::DetNotOne: return "DetNotOne";
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::BraidRequired: return "BraidRequired";
  }
  return "UnknownError";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::BraidRequired:
      return 2;
    case ErrorCode::PrecisionExhausted:
      return 4;
    default:
      return 3;
  }
}

}  // namespace covertor
