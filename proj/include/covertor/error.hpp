#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covertor {

enum class ErrorCode {
  ParseError,
  ValidationError,
  NotAKnot,
  NotCoprime,
  DiagramTooLarge,
  ZeroPolynomial,
  NotHermitian,
  PrecisionExhausted,
  DegenerateAtRoot,
  NotRationalHomologySphere,
  MissingFroyshov,
  NotPrimePower,
  DetNotOne,
  NotPairwiseCoprime,
  BraidRequired,
};

std::string_view error_code_name(ErrorCode code);

/// Process exit status associated with an error class: 2 for malformed
/// input, 3 for violated mathematical preconditions, 4 for numerical failure.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covertor
