#pragma once

#include <stdexcept>
#include <string>

namespace nbihom {

/// Failure categories surfaced by the library. The CLI maps every one of them
/// to exit status 2.
enum class ErrorCode {
  ParseError,
  DimensionMismatch,
  AmbientMismatch,
  IndexOutOfRange,
  FieldMismatch,
  DivisionByZero,
  InvalidAlgebra,
  NonCommutingTwists,
  ArityMismatch,
  InvalidTrace,
  InvalidParams,
  NotAnIdeal,
  NotComplementary,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nbihom
