#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tga {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ZeroArgument,
  InvalidField,
  InvalidTable,
  ZeroEntry,
  IncompatibleLambda,
  AmbientMismatch,
  NotCommutative,
  PreconditionFailed,
  NotAdmissible,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::IncompatibleLambda: return "IncompatibleLambda";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every library failure is reported through this type; `code()` identifies the
/// failure class so callers (the CLI in particular) can map it to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tga
