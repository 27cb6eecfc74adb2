#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace b3img {

enum class ErrorCode {
  OrderNotDividingConductor,
  DivisionByZero,
  ConductorMismatch,
  NotCoprime,
  DimensionMismatch,
  SingularMatrix,
  ZeroMatrix,
  InvalidSpec,
  InvalidRange,
  MissingParam,
  InvalidOrder,
  NotPO7,
  SingularGenerator,
  OutOfRange,
  ParseError,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderNotDividingConductor: return "OrderNotDividingConductor";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::MissingParam: return "MissingParam";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NotPO7: return "NotPO7";
    case ErrorCode::SingularGenerator: return "SingularGenerator";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace b3img
