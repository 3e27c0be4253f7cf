#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tolpoly {

enum class ErrorKind {
  ZeroNormal,
  EmptyPolytope,
  UnboundedInput,
  NonPositiveMargin,
  NotAVertex,
  DimMismatch,
  UnboundedAfterCaps,
  NonPositiveC,
  SchemaError,
  UnknownReference,
  InconsistentDimension,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroNormal: return "ZeroNormal";
    case ErrorKind::EmptyPolytope: return "EmptyPolytope";
    case ErrorKind::UnboundedInput: return "UnboundedInput";
    case ErrorKind::NonPositiveMargin: return "NonPositiveMargin";
    case ErrorKind::NotAVertex: return "NotAVertex";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::UnboundedAfterCaps: return "UnboundedAfterCaps";
    case ErrorKind::NonPositiveC: return "NonPositiveC";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::InconsistentDimension: return "InconsistentDimension";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace tolpoly
