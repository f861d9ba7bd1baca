#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace lsys {

enum class ErrorCode {
  LinearityViolation,
  BadPointId,
  BadLineIndex,
  DuplicateLine,
  EmptyLine,
  TooManyPoints,
  TooFewLines,
  TooLarge,
  NotPrime,
  PointOnLine,
  NotATriangle,
  GenerationExhausted,
  InvalidGraph,
  InvalidArgument,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LinearityViolation: return "LinearityViolation";
    case ErrorCode::BadPointId: return "BadPointId";
    case ErrorCode::BadLineIndex: return "BadLineIndex";
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::EmptyLine: return "EmptyLine";
    case ErrorCode::TooManyPoints: return "TooManyPoints";
    case ErrorCode::TooFewLines: return "TooFewLines";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::PointOnLine: return "PointOnLine";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Exception type thrown by every lsys operation. `line_pair()` is set for
/// errors that concern two lines (linearity violations, duplicates).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::pair<std::size_t, std::size_t>> line_pair = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message),
        line_pair_(line_pair) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }
  const std::optional<std::pair<std::size_t, std::size_t>>& line_pair() const noexcept {
    return line_pair_;
  }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::pair<std::size_t, std::size_t>> line_pair_;
};

}  // namespace lsys
