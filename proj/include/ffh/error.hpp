#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffh {

// Stable machine-readable error categories. The CLI maps these to exit codes.
enum class ErrorCode { Parse, Budget, Precondition, Consistency };

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorCode::Parse, message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& message) : Error(ErrorCode::Budget, message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error(ErrorCode::Precondition, message) {}
};

// Raised when an internal cross-check disagrees (two routes to the same value,
// or a guaranteed existence result that was not found).
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& message)
      : Error(ErrorCode::Consistency, message) {}
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Budget: return "BUDGET";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::Consistency: return "CONSISTENCY";
  }
  return "UNKNOWN";
}

}  // namespace ffh
