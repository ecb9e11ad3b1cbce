#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seppart {

enum class ErrorCode {
  MismatchedShape,
  Overflow,
  IllegalShift,
  OutOfRange,
  Domain,
  Capacity,
  NotAMember,
  Incomplete,
  Parse,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MismatchedShape: return "MISMATCHED_SHAPE";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::IllegalShift: return "ILLEGAL_SHIFT";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::Capacity: return "CAPACITY";
    case ErrorCode::NotAMember: return "NOT_A_MEMBER";
    case ErrorCode::Incomplete: return "INCOMPLETE";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace seppart
