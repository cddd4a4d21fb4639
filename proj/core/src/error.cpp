#include "steiner/error.hpp"

namespace steiner {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::EvenOrder: return "EvenOrder";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotDegenerateZeroed: return "NotDegenerateZeroed";
    case ErrorCode::OrderTooLow: return "OrderTooLow";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace steiner
