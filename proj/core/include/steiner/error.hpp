#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steiner {

enum class ErrorCode {
  MalformedInput,
  NotATree,
  EmptySet,
  TooLarge,
  BudgetExceeded,
  ConductorMismatch,
  TooSmall,
  EvenOrder,
  ZeroVector,
  NotDegenerateZeroed,
  OrderTooLow,
  WrongShape,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace steiner
