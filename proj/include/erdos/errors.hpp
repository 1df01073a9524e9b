#pragma once

#include <stdexcept>
#include <string>

namespace erdos {

enum class ErrorCode {
  MalformedInterval,
  ZeroScale,
  BadParams,
  ParseError,
  DuplicatePoint,
  EmptyPattern,
  TooFewPoints,
  NotFineEnough,
  OutOfRange,
  NotDenseEnough,
  NotClusteredEnough,
  TrialBudgetExceeded,
  SelectionFailed,
  EmptyWindow,
  EmptyBox,
  WindowTooSmall,
  AllMethodsFailed,
  IoError,
  UnknownCommand,
};

const char* error_code_name(ErrorCode code);

// Domain error. CLI maps these to exit code 2 (IoError to exit 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace erdos
