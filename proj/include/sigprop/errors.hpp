#pragma once

#include <stdexcept>
#include <string>

namespace sigprop {

enum class ErrorCode {
  MalformedCsv,
  NonMonotoneTime,
  NonFiniteValue,
  OutOfDomain,
  TooFewSamples,
  TooFewExtrema,
  MissingDerivativeColumn,
  UnknownSignal,
  DivisionByZero,
  NotProjectable,
  GridMismatch,
  TraceTooLarge,
  SyntaxError,
  DuplicatePropertyName,
  OverlappingIntervals,
  InvalidThreshold,
  PunctualInterval,
  Io,
};

const char* error_code_name(ErrorCode code);

/// Base class for all library errors; `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sigprop
