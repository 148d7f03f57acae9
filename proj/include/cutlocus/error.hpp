#pragma once

#include <stdexcept>
#include <string>

namespace cutlocus {

enum class ErrorKind {
  Disconnected,
  EndpointOutOfRange,
  TooLarge,
  BadRotation,
  MissingSign,
  NotCyclicPart,
  BudgetExceeded,
  LoopContraction,
  SwitchedContraction,
  DegreeTooSmall,
  BadShape,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Every library failure is reported through this type; `kind()` lets callers
// branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed text input. `line()` is 1-based; 0 means the problem concerns the
// file as a whole.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cutlocus
