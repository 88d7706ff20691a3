#pragma once

#include <stdexcept>
#include <string>

namespace simdiag {

// Error taxonomy shared by the library and the CLI. The CLI maps kinds to
// exit codes: Usage/Parse -> 2, CapExceeded -> 3, everything else -> 1.
enum class ErrorKind {
  Parse,
  Usage,
  CapExceeded,
  DegreeMismatch,
  NotGenerating,
  Disconnected,
  DiagonalPair,
  NonTransitiveCoordinates,
  BoundViolation,
  LiftFailure,
  ResidualTooLarge,
  NotFound,
  NotPrimePower,
  FactorizationUnavailable,
  DivisionByZero,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace simdiag
