#pragma once

#include <stdexcept>
#include <string>

namespace spinlink {

// Every failure mode the engine reports. Callers that need to distinguish
// cases switch on kind(); the message is for humans.
enum class ErrorKind {
  InvalidArgument,
  ResourceLimit,
  ParseError,
  InvalidForm,
  DegenerateForm,
  OddLattice,
  SpinViolation,
  NotIsotropic,
  NotLagrangian,
  NotABoson,
  TorsionLift,
  Validation,
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

}  // namespace spinlink
