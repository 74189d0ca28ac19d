#pragma once

#include <stdexcept>
#include <string>

namespace depthlab {

// Error taxonomy for the whole pipeline.  TheoremViolation is special: it
// reports a failed cross-check of a statement that is mathematically certain,
// i.e. an implementation bug rather than bad input.  The CLI maps it to a
// distinct exit code so CI can tell math regressions from user error.
enum class ErrorKind {
  NotIrredundant,
  CapExceeded,
  InvalidPermutation,
  DegreeMismatch,
  NotASubgroup,
  NotNormal,
  PrimeSearchExhausted,
  SplitFailure,
  DegreeRecoveryFailure,
  PrimeMismatch,
  LiftOutOfRange,
  DegreeIdentityViolation,
  TheoremViolation,
  ParseError,
  DegreeError,
  IoError,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void check(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace depthlab
