#pragma once

#include <stdexcept>
#include <string>

namespace pcz {

enum class ErrorCode {
  FlatInput,
  ParseError,
  VerificationFailed,
  PrecisionExhausted,
  BudgetExceeded,
  TruncationUnderflow,
  NonCompactFace,
  IterationLimit,
  UnresolvedRealness,
  NonRealCenter,
  SingularSample,
  AssertionFailed,
  InvalidArgument,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown internally when a ball computation cannot decide at the current
// precision; drivers catch it and retry at a higher precision.
class PrecisionLow : public std::runtime_error {
 public:
  explicit PrecisionLow(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace pcz
