#pragma once

#include <stdexcept>
#include <string>

namespace rsgs {

/// Failure categories shared by the whole toolkit. The CLI maps these to
/// exit codes; library users can switch on code() for recovery.
enum class ErrorCode {
  DimensionTooSmall,
  LambdaOutOfRange,
  ExponentOutOfRange,
  GridTooCoarse,
  NonFiniteSample,
  ZeroDenominator,
  NoConvergence,
  BoundaryLeak,
  ShiftOutOfRange,
  NotConverged,
  QuadratureFailure,
  SingularConfiguration,
  UsageError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace rsgs
