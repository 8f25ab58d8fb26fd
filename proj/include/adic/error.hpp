#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adic {

// Error taxonomy shared by every module. The names double as the wire-level
// error codes of the JSON protocol and map 1:1 onto adic_status in adic.h.
enum class ErrorCode {
  InvalidArgument = 1,
  AmbientMismatch,
  ZeroInGeneratorSet,
  ZeroDenominator,
  ZeroInput,
  UncertainTail,
  CenterOutsideDisc,
  ZeroSeries,
  ZeroPolynomial,
  NotPolynomial,
  EvaluationOfNonPolynomialAtClassicalPoint,
  NonPolynomialGenerator,
  PointNotInD,
  Gamma1NotContained,
  NotOpenIdeal,
  UnknownOpenness,
  EmptySampleSet,
  NotInRing,
  ParseError,
  SchemaError,
};

std::string_view errorCodeName(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace adic
