#include "adic/error.hpp"

namespace adic {

std::string_view errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::ZeroInGeneratorSet: return "ZeroInGeneratorSet";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::UncertainTail: return "UncertainTail";
    case ErrorCode::CenterOutsideDisc: return "CenterOutsideDisc";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::EvaluationOfNonPolynomialAtClassicalPoint:
      return "EvaluationOfNonPolynomialAtClassicalPoint";
    case ErrorCode::NonPolynomialGenerator: return "NonPolynomialGenerator";
    case ErrorCode::PointNotInD: return "PointNotInD";
    case ErrorCode::Gamma1NotContained: return "Gamma1NotContained";
    case ErrorCode::NotOpenIdeal: return "NotOpenIdeal";
    case ErrorCode::UnknownOpenness: return "UnknownOpenness";
    case ErrorCode::EmptySampleSet: return "EmptySampleSet";
    case ErrorCode::NotInRing: return "NotInRing";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace adic
