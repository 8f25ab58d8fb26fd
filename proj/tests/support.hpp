#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adic/arith.hpp"
#include "adic/error.hpp"
#include "adic/tate.hpp"

namespace adic::testing {

inline Rational Q(const char* text) { return *parseRational(text); }

inline TateSeries poly(Prime p, std::initializer_list<const char*> coeffs, ExtInt tail = ExtInt::infinity()) {
  std::vector<Rational> cs;
  for (const char* c : coeffs) cs.push_back(Q(c));
  return TateSeries(p, std::move(cs), tail);
}

/// The error code thrown by body, if any.
inline std::optional<ErrorCode> codeOf(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace adic::testing
