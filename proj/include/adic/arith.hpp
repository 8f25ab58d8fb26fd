#pragma once

// Exact scalar plumbing: primes, extended integers and rational helpers on
// top of GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace adic {

using Integer = mpz_class;
using Rational = mpq_class;

/// A verified prime below 2^31, so residues fit comfortably in 64-bit products.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  unsigned long ul() const noexcept { return static_cast<unsigned long>(value_); }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint64_t value_;
};

bool isPrime(std::uint64_t n) noexcept;

/// An integer or +infinity. Used for valuations, orders of vanishing and tail
/// certificates.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(long v) : finite_(true), value_(v) {}  // NOLINT(implicit)

  static constexpr ExtInt infinity() { return ExtInt(); }

  constexpr bool isInfinite() const noexcept { return !finite_; }
  constexpr bool isFinite() const noexcept { return finite_; }
  long value() const;

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return a.value_ <=> b.value_;
  }

  friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ExtInt(a.value_ + b.value_);
  }

  std::string toString() const;

 private:
  bool finite_ = false;
  long value_ = 0;
};

inline ExtInt minExt(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }

/// p-adic valuation of an integer; +inf for zero.
ExtInt vpInt(const Integer& n, Prime p);
/// p-adic valuation of a rational; +inf for zero.
ExtInt vp(const Rational& x, Prime p);

/// The class of x * p^{-vp(x)} in F_p.
std::uint64_t residueUnit(const Rational& x, Prime p);

/// x mod p for a p-integral rational (vp(x) >= 0).
std::uint64_t reduceModP(const Rational& x, Prime p);

Rational powP(Prime p, long e);

/// Lowest-terms rendering: "n" for integers, "a/b" otherwise.
std::string renderRational(const Rational& x);
/// Accepts "n", "-n", "a/b"; rejects anything else (including zero denominators).
std::optional<Rational> parseRational(std::string_view text);

bool isInteger(const Rational& x);

}  // namespace adic
