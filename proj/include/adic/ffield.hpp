#pragma once

// Finite fields F_{p^k} (k <= 8) standing in for the algebraic closure of F_p,
// polynomials over them, and the order-of-vanishing valuations ord_lambda on
// F_{p^k}(t) for lambda in P^1.

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "adic/arith.hpp"
#include "adic/ordgroup.hpp"

namespace adic {

/// Coordinates over the power basis 1, x, ..., x^{k-1} of F_p[x]/(modulus).
struct FqElement {
  std::vector<std::uint64_t> coords;

  friend bool operator==(const FqElement&, const FqElement&) = default;
};

class FqContext {
 public:
  static constexpr int kMaxDegree = 8;

  /// F_{p^k} with the lexicographically first monic irreducible modulus.
  static std::shared_ptr<const FqContext> create(Prime p, int k);
  /// modulus lists coefficients from the constant term up; must be monic irreducible.
  static std::shared_ptr<const FqContext> withModulus(Prime p, std::vector<std::uint64_t> modulus);

  Prime prime() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  FqElement zero() const;
  FqElement one() const;
  FqElement fromPrimeField(std::uint64_t c) const;
  /// Reduces each coordinate mod p; the vector length must equal k.
  FqElement fromCoords(std::vector<std::uint64_t> coords) const;

  bool isZero(const FqElement& a) const;
  FqElement add(const FqElement& a, const FqElement& b) const;
  FqElement sub(const FqElement& a, const FqElement& b) const;
  FqElement neg(const FqElement& a) const;
  FqElement mul(const FqElement& a, const FqElement& b) const;
  FqElement inv(const FqElement& a) const;

  /// All p^k elements, ordered lexicographically by coordinates (constant first).
  std::vector<FqElement> elements() const;

  friend bool operator==(const FqContext& a, const FqContext& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FqContext(Prime p, std::vector<std::uint64_t> modulus);

  Prime p_;
  int k_;
  std::vector<std::uint64_t> modulus_;
};

/// Monic irreducibility over F_p (Rabin's test).
bool isIrreducibleOverFp(const std::vector<std::uint64_t>& poly, Prime p);

class FqPoly {
 public:
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  explicit FqPoly(std::shared_ptr<const FqContext> ctx, std::vector<FqElement> coeffs = {});
  /// Lifts a polynomial over F_p (given by residues) into F_{p^k}[t].
  static FqPoly fromPrimeField(std::shared_ptr<const FqContext> ctx,
                               const std::vector<std::uint64_t>& residues);
  static FqPoly monomial(std::shared_ptr<const FqContext> ctx, const FqElement& c, long degree);
  /// t - lambda
  static FqPoly linear(std::shared_ptr<const FqContext> ctx, const FqElement& lambda);

  const std::shared_ptr<const FqContext>& context() const noexcept { return ctx_; }
  const std::vector<FqElement>& coeffs() const noexcept { return coeffs_; }
  bool isZero() const noexcept { return coeffs_.empty(); }
  /// kZeroDegree for the zero polynomial.
  long degree() const noexcept;

  FqElement evaluate(const FqElement& x) const;
  /// Quotient by (t - lambda); the remainder is discarded.
  FqPoly divideByLinear(const FqElement& lambda) const;

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  friend bool operator==(const FqPoly& a, const FqPoly& b);

 private:
  void trim();

  std::shared_ptr<const FqContext> ctx_;
  std::vector<FqElement> coeffs_;
};

/// A point of P^1 over F_{p^k}: a finite value or infinity.
class P1Point {
 public:
  static P1Point finite(FqElement value) { return P1Point(std::move(value)); }
  static P1Point infinity() { return P1Point(std::nullopt); }

  bool isInfinity() const noexcept { return !value_.has_value(); }
  const FqElement& value() const;

  friend bool operator==(const P1Point&, const P1Point&) = default;

 private:
  explicit P1Point(std::optional<FqElement> v) : value_(std::move(v)) {}
  std::optional<FqElement> value_;
};

/// All of P^1(F_{p^k}) (affine line first, infinity last) or just A^1.
std::vector<P1Point> enumerateP1(const FqContext& ctx, bool includeInfinity);

/// Order of vanishing of num/den at lambda; +inf when num is zero.
/// ord_inf = deg(den) - deg(num), so poles at infinity count negatively.
ExtInt ordAt(const FqPoly& num, const FqPoly& den, const P1Point& lambda);

/// (1/2)^{ord_lambda}, as the value (1, (1/2)^ord) of p^Q x (1/2)^Z; 0 for num = 0.
GroupValue lambdaValue(const FqPoly& num, const FqPoly& den, const P1Point& lambda);

}  // namespace adic
