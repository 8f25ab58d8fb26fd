#pragma once

// Truncated elements of the Tate algebra C_p<w> with exact rational
// coefficients, and the norms and reductions computed from them.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "adic/arith.hpp"
#include "adic/ffield.hpp"
#include "adic/ordgroup.hpp"

namespace adic {

/// a_0 + a_1 w + ... + a_d w^d + (tail), where every omitted coefficient a_i
/// (i > d) is only known to satisfy vp(a_i) >= tailBound. A tailBound of +inf
/// means the series is exactly the polynomial.
class TateSeries {
 public:
  TateSeries(Prime p, std::vector<Rational> coeffs, ExtInt tailBound = ExtInt::infinity());

  static TateSeries zero(Prime p) { return TateSeries(p, {}); }
  static TateSeries constant(Prime p, const Rational& c) { return TateSeries(p, {c}); }
  /// c * w^degree
  static TateSeries monomial(Prime p, const Rational& c, long degree);
  static TateSeries variable(Prime p) { return monomial(p, Rational(1), 1); }

  Prime prime() const noexcept { return p_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const ExtInt& tailBound() const noexcept { return tail_; }
  bool isPolynomial() const noexcept { return tail_.isInfinite(); }
  /// The exact zero polynomial.
  bool isZero() const noexcept { return isPolynomial() && coeffs_.empty(); }
  /// Index of the last explicit coefficient (-1 when there are none).
  long explicitDegree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Smallest vp over explicit coefficients (+inf if all vanish).
  ExtInt minCoeffValuation() const;

  friend TateSeries operator+(const TateSeries& a, const TateSeries& b);
  friend TateSeries operator-(const TateSeries& a, const TateSeries& b);
  friend TateSeries operator*(const TateSeries& a, const TateSeries& b);
  TateSeries scaled(const Rational& c) const;
  TateSeries pow(unsigned n) const;

  friend bool operator==(const TateSeries&, const TateSeries&) = default;

 private:
  Prime p_;
  std::vector<Rational> coeffs_;
  ExtInt tail_;
};

/// Terms attaining min_i (vp(a_i) + q i).
struct DominantTerms {
  Rational minExponent;
  std::vector<std::size_t> indices;
};

/// Certified dominant terms of f at radius p^{-q}. With strict = false the
/// minimum is certified when it is <= every possible tail exponent (enough for
/// the norm); strict = true also rules out ties with the tail (needed for
/// reductions). Throws UncertainTail or, for the zero series, ZeroSeries.
DominantTerms dominantTerms(const TateSeries& f, const Rational& q, bool strict);

/// max ||a_i||_p as p^{-min vp}; 0 for the zero polynomial.
GroupValue gaussNorm(const TateSeries& f);
/// max ||a_i||_p r^i with r = p^{-q}.
GroupValue rGaussNorm(const TateSeries& f, const Rational& q);

/// Re-expansion in powers of (w - alpha), |alpha|_p <= 1. For a tailed series
/// the explicit coefficients of the result are exact modulo p^{tailBound}.
TateSeries recenter(const TateSeries& f, const Rational& alpha);

/// Reduction of the normalized series at radius p^{-q}: sum of
/// residueUnit(a_i) t^i over the dominant indices, as a polynomial over ctx
/// (F_p when ctx is null).
FqPoly reduceAtMax(const TateSeries& f, const Rational& q,
                   std::shared_ptr<const FqContext> ctx = nullptr);

/// One Newton polygon segment; slope == nullopt stands for the w^m factor
/// (roots at 0, valuation +inf).
struct NewtonSegment {
  std::optional<Rational> slope;
  long multiplicity;

  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of {(i, vp(a_i))}; -slope is the valuation of the roots.
std::vector<NewtonSegment> newtonPolygon(const TateSeries& f);

/// Largest index attaining the Gauss norm.
long weierstrassDegree(const TateSeries& f);

/// Exact value f(alpha) of a polynomial.
Rational evaluatePolynomial(const TateSeries& f, const Rational& alpha);

/// Monic gcd over Q[w] of polynomial series.
std::vector<Rational> polynomialGcd(const std::vector<std::vector<Rational>>& polys);

}  // namespace adic
