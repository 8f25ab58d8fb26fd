#pragma once

// Rational subsets, the open-ideal condition, and specialization relations
// among catalog points.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "adic/ordgroup.hpp"
#include "adic/points.hpp"
#include "adic/ring.hpp"
#include "adic/tate.hpp"

namespace adic {

enum class OpenStatus { Open, NotOpen, Unknown, Unchecked };

std::string openStatusName(OpenStatus s);

/// U(g_1, ..., g_r / s) = { x : |g_i(x)| <= |s(x)| != 0 }.
struct RationalSubset {
  std::vector<TateSeries> numerators;
  TateSeries denominator;
  OpenStatus validation = OpenStatus::Unchecked;
};

/// A point of Spv(C_p<w>) obtained from a catalog point by truncating its
/// valuation to a convex subgroup (Full leaves the point unchanged).
struct SpvPoint {
  PointDescriptor base;
  ConvexSubgroup truncation = ConvexSubgroup::Full;
};

GroupValue evaluate(const TateSeries& f, const SpvPoint& x);

bool member(const PointDescriptor& x, const RationalSubset& u);
bool member(const SpvPoint& x, const RationalSubset& u);

/// Whether gens generate an open ideal of ring.
OpenStatus openIdeal(const std::vector<TateSeries>& gens, const RingDescriptor& ring);

/// y in the closure of {x}, decided from the classification of catalog points.
bool specializes(const PointDescriptor& x, const PointDescriptor& y);

/// The closure of x in D, with Type-5 directions drawn from F_{p^k}.
std::vector<PointDescriptor> closurePoints(const PointDescriptor& x, int k);

struct SamplingReport {
  bool consistent;
  int trialsRun;
  /// (g, s) with y in U(g/s) but x not in U(g/s)
  std::optional<RationalSubset> counterexample;
};

/// Random search for a sub-basic open U(g/s) that contains y but not x.
SamplingReport samplingSpecializationCheck(const PointDescriptor& x, const PointDescriptor& y,
                                           int trials, std::uint64_t seed);

/// Type5(alpha, q, lambda) -> Disc(alpha, p^{-q}); every other point is its own generization.
PointDescriptor verticalGenerization(const PointDescriptor& y);

struct HorizontalSpecialization {
  SpvPoint point;
  bool isValuation;
  bool continuous;
};

/// Truncates x to Delta. Delta must be convex in the value group and contain
/// every value >= 1 attained on the generators p^{-1}, w and the unit scalars.
HorizontalSpecialization horizontalSpecialize(const SpvPoint& x, ConvexSubgroup delta);
HorizontalSpecialization horizontalSpecialize(const PointDescriptor& x, ConvexSubgroup delta);

/// Deterministic generator for the sampling harness and tests: an integral
/// polynomial of degree <= maxDegree with coefficient valuations in [0, maxValuation].
class SeriesSampler {
 public:
  SeriesSampler(Prime p, std::uint64_t seed);

  std::uint64_t next();
  /// Uniform-ish draw from [0, n).
  std::uint64_t below(std::uint64_t n);
  TateSeries integralPolynomial(int maxDegree, int maxValuation);
  /// A unit of Z_(p): a non-zero small integer prime to p, possibly divided by
  /// another such integer.
  Rational unit();

 private:
  Prime p_;
  std::mt19937_64 engine_;
};

}  // namespace adic
