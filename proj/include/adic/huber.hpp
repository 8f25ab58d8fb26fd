#pragma once

// Huber-ring predicates, rational localization, the continuity criterion and
// the Nullstellensatz witness for (C_p<w>, O<w>).

#include <optional>
#include <utility>
#include <vector>

#include "adic/ordgroup.hpp"
#include "adic/points.hpp"
#include "adic/ring.hpp"
#include "adic/tate.hpp"
#include "adic/topology.hpp"

namespace adic {

enum class Verdict { True, False, Unknown };

std::string verdictName(Verdict v);

struct BoundedVerdict {
  Verdict status;
  /// Exact norm backing a True/False answer, when one exists.
  std::optional<GroupValue> certificate;
  /// Point of the rational subset where a sampled bound failed.
  std::optional<PointDescriptor> witness;
};

BoundedVerdict isPowerBounded(const TateSeries& f, const RingDescriptor& ring);
BoundedVerdict isTopologicallyNilpotent(const TateSeries& f, const RingDescriptor& ring);

/// R(g_1, ..., g_r / s). Throws NotOpenIdeal or UnknownOpenness when the
/// generators do not provably generate an open ideal.
RingDescriptor localize(const RingDescriptor& ring, const std::vector<TateSeries>& numerators,
                        const TateSeries& denominator);

enum class ContinuityVerdict { Continuous, NotContinuous, SampledOnly };

std::string continuityVerdictName(ContinuityVerdict v);

struct ContinuityReport {
  bool cofinal;
  bool boundHolds;
  ContinuityVerdict verdict;
};

/// Continuity via co-finality of |p| and |f| < |p|^{-1} on the sample set
/// together with w, 1 and integral scalars. Samples must lie in O<w>.
ContinuityReport checkContinuity(const PointDescriptor& x, const std::vector<TateSeries>& samples);
ContinuityReport checkContinuity(const SpvPoint& x, const std::vector<TateSeries>& samples);

/// A small fixed set of integral polynomials used when no samples are given.
std::vector<TateSeries> defaultContinuitySamples(Prime p);

/// For f outside O<w>, the Gauss point together with |f(x_1)| > 1.
std::optional<std::pair<PointDescriptor, GroupValue>> nullstellensatzWitness(const TateSeries& f);

}  // namespace adic
