#include "adic/huber.hpp"

#include <algorithm>

#include "adic/error.hpp"

namespace adic {

namespace {

void requirePrime(const TateSeries& f, const RingDescriptor& ring) {
  if (!(f.prime() == ring.prime())) fail(ErrorCode::AmbientMismatch, "series and ring use different primes");
}

bool withinBound(const GroupValue& v, bool strict) {
  const int c = cmp(v, GroupValue::one(v.ambient())) < 0 ? -1 : (v.isOne() ? 0 : 1);
  return strict ? c < 0 : c <= 0;
}

BoundedVerdict exactVerdict(const GroupValue& norm, bool strict) {
  return BoundedVerdict{withinBound(norm, strict) ? Verdict::True : Verdict::False, norm, std::nullopt};
}

// Points of the disc catalog used to probe localizations without an exact norm.
std::vector<PointDescriptor> probePoints(Prime p) {
  std::vector<PointDescriptor> out;
  const long pl = static_cast<long>(p.value());
  std::vector<Rational> centers;
  for (long a = 0; a < std::min<long>(pl * pl, 64); ++a) centers.emplace_back(a);
  for (long k = 1; k <= 4; ++k) centers.push_back(powP(p, k));
  for (const auto& a : centers) out.push_back(PointDescriptor::classical(p, a));
  auto ctx = FqContext::create(p, 1);
  const Rational plain = p.value() == 2 ? Rational(1, 3) : Rational(1, 2);
  for (long a = 0; a < std::min<long>(pl, 16); ++a) {
    for (const Rational& q : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
      out.push_back(PointDescriptor::disc(p, Rational(a), Radius::pPower(q)));
    }
    out.push_back(PointDescriptor::disc(p, Rational(a), Radius::plain(p, plain)));
    for (const Rational& q : {Rational(0), Rational(1)}) {
      for (const P1Point& lambda : enumerateP1(*ctx, true)) {
        out.push_back(PointDescriptor::type5(p, Rational(a), q, ctx, lambda));
      }
    }
  }
  return out;
}

BoundedVerdict sampledVerdict(const TateSeries& f, const RingDescriptor& ring, bool strict) {
  std::vector<RationalSubset> layers;
  for (const RingDescriptor* r = &ring; r->isLocalized(); r = &r->base()) {
    layers.push_back(RationalSubset{r->numerators(), r->denominator(), OpenStatus::Open});
  }
  for (const PointDescriptor& x : probePoints(ring.prime())) {
    try {
      if (!inD(x)) continue;
      const bool inside = std::all_of(layers.begin(), layers.end(),
                                      [&](const RationalSubset& u) { return member(x, u); });
      if (!inside) continue;
      const GroupValue v = evaluate(f, x);
      if (!withinBound(v, strict)) return BoundedVerdict{Verdict::False, v, x};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UncertainTail &&
          e.code() != ErrorCode::EvaluationOfNonPolynomialAtClassicalPoint) {
        throw;
      }
    }
  }
  return BoundedVerdict{Verdict::Unknown, std::nullopt, std::nullopt};
}

BoundedVerdict formalPowerSeriesVerdict(const TateSeries& f, bool strict) {
  const Prime p = f.prime();
  if (f.minCoeffValuation() < ExtInt(0)) {
    fail(ErrorCode::NotInRing, renderSeries(f) + " is not in Z_p[[w]]");
  }
  if (!f.isPolynomial() && f.tailBound() < ExtInt(0)) {
    fail(ErrorCode::UncertainTail, "tail certificate does not place the series in Z_p[[w]]");
  }
  // Z_p[[w]] is its own ring of definition; its topologically nilpotent
  // elements form the ideal (p, w).
  if (!strict) return BoundedVerdict{Verdict::True, std::nullopt, std::nullopt};
  ExtInt constantTerm = f.explicitDegree() >= 0 ? vp(f.coeffs()[0], p) : f.tailBound();
  if (constantTerm >= ExtInt(1)) return BoundedVerdict{Verdict::True, std::nullopt, std::nullopt};
  if (f.explicitDegree() >= 0) return BoundedVerdict{Verdict::False, std::nullopt, std::nullopt};
  fail(ErrorCode::UncertainTail, "constant term is not determined");
}

BoundedVerdict boundedness(const TateSeries& f, const RingDescriptor& ring, bool strict) {
  requirePrime(f, ring);
  switch (ring.kind()) {
    case RingKind::PolyRing:
      if (!f.isPolynomial()) fail(ErrorCode::NotInRing, "Q[w] contains only polynomials");
      return exactVerdict(gaussNorm(f), strict);
    case RingKind::TateAlgebra: return exactVerdict(gaussNorm(f), strict);
    case RingKind::FormalPowerSeries: return formalPowerSeriesVerdict(f, strict);
    case RingKind::Localized:
      if (ring.normExponent()) return exactVerdict(rGaussNorm(f, *ring.normExponent()), strict);
      if (ring.rootKind() == RingKind::FormalPowerSeries) {
        return BoundedVerdict{Verdict::Unknown, std::nullopt, std::nullopt};
      }
      return sampledVerdict(f, ring, strict);
  }
  return BoundedVerdict{Verdict::Unknown, std::nullopt, std::nullopt};
}

// For (numerators, s) = ([c_j w^{j}], c p^m) over a ring with norm |.|_{p^{-q0}},
// the localization carries |.|_{p^{-q}} with q = max(q0, (m - vp(c_j)) / j).
std::optional<Rational> monomialNormExponent(const RingDescriptor& ring,
                                             const std::vector<TateSeries>& numerators,
                                             const TateSeries& s) {
  if (!ring.normExponent() || ring.rootKind() == RingKind::FormalPowerSeries) return std::nullopt;
  if (!s.isPolynomial() || s.coeffs().size() != 1) return std::nullopt;
  const Prime p = ring.prime();
  const long m = vp(s.coeffs()[0], p).value();
  Rational q = *ring.normExponent();
  for (const auto& g : numerators) {
    if (!g.isPolynomial() || g.isZero()) return std::nullopt;
    const auto nonZero = std::count_if(g.coeffs().begin(), g.coeffs().end(),
                                       [](const Rational& c) { return c != 0; });
    if (nonZero != 1) return std::nullopt;
    const long j = g.explicitDegree();
    const long v = vp(g.coeffs().back(), p).value();
    if (j == 0) {
      if (v < m) return std::nullopt;  // empty rational subset
      continue;
    }
    Rational qj(m - v, j);
    qj.canonicalize();
    q = std::max(q, qj);
  }
  return q;
}

}  // namespace

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::True: return "True";
    case Verdict::False: return "False";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string continuityVerdictName(ContinuityVerdict v) {
  switch (v) {
    case ContinuityVerdict::Continuous: return "Continuous";
    case ContinuityVerdict::NotContinuous: return "NotContinuous";
    case ContinuityVerdict::SampledOnly: return "SampledOnly";
  }
  return "?";
}

BoundedVerdict isPowerBounded(const TateSeries& f, const RingDescriptor& ring) {
  return boundedness(f, ring, false);
}

BoundedVerdict isTopologicallyNilpotent(const TateSeries& f, const RingDescriptor& ring) {
  return boundedness(f, ring, true);
}

RingDescriptor localize(const RingDescriptor& ring, const std::vector<TateSeries>& numerators,
                        const TateSeries& denominator) {
  std::vector<TateSeries> gens = numerators;
  gens.push_back(denominator);
  switch (openIdeal(gens, ring)) {
    case OpenStatus::Open: break;
    case OpenStatus::NotOpen:
      fail(ErrorCode::NotOpenIdeal, "numerators and denominator do not generate an open ideal of " +
                                        ring.name());
    default:
      fail(ErrorCode::UnknownOpenness, "could not decide whether the generators give an open ideal of " +
                                           ring.name());
  }
  return makeLocalized(ring, numerators, denominator,
                       monomialNormExponent(ring, numerators, denominator));
}

std::vector<TateSeries> defaultContinuitySamples(Prime p) {
  const Rational pr(static_cast<long>(p.value()));
  return {
      TateSeries(p, {Rational(1)}),
      TateSeries(p, {Rational(0), Rational(1)}),
      TateSeries(p, {pr}),
      TateSeries(p, {Rational(1), Rational(1)}),
      TateSeries(p, {Rational(0), Rational(0), Rational(1)}),
      TateSeries(p, {pr * pr, pr, Rational(0), Rational(1)}),
      TateSeries(p, {Rational(1), pr, Rational(0), Rational(0), Rational(0), pr + 1}),
      TateSeries(p, {Rational(-1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                     Rational(1)}),
  };
}

ContinuityReport checkContinuity(const SpvPoint& x, const std::vector<TateSeries>& samples) {
  if (samples.empty()) fail(ErrorCode::EmptySampleSet, "continuity check needs samples");
  const Prime p = x.base.prime();
  const GroupValue one = GroupValue::one(GroupDescriptor::pq(p));
  for (const auto& f : samples) {
    if (cmp(gaussNorm(f), one) > 0) {
      fail(ErrorCode::InvalidArgument, "sample " + renderSeries(f) + " is not in O<w>");
    }
  }
  const GroupValue pValue = evaluate(TateSeries::constant(p, Rational(static_cast<long>(p.value()))), x);
  const bool cofinal = isCofinal(pValue, pValue.ambient());
  bool boundHolds = !pValue.isZero();
  if (boundHolds) {
    const GroupValue bound = inverse(pValue);
    std::vector<TateSeries> probes = samples;
    probes.push_back(TateSeries::variable(p));
    probes.push_back(TateSeries::constant(p, Rational(1)));
    probes.push_back(TateSeries::constant(p, Rational(static_cast<long>(p.value()) + 1)));
    for (const auto& f : probes) {
      if (cmp(evaluate(f, x), bound) >= 0) {
        boundHolds = false;
        break;
      }
    }
  }
  ContinuityVerdict verdict = ContinuityVerdict::NotContinuous;
  if (cofinal && boundHolds) {
    verdict = x.truncation == ConvexSubgroup::Full ? ContinuityVerdict::Continuous
                                                   : ContinuityVerdict::SampledOnly;
  }
  return ContinuityReport{cofinal, boundHolds, verdict};
}

ContinuityReport checkContinuity(const PointDescriptor& x, const std::vector<TateSeries>& samples) {
  return checkContinuity(SpvPoint{x, ConvexSubgroup::Full}, samples);
}

std::optional<std::pair<PointDescriptor, GroupValue>> nullstellensatzWitness(const TateSeries& f) {
  const GroupValue norm = gaussNorm(f);
  if (norm.isZero() || cmp(norm, GroupValue::one(norm.ambient())) <= 0) return std::nullopt;
  return std::make_pair(PointDescriptor::gauss(f.prime()), norm);
}

}  // namespace adic
