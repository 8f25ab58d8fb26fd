#include "adic/topology.hpp"

#include <algorithm>

#include "adic/error.hpp"
#include "adic/huber.hpp"

namespace adic {

namespace {

void requirePolynomials(const std::vector<TateSeries>& gens, Prime p) {
  for (const auto& g : gens) {
    if (!(g.prime() == p)) fail(ErrorCode::AmbientMismatch, "generator over a different prime");
    if (!g.isPolynomial()) {
      fail(ErrorCode::NonPolynomialGenerator, "generator " + renderSeries(g) + " is not a polynomial");
    }
  }
}

std::vector<std::vector<Rational>> nonZeroCoefficientLists(const std::vector<TateSeries>& gens) {
  std::vector<std::vector<Rational>> out;
  for (const auto& g : gens) {
    if (!g.isZero()) out.push_back(g.coeffs());
  }
  return out;
}

// Whether the monic gcd has a root of valuation >= 0 (or > 0 when strict).
bool gcdHasRootInDisc(const std::vector<Rational>& gcd, Prime p, bool strictlyInside) {
  if (gcd.size() <= 1) return false;
  for (const NewtonSegment& seg : newtonPolygon(TateSeries(p, gcd))) {
    if (!seg.slope) return true;  // root at 0
    // root valuation is -slope
    if (strictlyInside ? *seg.slope < 0 : *seg.slope <= 0) return true;
  }
  return false;
}

OpenStatus openInTateAlgebra(const std::vector<TateSeries>& gens, Prime p) {
  const auto polys = nonZeroCoefficientLists(gens);
  if (polys.empty()) return OpenStatus::NotOpen;
  // C_p<w> is a PID and the Q[w]-gcd generates the same ideal; it is a unit
  // exactly when it has no zero in the closed disc.
  return gcdHasRootInDisc(polynomialGcd(polys), p, false) ? OpenStatus::NotOpen : OpenStatus::Open;
}

OpenStatus openInPolyRing(const std::vector<TateSeries>& gens) {
  const auto polys = nonZeroCoefficientLists(gens);
  if (polys.empty()) return OpenStatus::NotOpen;
  // Tate ring: the only open ideal is the unit ideal of Q[w].
  return polynomialGcd(polys).size() == 1 ? OpenStatus::Open : OpenStatus::NotOpen;
}

OpenStatus openInFormalPowerSeries(const std::vector<TateSeries>& gens, Prime p) {
  for (const auto& g : gens) {
    if (g.minCoeffValuation() < ExtInt(0)) {
      fail(ErrorCode::NotInRing, renderSeries(g) + " is not in Z_p[[w]]");
    }
  }
  const auto polys = nonZeroCoefficientLists(gens);
  if (polys.empty()) return OpenStatus::NotOpen;
  for (const auto& c : polys) {
    if (c[0] != 0 && vp(c[0], p) == ExtInt(0)) return OpenStatus::Open;  // unit ideal
  }
  // The ideal is (p, w)-primary unless all generators share a height-one
  // prime: (p) itself, or a distinguished factor, i.e. a common root of
  // positive valuation.
  const bool allDivisibleByP = std::all_of(polys.begin(), polys.end(), [&](const auto& c) {
    return TateSeries(p, c).minCoeffValuation() >= ExtInt(1);
  });
  if (allDivisibleByP) return OpenStatus::NotOpen;
  return gcdHasRootInDisc(polynomialGcd(polys), p, true) ? OpenStatus::NotOpen : OpenStatus::Open;
}

ConvexSubgroup intersect(ConvexSubgroup a, ConvexSubgroup b) {
  return static_cast<int>(a) < static_cast<int>(b) ? a : b;
}

template <typename Point>
bool memberImpl(const Point& x, const RationalSubset& u) {
  const GroupValue s = evaluate(u.denominator, x);
  if (s.isZero()) return false;
  return std::all_of(u.numerators.begin(), u.numerators.end(),
                     [&](const TateSeries& g) { return cmp(evaluate(g, x), s) <= 0; });
}

}  // namespace

std::string openStatusName(OpenStatus s) {
  switch (s) {
    case OpenStatus::Open: return "Open";
    case OpenStatus::NotOpen: return "NotOpen";
    case OpenStatus::Unknown: return "Unknown";
    case OpenStatus::Unchecked: return "Unchecked";
  }
  return "?";
}

GroupValue evaluate(const TateSeries& f, const SpvPoint& x) {
  return truncate(evaluate(f, x.base), x.truncation);
}

bool member(const PointDescriptor& x, const RationalSubset& u) { return memberImpl(x, u); }

bool member(const SpvPoint& x, const RationalSubset& u) { return memberImpl(x, u); }

OpenStatus openIdeal(const std::vector<TateSeries>& gens, const RingDescriptor& ring) {
  const Prime p = ring.prime();
  requirePolynomials(gens, p);
  switch (ring.kind()) {
    case RingKind::TateAlgebra: return openInTateAlgebra(gens, p);
    case RingKind::PolyRing: return openInPolyRing(gens);
    case RingKind::FormalPowerSeries: return openInFormalPowerSeries(gens, p);
    case RingKind::Localized:
      // A non-zero constant is a unit of every localization of a Tate ring.
      if (ring.rootKind() != RingKind::FormalPowerSeries) {
        for (const auto& g : gens) {
          if (g.coeffs().size() == 1) return OpenStatus::Open;
        }
      }
      return OpenStatus::Unknown;
  }
  return OpenStatus::Unknown;
}

bool specializes(const PointDescriptor& x, const PointDescriptor& y) {
  if (samePoint(x, y)) return true;
  if (x.kind() != PointKind::Disc || !x.radius().isPPower() || y.kind() != PointKind::Type5) {
    return false;
  }
  const Rational& q = x.radius().exponent();
  if (y.radius().exponent() != q) return false;
  const ExtInt v = vp(y.center() - x.center(), x.prime());
  return v.isInfinite() || Rational(v.value()) >= q;
}

std::vector<PointDescriptor> closurePoints(const PointDescriptor& x, int k) {
  if (!inD(x)) fail(ErrorCode::PointNotInD, x.describe() + " is not in the closed unit disc");
  std::vector<PointDescriptor> out{x};
  if (x.kind() != PointKind::Disc || !x.radius().isPPower()) return out;
  const Rational& q = x.radius().exponent();
  auto ctx = FqContext::create(x.prime(), k);
  // At the Gauss point the direction at infinity leaves D.
  for (const P1Point& lambda : enumerateP1(*ctx, q != 0)) {
    out.push_back(PointDescriptor::type5(x.prime(), x.center(), q, ctx, lambda));
  }
  return out;
}

SamplingReport samplingSpecializationCheck(const PointDescriptor& x, const PointDescriptor& y,
                                           int trials, std::uint64_t seed) {
  if (trials < 1) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
  SeriesSampler sampler(x.prime(), seed);
  for (int t = 1; t <= trials; ++t) {
    TateSeries g = sampler.integralPolynomial(6, 6);
    TateSeries s = sampler.integralPolynomial(6, 6);
    RationalSubset u{{std::move(g)}, std::move(s), OpenStatus::Unchecked};
    if (member(y, u) && !member(x, u)) return SamplingReport{false, t, std::move(u)};
  }
  return SamplingReport{true, trials, std::nullopt};
}

PointDescriptor verticalGenerization(const PointDescriptor& y) {
  if (y.kind() != PointKind::Type5) return y;
  return PointDescriptor::disc(y.prime(), y.center(), y.radius());
}

HorizontalSpecialization horizontalSpecialize(const SpvPoint& x, ConvexSubgroup delta) {
  const GroupDescriptor group = x.base.valueGroup();
  if (!isConvexIn(delta, group)) {
    fail(ErrorCode::AmbientMismatch, convexSubgroupName(delta) + " is not convex in " + group.name());
  }
  const Prime p = x.base.prime();
  const GroupValue one = GroupValue::one(group);
  // Gamma_1 is generated by the values >= 1 among p^{-1}, w and unit scalars
  // (units have value 1, which every subgroup contains).
  for (const TateSeries& f : {TateSeries::constant(p, Rational(1, p.ul())), TateSeries::variable(p)}) {
    const GroupValue v = evaluate(f, x);
    if (!v.isZero() && cmp(v, one) >= 0 && !contains(delta, v)) {
      fail(ErrorCode::Gamma1NotContained, "|" + renderSeries(f) + "(x)| = " + v.toString() +
                                              " lies outside " + convexSubgroupName(delta));
    }
  }
  SpvPoint result{x.base, intersect(x.truncation, delta)};
  const ContinuityReport report = checkContinuity(result, defaultContinuitySamples(p));
  return HorizontalSpecialization{std::move(result), true,
                                  report.verdict != ContinuityVerdict::NotContinuous};
}

HorizontalSpecialization horizontalSpecialize(const PointDescriptor& x, ConvexSubgroup delta) {
  return horizontalSpecialize(SpvPoint{x, ConvexSubgroup::Full}, delta);
}

SeriesSampler::SeriesSampler(Prime p, std::uint64_t seed) : p_(p), engine_(seed) {}

std::uint64_t SeriesSampler::next() { return engine_(); }

std::uint64_t SeriesSampler::below(std::uint64_t n) { return engine_() % n; }

Rational SeriesSampler::unit() {
  const auto draw = [&] {
    std::uint64_t u = 0;
    while (u % p_.value() == 0) u = 1 + below(4 * p_.value());
    return Integer(static_cast<unsigned long>(u));
  };
  Integer num = draw();
  if (below(2) == 0) num = -num;
  Integer den = below(4) == 0 ? draw() : Integer(1);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

TateSeries SeriesSampler::integralPolynomial(int maxDegree, int maxValuation) {
  const auto degree = static_cast<std::size_t>(below(static_cast<std::uint64_t>(maxDegree) + 1));
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  for (auto& c : coeffs) {
    if (below(4) == 0) continue;
    const long v = static_cast<long>(below(static_cast<std::uint64_t>(maxValuation) + 1));
    c = powP(p_, v) * unit();
  }
  return TateSeries(p_, std::move(coeffs));
}

}  // namespace adic
