#include "adic/points.hpp"

#include "adic/error.hpp"

namespace adic {

namespace {

void requireInDisc(const Rational& alpha, Prime p) {
  if (vp(alpha, p) < ExtInt(0)) {
    fail(ErrorCode::CenterOutsideDisc, "center " + renderRational(alpha) + " has |alpha|_p > 1");
  }
}

void requirePrime(const TateSeries& f, const PointDescriptor& x) {
  if (!(f.prime() == x.prime())) fail(ErrorCode::AmbientMismatch, "series and point use different primes");
}

// Dominant terms of f re-expanded around alpha at radius p^{-q}. Re-expanding a
// tailed series perturbs every explicit coefficient by something of valuation
// >= tailBound, so the minimum must then sit strictly below the tail bound.
DominantTerms dominantAround(const TateSeries& f, const Rational& alpha, const Rational& q,
                             bool forReduction) {
  const TateSeries g = recenter(f, alpha);
  if (f.isPolynomial() || alpha == 0) return dominantTerms(g, q, forReduction);
  const TateSeries explicitPart(g.prime(), g.coeffs());
  if (explicitPart.isZero()) fail(ErrorCode::UncertainTail, "no explicit coefficient dominates");
  DominantTerms dom = dominantTerms(explicitPart, q, forReduction);
  if (!(dom.minExponent < Rational(f.tailBound().value()))) {
    fail(ErrorCode::UncertainTail, "re-centered tail may dominate");
  }
  return dom;
}

GroupValue evaluateClassical(const TateSeries& f, const PointDescriptor& x) {
  const Prime p = x.prime();
  const Rational& alpha = x.center();
  const Rational value = evaluatePolynomial(f, alpha);
  const auto exact = [&] {
    if (value == 0) return GroupValue::zero(GroupDescriptor::pq(p));
    return GroupValue::pexp(p, Rational(-vp(value, p).value()));
  };
  if (f.isPolynomial()) return exact();
  // At the origin only a_0 contributes.
  if (alpha == 0 && f.explicitDegree() >= 0) return exact();
  if (alpha != 0) {
    // Omitted terms have valuation >= T + (d + 1) vp(alpha).
    const ExtInt tailFloor = f.tailBound() + ExtInt(vp(alpha, p).value() * (f.explicitDegree() + 1));
    if (vp(value, p) < tailFloor) return exact();
  }
  fail(ErrorCode::EvaluationOfNonPolynomialAtClassicalPoint,
       "tail of the series cannot be dominated at " + renderRational(alpha));
}

GroupValue evaluatePlainDisc(const TateSeries& f, const PointDescriptor& x) {
  const Prime p = x.prime();
  const GroupDescriptor group = x.valueGroup();
  if (f.isZero()) return GroupValue::zero(group);
  const TateSeries g = recenter(f, x.center());
  std::optional<GroupValue> best;
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    if (g.coeffs()[i] == 0) continue;
    GroupValue term =
        GroupValue::mixed(group, Rational(-vp(g.coeffs()[i], p).value()), static_cast<long>(i));
    if (!best || cmp(term, *best) > 0) best = std::move(term);
  }
  if (!f.isPolynomial()) {
    // Omitted terms are <= p^{-T} r^{d+1}; explicit ones are only known up to p^{-T}
    // after a shift of center.
    const long T = f.tailBound().value();
    const GroupValue bound = x.center() == 0
                                 ? GroupValue::mixed(group, Rational(-T), g.explicitDegree() + 1)
                                 : GroupValue::mixed(group, Rational(-T), 0);
    const bool certified = best && (x.center() == 0 ? cmp(*best, bound) >= 0 : cmp(*best, bound) > 0);
    if (!certified) fail(ErrorCode::UncertainTail, "tail may dominate at this disc point");
  }
  return *best;
}

}  // namespace

Radius Radius::pPower(const Rational& q) {
  if (q < 0) fail(ErrorCode::InvalidArgument, "radius exponent must be >= 0");
  return Radius(true, q);
}

Radius Radius::plain(Prime p, const Rational& r) {
  // Validates 0 < r < 1 and r != p^{-m}.
  (void)GroupDescriptor::pqrz(p, r);
  return Radius(false, r);
}

const Rational& Radius::exponent() const {
  if (!pPower_) fail(ErrorCode::InvalidArgument, "radius is not a power of p");
  return v_;
}

const Rational& Radius::value() const {
  if (pPower_) fail(ErrorCode::InvalidArgument, "radius is a power of p");
  return v_;
}

PointDescriptor::PointDescriptor(PointKind kind, Prime p, Rational alpha, Radius radius,
                                 std::shared_ptr<const FqContext> ctx, P1Point lambda)
    : kind_(kind),
      p_(p),
      alpha_(std::move(alpha)),
      radius_(std::move(radius)),
      ctx_(std::move(ctx)),
      lambda_(std::move(lambda)) {}

PointDescriptor PointDescriptor::classical(Prime p, const Rational& alpha) {
  requireInDisc(alpha, p);
  return PointDescriptor(PointKind::Classical, p, alpha, Radius::pPower(Rational(0)), nullptr,
                         P1Point::infinity());
}

PointDescriptor PointDescriptor::disc(Prime p, const Rational& alpha, const Radius& radius) {
  requireInDisc(alpha, p);
  return PointDescriptor(PointKind::Disc, p, alpha, radius, nullptr, P1Point::infinity());
}

PointDescriptor PointDescriptor::type5(Prime p, const Rational& alpha, const Rational& q,
                                       std::shared_ptr<const FqContext> residue,
                                       const P1Point& lambda) {
  requireInDisc(alpha, p);
  if (!residue || !(residue->prime() == p)) {
    fail(ErrorCode::AmbientMismatch, "residue field must have characteristic p");
  }
  if (!lambda.isInfinity() &&
      lambda.value().coords.size() != static_cast<std::size_t>(residue->degree())) {
    fail(ErrorCode::InvalidArgument, "lambda does not belong to the residue field");
  }
  return PointDescriptor(PointKind::Type5, p, alpha, Radius::pPower(q), std::move(residue), lambda);
}

PointDescriptor PointDescriptor::oneMinus(Prime p) {
  auto ctx = FqContext::create(p, 1);
  auto zero = ctx->zero();
  return type5(p, Rational(0), Rational(0), std::move(ctx), P1Point::finite(std::move(zero)));
}

PointDescriptor PointDescriptor::onePlus(Prime p) {
  return type5(p, Rational(0), Rational(0), FqContext::create(p, 1), P1Point::infinity());
}

const Radius& PointDescriptor::radius() const {
  if (kind_ == PointKind::Classical) fail(ErrorCode::InvalidArgument, "classical points have no radius");
  return radius_;
}

const std::shared_ptr<const FqContext>& PointDescriptor::residueContext() const {
  if (kind_ != PointKind::Type5) fail(ErrorCode::InvalidArgument, "only Type-5 points carry lambda");
  return ctx_;
}

const P1Point& PointDescriptor::lambda() const {
  if (kind_ != PointKind::Type5) fail(ErrorCode::InvalidArgument, "only Type-5 points carry lambda");
  return lambda_;
}

GroupDescriptor PointDescriptor::valueGroup() const {
  switch (kind_) {
    case PointKind::Classical: return GroupDescriptor::pq(p_);
    case PointKind::Disc:
      return radius_.isPPower() ? GroupDescriptor::pq(p_) : GroupDescriptor::pqrz(p_, radius_.value());
    case PointKind::Type5: return GroupDescriptor::pqxHalfZ(p_);
  }
  return GroupDescriptor::pq(p_);
}

std::string PointDescriptor::describe() const {
  const std::string a = renderRational(alpha_);
  switch (kind_) {
    case PointKind::Classical: return "x_{" + a + "}";
    case PointKind::Disc:
      return radius_.isPPower() ? "x_{" + a + ", p^-" + renderRational(radius_.exponent()) + "}"
                                : "x_{" + a + ", " + renderRational(radius_.value()) + "}";
    case PointKind::Type5: {
      std::string l = "inf";
      if (!lambda_.isInfinity()) {
        l = "[";
        for (std::size_t i = 0; i < lambda_.value().coords.size(); ++i) {
          l += (i ? "," : "") + std::to_string(lambda_.value().coords[i]);
        }
        l += "]";
      }
      return "x_{" + a + ", p^-" + renderRational(radius_.exponent()) + "}^" + l;
    }
  }
  return "?";
}

bool operator==(const PointDescriptor& a, const PointDescriptor& b) {
  if (a.kind_ != b.kind_ || !(a.p_ == b.p_) || a.alpha_ != b.alpha_) return false;
  switch (a.kind_) {
    case PointKind::Classical: return true;
    case PointKind::Disc: return a.radius_ == b.radius_;
    case PointKind::Type5:
      return a.radius_ == b.radius_ && *a.ctx_ == *b.ctx_ && a.lambda_ == b.lambda_;
  }
  return false;
}

bool samePoint(const PointDescriptor& x, const PointDescriptor& y) {
  if (x.kind() != y.kind() || !(x.prime() == y.prime())) return false;
  const Prime p = x.prime();
  const Rational shift = y.center() - x.center();
  const ExtInt v = vp(shift, p);
  switch (x.kind()) {
    case PointKind::Classical: return shift == 0;
    case PointKind::Disc: {
      if (!(x.radius() == y.radius())) return false;
      if (v.isInfinite()) return true;
      if (x.radius().isPPower()) return Rational(v.value()) >= x.radius().exponent();
      // |shift| <= r
      return cmp(powP(p, -v.value()), x.radius().value()) <= 0;
    }
    case PointKind::Type5: {
      const Rational& q = x.radius().exponent();
      if (!(x.radius() == y.radius()) || !(*x.residueContext() == *y.residueContext())) return false;
      if (v.isFinite() && Rational(v.value()) < q) return false;
      if (x.lambda().isInfinity() || y.lambda().isInfinity()) {
        return x.lambda().isInfinity() && y.lambda().isInfinity();
      }
      // t' = (w - alpha')/beta = t - delta with delta the reduction of (alpha' - alpha)/beta.
      const auto& ctx = *x.residueContext();
      FqElement delta = ctx.zero();
      if (v.isFinite() && Rational(v.value()) == q) {
        delta = ctx.fromPrimeField(residueUnit(shift, p));
      }
      return ctx.sub(x.lambda().value(), delta) == y.lambda().value();
    }
  }
  return false;
}

GroupValue evaluate(const TateSeries& f, const PointDescriptor& x) {
  requirePrime(f, x);
  const Prime p = x.prime();
  switch (x.kind()) {
    case PointKind::Classical: return evaluateClassical(f, x);
    case PointKind::Disc: {
      if (!x.radius().isPPower()) return evaluatePlainDisc(f, x);
      if (f.isZero()) return GroupValue::zero(GroupDescriptor::pq(p));
      const DominantTerms dom = dominantAround(f, x.center(), x.radius().exponent(), false);
      return GroupValue::pexp(p, -dom.minExponent);
    }
    case PointKind::Type5: {
      if (f.isZero()) return GroupValue::zero(GroupDescriptor::pqxHalfZ(p));
      const Rational& q = x.radius().exponent();
      const DominantTerms dom = dominantAround(f, x.center(), q, true);
      const auto& ctx = x.residueContext();
      std::vector<std::uint64_t> residues(dom.indices.back() + 1, 0);
      const TateSeries g = recenter(f, x.center());
      for (std::size_t i : dom.indices) residues[i] = residueUnit(g.coeffs()[i], p);
      const FqPoly reduction = FqPoly::fromPrimeField(ctx, residues);
      const FqPoly one = FqPoly::fromPrimeField(ctx, {1});
      const ExtInt ord = ordAt(reduction, one, x.lambda());
      return GroupValue::lex2(p, -dom.minExponent, ord.value());
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown point kind");
}

bool inD(const PointDescriptor& x) {
  const GroupValue w = evaluate(TateSeries::variable(x.prime()), x);
  return cmp(w, GroupValue::one(w.ambient())) <= 0;
}

PointReport classify(const PointDescriptor& x) {
  const bool in = inD(x);
  switch (x.kind()) {
    case PointKind::Classical:
      return {1, x.valueGroup(), ResidueFieldKind::AlgClosedPrime, SupportKind::MaximalIdeal, true, in};
    case PointKind::Disc:
      if (x.radius().isPPower()) {
        return {2, x.valueGroup(), ResidueFieldKind::RationalFunction, SupportKind::ZeroIdeal, false, in};
      }
      return {3, x.valueGroup(), ResidueFieldKind::AlgClosedPrime, SupportKind::ZeroIdeal, true, in};
    case PointKind::Type5:
      return {5, x.valueGroup(), ResidueFieldKind::AlgClosedPrime, SupportKind::ZeroIdeal, true, in};
  }
  fail(ErrorCode::InvalidArgument, "unknown point kind");
}

bool supportContains(const PointDescriptor& x, const TateSeries& f) { return evaluate(f, x).isZero(); }

}  // namespace adic
