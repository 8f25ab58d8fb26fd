#include "adic/ordgroup.hpp"

#include "adic/error.hpp"

namespace adic {

namespace {

void requireSameAmbient(const GroupValue& a, const GroupValue& b) {
  if (!(a.ambient() == b.ambient())) {
    fail(ErrorCode::AmbientMismatch,
         "values from " + a.ambient().name() + " and " + b.ambient().name());
  }
}

void requireAmbient(const GroupValue& a, const GroupDescriptor& g) {
  if (!(a.ambient() == g)) {
    fail(ErrorCode::AmbientMismatch, "value from " + a.ambient().name() + " used in " + g.name());
  }
}

Rational ratPow(const Rational& base, long n) {
  Integer num;
  Integer den;
  const unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  return n >= 0 ? Rational(num, den) : Rational(den, num);
}

// Compares p^e with r^n exactly: writing e = a/b with b > 0, both sides are
// raised to the b-th power and compared as rationals.
std::strong_ordering comparePowerWithBase(Prime p, const Rational& e, const Rational& r, long n) {
  const long a = e.get_num().get_si();
  const long b = e.get_den().get_si();
  const Rational lhs = powP(p, a);
  const Rational rhs = ratPow(r, n * b);
  const int c = ::cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::strong_ordering orderOf(const Rational& a, const Rational& b) {
  const int c = ::cmp(a, b);
  return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::string renderExponent(const Rational& e) { return "p^{" + renderRational(e) + "}"; }

}  // namespace

GroupDescriptor GroupDescriptor::pqrz(Prime p, const Rational& r) {
  if (r <= 0 || r >= 1) fail(ErrorCode::InvalidArgument, "auxiliary base must lie in (0,1)");
  // A rational power of p that is rational is an integer power of p.
  if (r.get_num() == 1) {
    Integer d = r.get_den();
    while (d > 1 && mpz_divisible_ui_p(d.get_mpz_t(), p.ul())) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p.ul());
    }
    if (d == 1) fail(ErrorCode::InvalidArgument, "auxiliary base is a power of p");
  }
  return GroupDescriptor(GroupKind::PQrZ, p, r);
}

std::string GroupDescriptor::name() const {
  switch (kind_) {
    case GroupKind::PQ: return "p^Q";
    case GroupKind::PQrZ: return "p^Q*r^Z(r=" + renderRational(base_) + ")";
    case GroupKind::PQxHalfZ: return "p^Q x (1/2)^Z";
  }
  return "?";
}

GroupValue GroupValue::zero(const GroupDescriptor& ambient) {
  return GroupValue(ambient, true, Rational(0), 0);
}

GroupValue GroupValue::one(const GroupDescriptor& ambient) {
  return GroupValue(ambient, false, Rational(0), 0);
}

GroupValue GroupValue::pexp(Prime p, const Rational& e) {
  return GroupValue(GroupDescriptor::pq(p), false, e, 0);
}

GroupValue GroupValue::mixed(const GroupDescriptor& ambient, const Rational& e, long n) {
  if (ambient.kind() != GroupKind::PQrZ) {
    fail(ErrorCode::AmbientMismatch, "mixed value requires a p^Q*r^Z ambient");
  }
  return GroupValue(ambient, false, e, n);
}

GroupValue GroupValue::lex2(Prime p, const Rational& e, long n) {
  return GroupValue(GroupDescriptor::pqxHalfZ(p), false, e, n);
}

GroupValue GroupValue::make(const GroupDescriptor& ambient, const Rational& e, long n) {
  if (ambient.kind() == GroupKind::PQ && n != 0) {
    fail(ErrorCode::AmbientMismatch, "p^Q has no second exponent");
  }
  return GroupValue(ambient, false, e, n);
}

std::string GroupValue::toString() const {
  if (zero_) return "0";
  switch (ambient_.kind()) {
    case GroupKind::PQ: return renderExponent(e_);
    case GroupKind::PQrZ: return renderExponent(e_) + "*r^{" + std::to_string(n_) + "}";
    case GroupKind::PQxHalfZ:
      return "(" + renderExponent(e_) + ", (1/2)^{" + std::to_string(n_) + "})";
  }
  return "?";
}

bool operator==(const GroupValue& a, const GroupValue& b) {
  if (!(a.ambient() == b.ambient())) return false;
  if (a.isZero() || b.isZero()) return a.isZero() == b.isZero();
  return a.pExponent() == b.pExponent() && a.secondExponent() == b.secondExponent();
}

std::string convexSubgroupName(ConvexSubgroup delta) {
  switch (delta) {
    case ConvexSubgroup::Trivial: return "Trivial";
    case ConvexSubgroup::SecondFactor: return "SecondFactor";
    case ConvexSubgroup::Full: return "Full";
  }
  return "?";
}

std::strong_ordering cmp(const GroupValue& a, const GroupValue& b) {
  requireSameAmbient(a, b);
  if (a.isZero() || b.isZero()) {
    if (a.isZero() && b.isZero()) return std::strong_ordering::equal;
    return a.isZero() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  switch (a.ambient().kind()) {
    case GroupKind::PQ: return orderOf(a.pExponent(), b.pExponent());
    case GroupKind::PQrZ:
      // p^{e1} r^{n1} vs p^{e2} r^{n2}  <=>  p^{e1-e2} vs r^{n2-n1}
      return comparePowerWithBase(a.ambient().prime(), a.pExponent() - b.pExponent(),
                                  a.ambient().base(), b.secondExponent() - a.secondExponent());
    case GroupKind::PQxHalfZ: {
      const auto first = orderOf(a.pExponent(), b.pExponent());
      if (first != 0) return first;
      // (1/2)^n decreases in n.
      return b.secondExponent() <=> a.secondExponent();
    }
  }
  return std::strong_ordering::equal;
}

GroupValue mul(const GroupValue& a, const GroupValue& b) {
  requireSameAmbient(a, b);
  if (a.isZero() || b.isZero()) return GroupValue::zero(a.ambient());
  return GroupValue::make(a.ambient(), a.pExponent() + b.pExponent(),
                          a.secondExponent() + b.secondExponent());
}

GroupValue inverse(const GroupValue& a) {
  if (a.isZero()) fail(ErrorCode::ZeroInput, "inverse of 0");
  return GroupValue::make(a.ambient(), -a.pExponent(), -a.secondExponent());
}

GroupValue maxValue(const GroupValue& a, const GroupValue& b) { return cmp(a, b) < 0 ? b : a; }

bool isCofinal(const GroupValue& a, const GroupDescriptor& group) {
  requireAmbient(a, group);
  if (a.isZero()) return true;
  switch (group.kind()) {
    case GroupKind::PQ:
    case GroupKind::PQxHalfZ: return a.pExponent() < 0;
    case GroupKind::PQrZ: return cmp(a, GroupValue::one(group)) < 0;
  }
  return false;
}

bool isConvexIn(ConvexSubgroup delta, const GroupDescriptor& group) noexcept {
  return delta != ConvexSubgroup::SecondFactor || group.kind() == GroupKind::PQxHalfZ;
}

bool contains(ConvexSubgroup delta, const GroupValue& a) {
  if (!isConvexIn(delta, a.ambient())) {
    fail(ErrorCode::AmbientMismatch,
         convexSubgroupName(delta) + " is not a subgroup of " + a.ambient().name());
  }
  if (a.isZero()) return false;
  switch (delta) {
    case ConvexSubgroup::Trivial: return a.isOne();
    case ConvexSubgroup::SecondFactor: return a.pExponent() == 0;
    case ConvexSubgroup::Full: return true;
  }
  return false;
}

ConvexSubgroup convexClosure(std::span<const GroupValue> values, const GroupDescriptor& group) {
  if (values.empty()) fail(ErrorCode::InvalidArgument, "convexClosure of an empty set");
  ConvexSubgroup result = ConvexSubgroup::Trivial;
  for (const GroupValue& v : values) {
    requireAmbient(v, group);
    if (v.isZero()) fail(ErrorCode::ZeroInGeneratorSet, "0 is not a group element");
    if (v.isOne()) continue;
    if (group.kind() == GroupKind::PQxHalfZ && v.pExponent() == 0) {
      result = ConvexSubgroup::SecondFactor;
    } else {
      return ConvexSubgroup::Full;
    }
  }
  return result;
}

GroupValue quotientProject(const GroupValue& a, ConvexSubgroup delta) {
  if (!isConvexIn(delta, a.ambient())) {
    fail(ErrorCode::AmbientMismatch,
         convexSubgroupName(delta) + " is not a subgroup of " + a.ambient().name());
  }
  const Prime p = a.ambient().prime();
  switch (delta) {
    case ConvexSubgroup::Trivial: return a;
    case ConvexSubgroup::SecondFactor:
      if (a.isZero()) return GroupValue::zero(GroupDescriptor::pq(p));
      return GroupValue::pexp(p, a.pExponent());
    case ConvexSubgroup::Full:
      if (a.isZero()) return GroupValue::zero(GroupDescriptor::pq(p));
      return GroupValue::one(GroupDescriptor::pq(p));
  }
  return a;
}

GroupValue truncate(const GroupValue& a, ConvexSubgroup delta) {
  if (a.isZero()) return a;
  return contains(delta, a) ? a : GroupValue::zero(a.ambient());
}

}  // namespace adic
