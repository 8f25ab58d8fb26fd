#include "adic/tate.hpp"

#include <algorithm>

#include "adic/error.hpp"

namespace adic {

namespace {

void requireSamePrime(const TateSeries& a, const TateSeries& b) {
  if (!(a.prime() == b.prime())) fail(ErrorCode::AmbientMismatch, "series over different primes");
}

void trimZeros(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Degree up to which the explicit coefficients of a combination stay exact:
// the smallest explicit degree among the tailed operands.
std::optional<long> exactCutoff(const TateSeries& a, const TateSeries& b) {
  std::optional<long> cut;
  for (const TateSeries* s : {&a, &b}) {
    if (!s->isPolynomial()) cut = cut ? std::min(*cut, s->explicitDegree()) : s->explicitDegree();
  }
  return cut;
}

// Lower bound for vp of every coefficient, explicit or not.
ExtInt coefficientFloor(const TateSeries& s) { return minExt(s.minCoeffValuation(), s.tailBound()); }

// Splits raw coefficients at the cutoff; the dropped ones feed the tail bound.
TateSeries assemble(Prime p, std::vector<Rational> raw, std::optional<long> cutoff, ExtInt tail) {
  if (!cutoff) return TateSeries(p, std::move(raw));
  const auto keep = static_cast<std::size_t>(*cutoff + 1);
  for (std::size_t i = keep; i < raw.size(); ++i) tail = minExt(tail, vp(raw[i], p));
  raw.resize(keep, Rational(0));
  return TateSeries(p, std::move(raw), tail);
}

Rational exponentAt(const Rational& coeff, Prime p, const Rational& q, std::size_t i) {
  return Rational(vp(coeff, p).value()) + q * Rational(static_cast<long>(i));
}

}  // namespace

TateSeries::TateSeries(Prime p, std::vector<Rational> coeffs, ExtInt tailBound)
    : p_(p), coeffs_(std::move(coeffs)), tail_(tailBound) {
  for (auto& c : coeffs_) c.canonicalize();
  if (isPolynomial()) trimZeros(coeffs_);
}

TateSeries TateSeries::monomial(Prime p, const Rational& c, long degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
  coeffs.back() = c;
  return TateSeries(p, std::move(coeffs));
}

ExtInt TateSeries::minCoeffValuation() const {
  ExtInt m = ExtInt::infinity();
  for (const auto& c : coeffs_) m = minExt(m, vp(c, p_));
  return m;
}

TateSeries operator+(const TateSeries& a, const TateSeries& b) {
  requireSamePrime(a, b);
  std::vector<Rational> raw(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) raw[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) raw[i] += b.coeffs_[i];
  const auto cutoff = exactCutoff(a, b);
  if (cutoff && raw.size() < static_cast<std::size_t>(*cutoff + 1)) {
    raw.resize(static_cast<std::size_t>(*cutoff + 1), Rational(0));
  }
  return assemble(a.p_, std::move(raw), cutoff, minExt(a.tail_, b.tail_));
}

TateSeries operator-(const TateSeries& a, const TateSeries& b) { return a + b.scaled(Rational(-1)); }

TateSeries operator*(const TateSeries& a, const TateSeries& b) {
  requireSamePrime(a, b);
  std::vector<Rational> raw;
  if (!a.coeffs_.empty() && !b.coeffs_.empty()) {
    raw.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  const auto cutoff = exactCutoff(a, b);
  if (cutoff && raw.size() < static_cast<std::size_t>(*cutoff + 1)) {
    raw.resize(static_cast<std::size_t>(*cutoff + 1), Rational(0));
  }
  // tail(a) * b and a * tail(b)
  const ExtInt tail = minExt(a.tail_ + coefficientFloor(b), b.tail_ + coefficientFloor(a));
  return assemble(a.p_, std::move(raw), cutoff, tail);
}

TateSeries TateSeries::scaled(const Rational& c) const {
  if (c == 0) return zero(p_);
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return TateSeries(p_, std::move(out), tail_ + vp(c, p_));
}

TateSeries TateSeries::pow(unsigned n) const {
  TateSeries result = constant(p_, Rational(1));
  for (unsigned i = 0; i < n; ++i) result = result * *this;
  return result;
}

DominantTerms dominantTerms(const TateSeries& f, const Rational& q, bool strict) {
  if (q < 0) fail(ErrorCode::InvalidArgument, "radius exponent must be >= 0");
  const Prime p = f.prime();
  std::optional<Rational> best;
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    const Rational e = exponentAt(f.coeffs()[i], p, q, i);
    if (!best || e < *best) {
      best = e;
      indices.assign(1, i);
    } else if (e == *best) {
      indices.push_back(i);
    }
  }
  if (!best) {
    if (f.isPolynomial()) fail(ErrorCode::ZeroSeries, "the zero series has no dominant term");
    fail(ErrorCode::UncertainTail, "no explicit non-zero coefficient; the tail may dominate");
  }
  if (!f.isPolynomial()) {
    // Every omitted term has exponent >= tailBound + q (d + 1).
    const Rational bound = Rational(f.tailBound().value()) + q * Rational(f.explicitDegree() + 1);
    const bool certified = strict ? *best < bound : *best <= bound;
    if (!certified) {
      fail(ErrorCode::UncertainTail, "tail certificate " + f.tailBound().toString() +
                                         " cannot rule out a dominant omitted term");
    }
  }
  return DominantTerms{*best, std::move(indices)};
}

GroupValue gaussNorm(const TateSeries& f) { return rGaussNorm(f, Rational(0)); }

GroupValue rGaussNorm(const TateSeries& f, const Rational& q) {
  if (f.isZero()) return GroupValue::zero(GroupDescriptor::pq(f.prime()));
  const DominantTerms dom = dominantTerms(f, q, false);
  return GroupValue::pexp(f.prime(), -dom.minExponent);
}

TateSeries recenter(const TateSeries& f, const Rational& alpha) {
  if (vp(alpha, f.prime()) < ExtInt(0)) {
    fail(ErrorCode::CenterOutsideDisc, "center " + renderRational(alpha) + " has |alpha|_p > 1");
  }
  // Taylor shift: coefficients of f(u + alpha).
  std::vector<Rational> c = f.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += alpha * c[j + 1];
  }
  return TateSeries(f.prime(), std::move(c), f.tailBound());
}

FqPoly reduceAtMax(const TateSeries& f, const Rational& q, std::shared_ptr<const FqContext> ctx) {
  if (!ctx) ctx = FqContext::create(f.prime(), 1);
  if (!(ctx->prime() == f.prime())) fail(ErrorCode::AmbientMismatch, "residue field characteristic");
  const DominantTerms dom = dominantTerms(f, q, true);
  std::vector<std::uint64_t> residues(dom.indices.back() + 1, 0);
  for (std::size_t i : dom.indices) residues[i] = residueUnit(f.coeffs()[i], f.prime());
  return FqPoly::fromPrimeField(std::move(ctx), residues);
}

std::vector<NewtonSegment> newtonPolygon(const TateSeries& f) {
  if (!f.isPolynomial()) fail(ErrorCode::NotPolynomial, "Newton polygon needs a polynomial");
  if (f.isZero()) fail(ErrorCode::ZeroPolynomial, "Newton polygon of zero");
  const auto& c = f.coeffs();
  std::vector<NewtonSegment> out;
  std::size_t start = 0;
  while (c[start] == 0) ++start;
  if (start > 0) out.push_back(NewtonSegment{std::nullopt, static_cast<long>(start)});

  struct Vertex {
    long x;
    Rational y;
  };
  std::vector<Vertex> hull;
  for (std::size_t i = start; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Vertex v{static_cast<long>(i), Rational(vp(c[i], f.prime()).value())};
    // Pop while the last two hull points and v fail to turn upward.
    while (hull.size() >= 2) {
      const Vertex& a = hull[hull.size() - 2];
      const Vertex& b = hull.back();
      const Rational cross = (b.y - a.y) * Rational(v.x - a.x) - (v.y - a.y) * Rational(b.x - a.x);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(std::move(v));
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const long len = hull[i].x - hull[i - 1].x;
    Rational slope = (hull[i].y - hull[i - 1].y) / Rational(len);
    slope.canonicalize();
    out.push_back(NewtonSegment{slope, len});
  }
  return out;
}

long weierstrassDegree(const TateSeries& f) {
  const DominantTerms dom = dominantTerms(f, Rational(0), true);
  return static_cast<long>(dom.indices.back());
}

Rational evaluatePolynomial(const TateSeries& f, const Rational& alpha) {
  Rational acc(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * alpha + *it;
  return acc;
}

namespace {

std::vector<Rational> polyRem(std::vector<Rational> a, const std::vector<Rational>& b) {
  trimZeros(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trimZeros(a);
  }
  return a;
}

}  // namespace

std::vector<Rational> polynomialGcd(const std::vector<std::vector<Rational>>& polys) {
  std::vector<Rational> g;
  for (auto p : polys) {
    trimZeros(p);
    while (!p.empty()) {
      std::vector<Rational> r = g.empty() ? std::vector<Rational>{} : polyRem(g, p);
      g = std::move(p);
      p = std::move(r);
    }
  }
  if (!g.empty()) {
    const Rational lead = g.back();
    for (auto& x : g) x /= lead;
  }
  return g;
}

}  // namespace adic
