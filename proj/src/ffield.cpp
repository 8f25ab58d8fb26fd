#include "adic/ffield.hpp"

#include <algorithm>

#include "adic/error.hpp"

namespace adic {

namespace {

// Dense polynomials over F_p, constant term first, no trailing zeros.
using FpPoly = std::vector<std::uint64_t>;

void trimFp(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t invModP(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

FpPoly subFp(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trimFp(r);
  return r;
}

FpPoly mulFp(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trimFp(r);
  return r;
}

// Returns (quotient, remainder).
std::pair<FpPoly, FpPoly> divModFp(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (b.empty()) fail(ErrorCode::ZeroDenominator, "division by the zero polynomial");
  trimFp(a);
  if (a.size() < b.size()) return {{}, a};
  FpPoly q(a.size() - b.size() + 1, 0);
  const std::uint64_t leadInv = invModP(b.back(), p);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const std::uint64_t c = a[i] * leadInv % p;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
    }
    if (i == 0) break;
  }
  trimFp(a);
  trimFp(q);
  return {q, a};
}

FpPoly modFp(const FpPoly& a, const FpPoly& m, std::uint64_t p) { return divModFp(a, m, p).second; }

FpPoly gcdFp(FpPoly a, FpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    FpPoly r = modFp(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly powModFp(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
  FpPoly result{1};
  base = modFp(base, m, p);
  while (e > 0) {
    if (e & 1) result = modFp(mulFp(result, base, p), m, p);
    base = modFp(mulFp(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

// x^{p^j} mod m
FpPoly frobeniusPower(const FpPoly& m, int j, std::uint64_t p) {
  FpPoly h{0, 1};
  for (int i = 0; i < j; ++i) h = powModFp(h, p, m, p);
  return h;
}

std::vector<int> primeDivisors(int n) {
  std::vector<int> out;
  for (int d = 2; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  return out;
}

void requireSameContext(const FqPoly& a, const FqPoly& b) {
  if (!(*a.context() == *b.context())) {
    fail(ErrorCode::AmbientMismatch, "polynomials over different finite fields");
  }
}

}  // namespace

bool isIrreducibleOverFp(const std::vector<std::uint64_t>& poly, Prime p) {
  FpPoly f = poly;
  trimFp(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const int k = static_cast<int>(f.size()) - 1;
  const std::uint64_t q = p.value();
  const FpPoly x{0, 1};
  if (!(frobeniusPower(f, k, q) == modFp(x, f, q))) return false;
  for (int r : primeDivisors(k)) {
    const FpPoly h = subFp(frobeniusPower(f, k / r, q), x, q);
    if (gcdFp(f, h, q).size() != 1) return false;
  }
  return true;
}

FqContext::FqContext(Prime p, std::vector<std::uint64_t> modulus)
    : p_(p), k_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {}

std::shared_ptr<const FqContext> FqContext::create(Prime p, int k) {
  if (k < 1 || k > kMaxDegree) {
    fail(ErrorCode::InvalidArgument, "extension degree must lie in [1, 8]");
  }
  std::vector<std::uint64_t> candidate(static_cast<std::size_t>(k) + 1, 0);
  candidate[static_cast<std::size_t>(k)] = 1;
  // Odometer over the k lower coefficients.
  while (true) {
    if (isIrreducibleOverFp(candidate, p)) {
      return std::shared_ptr<const FqContext>(new FqContext(p, candidate));
    }
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(k) && ++candidate[i] == p.value()) candidate[i++] = 0;
    if (i == static_cast<std::size_t>(k)) break;
  }
  fail(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

std::shared_ptr<const FqContext> FqContext::withModulus(Prime p,
                                                        std::vector<std::uint64_t> modulus) {
  for (auto& c : modulus) c %= p.value();
  trimFp(modulus);
  const int k = static_cast<int>(modulus.size()) - 1;
  if (k < 1 || k > kMaxDegree) {
    fail(ErrorCode::InvalidArgument, "extension degree must lie in [1, 8]");
  }
  if (!isIrreducibleOverFp(modulus, p)) {
    fail(ErrorCode::InvalidArgument, "modulus is not monic irreducible over F_p");
  }
  return std::shared_ptr<const FqContext>(new FqContext(p, std::move(modulus)));
}

FqElement FqContext::zero() const { return FqElement{std::vector<std::uint64_t>(k_, 0)}; }

FqElement FqContext::one() const { return fromPrimeField(1); }

FqElement FqContext::fromPrimeField(std::uint64_t c) const {
  FqElement e = zero();
  e.coords[0] = c % p_.value();
  return e;
}

FqElement FqContext::fromCoords(std::vector<std::uint64_t> coords) const {
  if (coords.size() != static_cast<std::size_t>(k_)) {
    fail(ErrorCode::InvalidArgument, "element needs exactly " + std::to_string(k_) + " coordinates");
  }
  for (auto& c : coords) c %= p_.value();
  return FqElement{std::move(coords)};
}

bool FqContext::isZero(const FqElement& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [](auto c) { return c == 0; });
}

FqElement FqContext::add(const FqElement& a, const FqElement& b) const {
  FqElement r = zero();
  for (int i = 0; i < k_; ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % p_.value();
  return r;
}

FqElement FqContext::sub(const FqElement& a, const FqElement& b) const {
  FqElement r = zero();
  for (int i = 0; i < k_; ++i) r.coords[i] = (a.coords[i] + p_.value() - b.coords[i]) % p_.value();
  return r;
}

FqElement FqContext::neg(const FqElement& a) const { return sub(zero(), a); }

FqElement FqContext::mul(const FqElement& a, const FqElement& b) const {
  FpPoly prod = modFp(mulFp(a.coords, b.coords, p_.value()), modulus_, p_.value());
  prod.resize(static_cast<std::size_t>(k_), 0);
  return FqElement{std::move(prod)};
}

FqElement FqContext::inv(const FqElement& a) const {
  if (isZero(a)) fail(ErrorCode::ZeroInput, "inverse of zero in F_q");
  const std::uint64_t p = p_.value();
  // Extended Euclid: track s with s*a == r (mod modulus).
  FpPoly r0 = modulus_;
  FpPoly r1 = a.coords;
  trimFp(r1);
  FpPoly s0{};
  FpPoly s1{1};
  while (r1.size() > 1) {
    auto [q, r] = divModFp(r0, r1, p);
    FpPoly s = subFp(s0, mulFp(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a non-zero constant.
  const std::uint64_t c = invModP(r1[0], p);
  FpPoly out = modFp(mulFp(s1, FpPoly{c}, p), modulus_, p);
  out.resize(static_cast<std::size_t>(k_), 0);
  return FqElement{std::move(out)};
}

std::vector<FqElement> FqContext::elements() const {
  std::vector<FqElement> out;
  FqElement e = zero();
  while (true) {
    out.push_back(e);
    int i = 0;
    while (i < k_ && ++e.coords[i] == p_.value()) e.coords[i++] = 0;
    if (i == k_) break;
  }
  return out;
}

FqPoly::FqPoly(std::shared_ptr<const FqContext> ctx, std::vector<FqElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  trim();
}

FqPoly FqPoly::fromPrimeField(std::shared_ptr<const FqContext> ctx,
                              const std::vector<std::uint64_t>& residues) {
  std::vector<FqElement> coeffs;
  coeffs.reserve(residues.size());
  for (auto c : residues) coeffs.push_back(ctx->fromPrimeField(c));
  return FqPoly(std::move(ctx), std::move(coeffs));
}

FqPoly FqPoly::monomial(std::shared_ptr<const FqContext> ctx, const FqElement& c, long degree) {
  std::vector<FqElement> coeffs(static_cast<std::size_t>(degree) + 1, ctx->zero());
  coeffs.back() = c;
  return FqPoly(std::move(ctx), std::move(coeffs));
}

FqPoly FqPoly::linear(std::shared_ptr<const FqContext> ctx, const FqElement& lambda) {
  std::vector<FqElement> coeffs{ctx->neg(lambda), ctx->one()};
  return FqPoly(std::move(ctx), std::move(coeffs));
}

void FqPoly::trim() {
  while (!coeffs_.empty() && ctx_->isZero(coeffs_.back())) coeffs_.pop_back();
}

long FqPoly::degree() const noexcept {
  return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
}

FqElement FqPoly::evaluate(const FqElement& x) const {
  FqElement acc = ctx_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = ctx_->add(ctx_->mul(acc, x), *it);
  }
  return acc;
}

FqPoly FqPoly::divideByLinear(const FqElement& lambda) const {
  if (coeffs_.size() < 2) return FqPoly(ctx_);
  // Synthetic division, highest coefficient first.
  std::vector<FqElement> q(coeffs_.size() - 1, ctx_->zero());
  FqElement carry = ctx_->zero();
  for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) {
    carry = ctx_->add(coeffs_[i], ctx_->mul(carry, lambda));
    q[i - 1] = carry;
  }
  return FqPoly(ctx_, std::move(q));
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  requireSameContext(a, b);
  const auto& ctx = *a.ctx_;
  std::vector<FqElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), ctx.zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] = ctx.add(out[i], a.coeffs_[i]);
    if (i < b.coeffs_.size()) out[i] = ctx.add(out[i], b.coeffs_[i]);
  }
  return FqPoly(a.ctx_, std::move(out));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  requireSameContext(a, b);
  const auto& ctx = *a.ctx_;
  std::vector<FqElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), ctx.zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] = ctx.add(out[i], a.coeffs_[i]);
    if (i < b.coeffs_.size()) out[i] = ctx.sub(out[i], b.coeffs_[i]);
  }
  return FqPoly(a.ctx_, std::move(out));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  requireSameContext(a, b);
  if (a.isZero() || b.isZero()) return FqPoly(a.ctx_);
  const auto& ctx = *a.ctx_;
  std::vector<FqElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, ctx.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = ctx.add(out[i + j], ctx.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return FqPoly(a.ctx_, std::move(out));
}

bool operator==(const FqPoly& a, const FqPoly& b) {
  return *a.ctx_ == *b.ctx_ && a.coeffs_ == b.coeffs_;
}

const FqElement& P1Point::value() const {
  if (!value_) fail(ErrorCode::InvalidArgument, "infinity has no affine value");
  return *value_;
}

std::vector<P1Point> enumerateP1(const FqContext& ctx, bool includeInfinity) {
  std::vector<P1Point> out;
  for (auto& e : ctx.elements()) out.push_back(P1Point::finite(std::move(e)));
  if (includeInfinity) out.push_back(P1Point::infinity());
  return out;
}

namespace {

long multiplicityAt(FqPoly f, const FqElement& lambda) {
  long m = 0;
  const auto& ctx = *f.context();
  while (ctx.isZero(f.evaluate(lambda))) {
    f = f.divideByLinear(lambda);
    ++m;
  }
  return m;
}

}  // namespace

ExtInt ordAt(const FqPoly& num, const FqPoly& den, const P1Point& lambda) {
  if (den.isZero()) fail(ErrorCode::ZeroDenominator, "ord of a fraction with zero denominator");
  requireSameContext(num, den);
  if (num.isZero()) return ExtInt::infinity();
  if (lambda.isInfinity()) return ExtInt(den.degree() - num.degree());
  return ExtInt(multiplicityAt(num, lambda.value()) - multiplicityAt(den, lambda.value()));
}

GroupValue lambdaValue(const FqPoly& num, const FqPoly& den, const P1Point& lambda) {
  const ExtInt ord = ordAt(num, den, lambda);
  const Prime p = num.context()->prime();
  if (ord.isInfinite()) return GroupValue::zero(GroupDescriptor::pqxHalfZ(p));
  return GroupValue::lex2(p, Rational(0), ord.value());
}

}  // namespace adic
