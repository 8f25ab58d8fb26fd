#include "adic/arith.hpp"

#include "adic/error.hpp"

namespace adic {

namespace {

constexpr std::uint64_t kPrimeLimit = 1ULL << 31;

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint64_t mpzModP(const Integer& n, Prime p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p.ul());
  return r.get_ui();
}

bool validIntegerText(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool isPrime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value >= kPrimeLimit || !isPrime(value)) {
    fail(ErrorCode::InvalidArgument, "not a supported prime: " + std::to_string(value));
  }
}

long ExtInt::value() const {
  if (!finite_) fail(ErrorCode::InvalidArgument, "value() of +inf");
  return value_;
}

std::string ExtInt::toString() const { return finite_ ? std::to_string(value_) : "inf"; }

ExtInt vpInt(const Integer& n, Prime p) {
  if (n == 0) return ExtInt::infinity();
  Integer m = abs(n);
  long count = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p.ul())) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p.ul());
    ++count;
  }
  return ExtInt(count);
}

ExtInt vp(const Rational& x, Prime p) {
  if (x == 0) return ExtInt::infinity();
  return ExtInt(vpInt(x.get_num(), p).value() - vpInt(x.get_den(), p).value());
}

std::uint64_t residueUnit(const Rational& x, Prime p) {
  if (x == 0) fail(ErrorCode::ZeroInput, "residueUnit of zero");
  Integer num = x.get_num();
  Integer den = x.get_den();
  while (mpz_divisible_ui_p(num.get_mpz_t(), p.ul())) {
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p.ul());
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p.ul())) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p.ul());
  }
  const std::uint64_t n = mpzModP(num, p);
  const std::uint64_t d = mpzModP(den, p);
  // Fermat inverse: d is a unit mod p.
  return n * powMod(d, p.value() - 2, p.value()) % p.value();
}

std::uint64_t reduceModP(const Rational& x, Prime p) {
  if (x == 0) return 0;
  const ExtInt v = vp(x, p);
  if (v < ExtInt(0)) {
    fail(ErrorCode::InvalidArgument, "reduceModP of non-integral " + renderRational(x));
  }
  if (v > ExtInt(0)) return 0;
  return residueUnit(x, p);
}

Rational powP(Prime p, long e) {
  Integer base(p.ul());
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(power);
  return Rational(Integer(1), power);
}

std::string renderRational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<Rational> parseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view numText = text.substr(0, slash);
  if (!validIntegerText(numText)) return std::nullopt;
  Integer num(std::string(numText.front() == '+' ? numText.substr(1) : numText));
  Integer den(1);
  if (slash != std::string_view::npos) {
    const std::string_view denText = text.substr(slash + 1);
    if (!validIntegerText(denText)) return std::nullopt;
    den = Integer(std::string(denText.front() == '+' ? denText.substr(1) : denText));
    if (den == 0) return std::nullopt;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool isInteger(const Rational& x) { return x.get_den() == 1; }

}  // namespace adic
