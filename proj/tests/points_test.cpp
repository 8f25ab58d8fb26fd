#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "adic/error.hpp"
#include "adic/points.hpp"
#include "adic/topology.hpp"
#include "support.hpp"

using namespace adic;
using adic::testing::codeOf;
using adic::testing::poly;
using adic::testing::Q;

namespace {

const Prime p3(3);
const Prime p5(5);

TateSeries w(Prime p) { return TateSeries::variable(p); }

GroupValue one(const PointDescriptor& x) { return GroupValue::one(x.valueGroup()); }

// Random catalog points of one variant, centers in the unit disc.
class PointSampler {
 public:
  PointSampler(Prime p, std::uint64_t seed) : p_(p), s_(p, seed) {}

  Rational center() {
    Rational a(static_cast<long>(s_.below(p_.value() * p_.value() * p_.value())));
    if (s_.below(3) == 0) a /= Rational(static_cast<long>(s_.below(4 * p_.value()) * p_.value() + 1));
    return a;
  }

  PointDescriptor classical() { return PointDescriptor::classical(p_, center()); }

  PointDescriptor ppowerDisc() {
    static const char* qs[] = {"0", "1/2", "1", "3/2", "2"};
    return PointDescriptor::disc(p_, center(), Radius::pPower(Q(qs[s_.below(5)])));
  }

  PointDescriptor plainDisc() {
    static const char* rs[] = {"1/2", "2/5", "1/7", "5/8"};
    return PointDescriptor::disc(p_, center(), Radius::plain(p_, Q(rs[s_.below(4)])));
  }

  PointDescriptor type5() {
    static const char* qs[] = {"0", "1/2", "1", "2"};
    auto ctx = FqContext::create(p_, 1 + static_cast<int>(s_.below(2)));
    const auto p1 = enumerateP1(*ctx, true);
    return PointDescriptor::type5(p_, center(), Q(qs[s_.below(4)]), ctx, p1[s_.below(p1.size())]);
  }

  PointDescriptor any() {
    switch (s_.below(4)) {
      case 0: return classical();
      case 1: return ppowerDisc();
      case 2: return plainDisc();
      default: return type5();
    }
  }

  // Integral polynomial, sometimes scaled out of O<w>.
  TateSeries series() {
    TateSeries f = s_.integralPolynomial(5, 3);
    if (s_.below(4) == 0) f = f.scaled(powP(p_, -static_cast<long>(s_.below(3))));
    return f;
  }

  SeriesSampler& sampler() { return s_; }

 private:
  Prime p_;
  SeriesSampler s_;
};

using Variant = PointDescriptor (PointSampler::*)();

// Roots of f counted with multiplicity whose valuation passes keep.
template <typename Keep>
long rootCount(const TateSeries& f, Keep keep) {
  long n = 0;
  for (const auto& seg : newtonPolygon(f)) {
    if (!seg.slope || keep(-*seg.slope)) n += seg.multiplicity;
  }
  return n;
}

}  // namespace

TEST(Points, EvaluateExamples) {
  const auto xm = PointDescriptor::oneMinus(p3);
  const auto xp = PointDescriptor::onePlus(p3);
  EXPECT_EQ(evaluate(TateSeries::constant(p3, Q("3")), xm), GroupValue::lex2(p3, Q("-1"), 0));
  EXPECT_EQ(evaluate(w(p3), xm), GroupValue::lex2(p3, Q("0"), 1));
  for (long n = 1; n <= 20; ++n) {
    const auto v = evaluate(w(p3).pow(static_cast<unsigned>(n)), xp);
    EXPECT_EQ(v, GroupValue::lex2(p3, Q("0"), -n));
    EXPECT_GT(v, one(xp));
  }
  EXPECT_TRUE(evaluate(poly(p3, {"-2/5", "1"}), PointDescriptor::classical(p3, Q("2/5"))).isZero());
  const auto plain = PointDescriptor::disc(p3, Q("0"), Radius::plain(p3, Q("1/2")));
  EXPECT_EQ(evaluate(w(p3), plain), GroupValue::mixed(GroupDescriptor::pqrz(p3, Q("1/2")), Q("0"), 1));
  const auto f = poly(p3, {"27", "3", "1"});
  EXPECT_EQ(evaluate(f, PointDescriptor::disc(p3, Q("0"), Radius::pPower(Q("1/2")))), GroupValue::pexp(p3, Q("-1")));
}

TEST(Points, HalfRadiusValueBoundsRationalSamples) {
  const auto f = poly(p3, {"27", "3", "1"});
  const auto x = PointDescriptor::disc(p3, Q("0"), Radius::pPower(Q("1/2")));
  const auto norm = evaluate(f, x);
  SeriesSampler s(p3, 4);
  for (int i = 0; i < 200; ++i) {
    const Rational alpha = Rational(3) * Rational(static_cast<long>(s.below(500))) * s.unit();
    const auto v = evaluate(f, PointDescriptor::classical(p3, alpha));
    ASSERT_LE(v, norm) << alpha;
  }
}

TEST(Points, ClassifyExamples) {
  const auto gauss = classify(PointDescriptor::gauss(p3));
  EXPECT_EQ(gauss.typeTag, 2);
  EXPECT_EQ(gauss.valueGroup, GroupDescriptor::pq(p3));
  EXPECT_EQ(gauss.residueField, ResidueFieldKind::RationalFunction);
  EXPECT_FALSE(gauss.closed);
  EXPECT_EQ(gauss.support, SupportKind::ZeroIdeal);

  const auto plus = classify(PointDescriptor::onePlus(p3));
  EXPECT_EQ(plus.typeTag, 5);
  EXPECT_EQ(plus.valueGroup, GroupDescriptor::pqxHalfZ(p3));
  EXPECT_FALSE(plus.inD);
  EXPECT_TRUE(plus.closed);

  const auto c = classify(PointDescriptor::classical(p3, Q("7")));
  EXPECT_EQ(c.typeTag, 1);
  EXPECT_TRUE(c.closed);
  EXPECT_EQ(c.support, SupportKind::MaximalIdeal);
  EXPECT_EQ(c.residueField, ResidueFieldKind::AlgClosedPrime);

  const auto t3 = classify(PointDescriptor::disc(p5, Q("1"), Radius::plain(p5, Q("1/2"))));
  EXPECT_EQ(t3.typeTag, 3);
  EXPECT_EQ(t3.valueGroup, GroupDescriptor::pqrz(p5, Q("1/2")));
  EXPECT_TRUE(t3.closed);
  EXPECT_TRUE(t3.inD);
}

TEST(Points, InDExamples) {
  EXPECT_TRUE(inD(PointDescriptor::oneMinus(p3)));
  EXPECT_FALSE(inD(PointDescriptor::onePlus(p3)));
  EXPECT_TRUE(inD(PointDescriptor::classical(p3, Q("0"))));
  // Infinity direction of a smaller disc stays inside D.
  auto ctx = FqContext::create(p3, 1);
  EXPECT_TRUE(inD(PointDescriptor::type5(p3, Q("0"), Q("1"), ctx, P1Point::infinity())));
}

TEST(Points, SupportExamples) {
  const Rational alpha = Q("4/7");
  const auto lin = poly(p3, {"-4/7", "1"});
  const auto g = poly(p3, {"1", "2", "5"});
  EXPECT_TRUE(supportContains(PointDescriptor::classical(p3, alpha), lin * lin * g));
  EXPECT_FALSE(supportContains(PointDescriptor::classical(p3, alpha), g));
  EXPECT_FALSE(supportContains(PointDescriptor::disc(p3, Q("0"), Radius::pPower(Q("1"))), w(p3)));
  PointSampler s(p3, 1);
  for (int i = 0; i < 40; ++i) EXPECT_TRUE(supportContains(s.any(), TateSeries::zero(p3)));
}

TEST(Points, ConstructorErrors) {
  EXPECT_EQ(codeOf([] { Radius::plain(p3, Q("1/3")); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(codeOf([] { Radius::plain(p3, Q("1/9")); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(codeOf([] { Radius::plain(p3, Q("1")); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(codeOf([] { Radius::pPower(Q("-1")); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(codeOf([] { PointDescriptor::classical(p3, Q("1/3")); }), ErrorCode::CenterOutsideDisc);
  EXPECT_EQ(codeOf([] {
              PointDescriptor::type5(p3, Q("2/3"), Q("0"), FqContext::create(p3, 1), P1Point::infinity());
            }),
            ErrorCode::CenterOutsideDisc);
  EXPECT_EQ(codeOf([] { evaluate(TateSeries(p3, {Q("1")}, ExtInt(0)), PointDescriptor::classical(p3, Q("1"))); }),
            ErrorCode::EvaluationOfNonPolynomialAtClassicalPoint);
  EXPECT_EQ(codeOf([] { evaluate(w(p5), PointDescriptor::gauss(p3)); }), ErrorCode::AmbientMismatch);
}

TEST(Points, TailedSeriesAtDiscPoints) {
  // 1 + 3w + O(3^1): the constant term dominates at every radius.
  const TateSeries f(p3, {Q("1"), Q("3")}, ExtInt(1));
  EXPECT_TRUE(evaluate(f, PointDescriptor::gauss(p3)).isOne());
  EXPECT_TRUE(evaluate(f, PointDescriptor::oneMinus(p3)).isOne());
  // 3 + O(3^1) cannot be certified at the Gauss point.
  const TateSeries g(p3, {Q("3")}, ExtInt(1));
  EXPECT_EQ(evaluate(g, PointDescriptor::gauss(p3)), GroupValue::pexp(p3, Q("-1")));
  const TateSeries h(p3, {Q("9")}, ExtInt(1));
  EXPECT_EQ(codeOf([&] { evaluate(h, PointDescriptor::gauss(p3)); }), ErrorCode::UncertainTail);
}

class PointsByVariant : public ::testing::TestWithParam<std::pair<const char*, Variant>> {};

TEST_P(PointsByVariant, MultiplicativeAndUltrametric) {
  for (const Prime p : {p3, p5}) {
    PointSampler s(p, 100 + p.value());
    const Variant make = GetParam().second;
    for (int i = 0; i < 500; ++i) {
      const auto x = (s.*make)();
      const auto f = s.series();
      const auto g = s.series();
      const auto fx = evaluate(f, x);
      const auto gx = evaluate(g, x);
      ASSERT_EQ(evaluate(f * g, x), fx * gx) << x.describe();
      ASSERT_LE(evaluate(f + g, x), maxValue(fx, gx)) << x.describe();
      ASSERT_EQ(fx.ambient(), x.valueGroup());
    }
  }
}

TEST_P(PointsByVariant, AnalyticAndBoundedOnIntegralSeries) {
  PointSampler s(p3, 7);
  const Variant make = GetParam().second;
  for (int i = 0; i < 200; ++i) {
    const auto x = (s.*make)();
    ASSERT_FALSE(evaluate(TateSeries::constant(p3, Q("3")), x).isZero());
    if (!inD(x)) continue;
    const auto f = s.sampler().integralPolynomial(6, 4);
    ASSERT_LE(evaluate(f, x), one(x)) << x.describe();
  }
}

INSTANTIATE_TEST_SUITE_P(All, PointsByVariant,
                         ::testing::Values(std::pair<const char*, Variant>{"Classical", &PointSampler::classical},
                                           std::pair<const char*, Variant>{"PPowerDisc", &PointSampler::ppowerDisc},
                                           std::pair<const char*, Variant>{"PlainDisc", &PointSampler::plainDisc},
                                           std::pair<const char*, Variant>{"Type5", &PointSampler::type5}),
                         [](const auto& info) { return std::string(info.param.first); });

TEST(PointsProperty, Type5ProjectsToItsDisc) {
  PointSampler s(p3, 9);
  for (int i = 0; i < 500; ++i) {
    const auto y = s.type5();
    const auto x = PointDescriptor::disc(p3, y.center(), y.radius());
    const auto f = s.series();
    ASSERT_EQ(quotientProject(evaluate(f, y), ConvexSubgroup::SecondFactor), evaluate(f, x)) << y.describe();
  }
}

TEST(PointsProperty, DiscDependsOnlyOnTheDisc) {
  for (const Prime p : {p3, p5}) {
    PointSampler s(p, 31);
    for (int i = 0; i < 500; ++i) {
      const auto x = s.ppowerDisc();
      const Rational& q = x.radius().exponent();
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      const Rational shift = powP(p, c.get_si()) * Rational(static_cast<long>(s.sampler().below(50))) * s.sampler().unit();
      const auto y = PointDescriptor::disc(p, x.center() + shift, x.radius());
      ASSERT_TRUE(samePoint(x, y));
      const auto f = s.series();
      ASSERT_EQ(evaluate(f, x), evaluate(f, y)) << x.describe() << " " << y.describe();
    }
  }
}

TEST(PointsProperty, PlainDiscDependsOnlyOnTheDisc) {
  PointSampler s(p3, 37);
  for (int i = 0; i < 500; ++i) {
    const auto x = s.plainDisc();
    // r < 1, so any shift divisible by p stays in the disc only when |shift| <= r.
    const Rational shift = Rational(9) * Rational(static_cast<long>(s.sampler().below(50))) * s.sampler().unit();
    const auto y = PointDescriptor::disc(p3, x.center() + shift, x.radius());
    if (!samePoint(x, y)) continue;
    const auto f = s.series();
    ASSERT_EQ(evaluate(f, x), evaluate(f, y));
  }
}

// For integer q the direction lambda in the coordinate t = (w - alpha)/p^q
// counts roots of f in the residue disc of alpha + p^q lambda; the infinite
// direction counts (with sign -) the roots in the whole disc.
TEST(PointsProperty, Type5AgreesWithRootCounting) {
  for (const Prime p : {p3, p5}) {
    SeriesSampler s(p, 55);
    auto ctx = FqContext::create(p, 1);
    for (int i = 0; i < 500; ++i) {
      const long q = static_cast<long>(s.below(3));
      const Rational alpha(static_cast<long>(s.below(p.value() * p.value())));
      const TateSeries f = s.integralPolynomial(6, 3);
      if (f.isZero()) continue;
      const bool atInfinity = s.below(p.value() + 1) == 0;
      const std::uint64_t lam = s.below(p.value());
      const auto x = PointDescriptor::type5(p, alpha, Rational(q), ctx,
                                            atInfinity ? P1Point::infinity()
                                                       : P1Point::finite(ctx->fromPrimeField(lam)));
      const auto first = rGaussNorm(recenter(f, alpha), Rational(q)).pExponent();
      long second;
      if (atInfinity) {
        second = -rootCount(recenter(f, alpha), [&](const Rational& v) { return v >= q; });
      } else {
        const Rational at = alpha + powP(p, q) * Rational(static_cast<long>(lam));
        second = rootCount(recenter(f, at), [&](const Rational& v) { return v > q; });
      }
      ASSERT_EQ(evaluate(f, x), GroupValue::lex2(p, first, second)) << x.describe() << " " << renderSeries(f);
    }
  }
}

TEST(PointsProperty, ShiftedCenterMovesTheDirection) {
  PointSampler s(p5, 61);
  for (int i = 0; i < 200; ++i) {
    const auto x = s.type5();
    const Rational& q = x.radius().exponent();
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    const Rational shifted = x.center() + powP(p5, c.get_si()) * Rational(static_cast<long>(1 + s.sampler().below(4)));
    int matches = 0;
    for (const auto& lambda : enumerateP1(*x.residueContext(), true)) {
      const auto y = PointDescriptor::type5(p5, shifted, q, x.residueContext(), lambda);
      if (!samePoint(x, y)) continue;
      ++matches;
      for (int j = 0; j < 5; ++j) {
        const auto f = s.series();
        ASSERT_EQ(evaluate(f, x), evaluate(f, y)) << x.describe() << " " << y.describe();
      }
    }
    ASSERT_EQ(matches, 1) << x.describe();
  }
}
