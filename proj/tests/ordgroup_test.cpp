#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "adic/error.hpp"
#include "adic/ordgroup.hpp"
#include "support.hpp"

using namespace adic;
using adic::testing::Q;

namespace {

const Prime p3(3);

std::vector<Rational> exponentGrid() {
  std::vector<Rational> out;
  for (long den = 1; den <= 4; ++den) {
    for (long num = -5 * den; num <= 5 * den; ++num) {
      Rational e(num, den);
      e.canonicalize();
      if (e.get_den() == den) out.push_back(e);
    }
  }
  return out;
}

std::vector<GroupValue> sampleValues(const GroupDescriptor& g) {
  std::vector<GroupValue> out{GroupValue::zero(g)};
  for (const Rational& e : exponentGrid()) {
    if (e.get_den() > 2) continue;
    for (long n = -2; n <= 2; ++n) {
      if (g.kind() == GroupKind::PQ && n != 0) continue;
      out.push_back(GroupValue::make(g, e, n));
    }
  }
  return out;
}

const GroupDescriptor kGroups[] = {GroupDescriptor::pq(p3), GroupDescriptor::pqrz(p3, Q("1/2")),
                                   GroupDescriptor::pqxHalfZ(p3)};

}  // namespace

TEST(OrdGroup, LexPBelowEveryPowerOfW) {
  const GroupValue pv = GroupValue::lex2(p3, Q("-1"), 0);
  for (long n = 1; n <= 100; ++n) {
    EXPECT_EQ(cmp(pv, GroupValue::lex2(p3, Q("0"), n)), std::strong_ordering::less) << n;
  }
}

TEST(OrdGroup, CompareExamples) {
  EXPECT_EQ(cmp(GroupValue::pexp(p3, Q("0")), GroupValue::pexp(p3, Q("0"))), std::strong_ordering::equal);
  const auto g = GroupDescriptor::pqrz(p3, Q("1/2"));
  // 1/3 vs 1/4
  EXPECT_EQ(cmp(GroupValue::mixed(g, Q("-1"), 0), GroupValue::mixed(g, Q("0"), 2)), std::strong_ordering::greater);
}

TEST(OrdGroup, MulExamples) {
  const auto h = GroupDescriptor::pqxHalfZ(p3);
  EXPECT_TRUE(mul(GroupValue::zero(h), GroupValue::lex2(p3, Q("5"), -3)).isZero());
  EXPECT_EQ(mul(GroupValue::pexp(p3, Q("-1")), GroupValue::pexp(p3, Q("-1/2"))), GroupValue::pexp(p3, Q("-3/2")));
  EXPECT_EQ(mul(GroupValue::lex2(p3, Q("-1"), 0), GroupValue::lex2(p3, Q("0"), 1)), GroupValue::lex2(p3, Q("-1"), 1));
}

TEST(OrdGroup, AmbientMismatchIsRejected) {
  const auto a = GroupValue::pexp(p3, Q("1"));
  const auto b = GroupValue::lex2(p3, Q("1"), 0);
  EXPECT_THROW(cmp(a, b), Error);
  EXPECT_THROW(mul(a, b), Error);
  EXPECT_THROW(GroupValue::pexp(Prime(5), Q("1")) < a, Error);
  EXPECT_THROW(GroupDescriptor::pqrz(p3, Q("1/3")), Error);
  EXPECT_THROW(GroupDescriptor::pqrz(p3, Q("3/2")), Error);
}

TEST(OrdGroup, Cofinality) {
  const auto h = GroupDescriptor::pqxHalfZ(p3);
  EXPECT_TRUE(isCofinal(GroupValue::lex2(p3, Q("-1"), 0), h));
  EXPECT_FALSE(isCofinal(GroupValue::lex2(p3, Q("0"), 1), h));
  EXPECT_FALSE(isCofinal(GroupValue::pexp(p3, Q("0")), GroupDescriptor::pq(p3)));
  EXPECT_TRUE(isCofinal(GroupValue::zero(h), h));
  const auto g = GroupDescriptor::pqrz(p3, Q("1/2"));
  EXPECT_TRUE(isCofinal(GroupValue::mixed(g, Q("1"), 2), g));  // 3/4
  EXPECT_FALSE(isCofinal(GroupValue::mixed(g, Q("2"), 3), g));  // 9/8
}

TEST(OrdGroup, ConvexClosure) {
  const auto h = GroupDescriptor::pqxHalfZ(p3);
  std::vector<GroupValue> s{GroupValue::one(h)};
  EXPECT_EQ(convexClosure(s, h), ConvexSubgroup::Trivial);
  s = {GroupValue::lex2(p3, Q("0"), 1)};
  EXPECT_EQ(convexClosure(s, h), ConvexSubgroup::SecondFactor);
  s = {GroupValue::lex2(p3, Q("-1"), 0)};
  EXPECT_EQ(convexClosure(s, h), ConvexSubgroup::Full);
  s = {GroupValue::lex2(p3, Q("0"), 3), GroupValue::lex2(p3, Q("1/2"), -1)};
  EXPECT_EQ(convexClosure(s, h), ConvexSubgroup::Full);
  s = {GroupValue::zero(h)};
  try {
    convexClosure(s, h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInGeneratorSet);
  }
  const auto g = GroupDescriptor::pq(p3);
  s = {GroupValue::pexp(p3, Q("2/3"))};
  EXPECT_EQ(convexClosure(s, g), ConvexSubgroup::Full);
}

TEST(OrdGroup, QuotientAndTruncateExamples) {
  const auto h = GroupDescriptor::pqxHalfZ(p3);
  EXPECT_EQ(quotientProject(GroupValue::lex2(p3, Q("-1"), 7), ConvexSubgroup::SecondFactor),
            GroupValue::pexp(p3, Q("-1")));
  EXPECT_EQ(quotientProject(GroupValue::pexp(p3, Q("3")), ConvexSubgroup::Trivial), GroupValue::pexp(p3, Q("3")));
  EXPECT_EQ(truncate(GroupValue::lex2(p3, Q("0"), 4), ConvexSubgroup::SecondFactor), GroupValue::lex2(p3, Q("0"), 4));
  EXPECT_TRUE(truncate(GroupValue::lex2(p3, Q("-1"), 0), ConvexSubgroup::SecondFactor).isZero());
  for (const auto& a : sampleValues(h)) EXPECT_EQ(truncate(a, ConvexSubgroup::Full), a);
  EXPECT_THROW(truncate(GroupValue::pexp(p3, Q("1")), ConvexSubgroup::SecondFactor), Error);
}

TEST(OrdGroup, Rendering) {
  EXPECT_EQ(GroupValue::pexp(p3, Q("-6/4")).toString(), "p^{-3/2}");
  EXPECT_EQ(GroupValue::lex2(p3, Q("0"), 1).toString(), "(p^{0}, (1/2)^{1})");
  EXPECT_EQ(GroupValue::mixed(GroupDescriptor::pqrz(p3, Q("1/2")), Q("1"), -2).toString(), "p^{1}*r^{-2}");
  EXPECT_EQ(GroupValue::zero(GroupDescriptor::pq(p3)).toString(), "0");
}

TEST(OrdGroupProperty, TotalOrder) {
  for (const auto& g : kGroups) {
    const auto values = sampleValues(g);
    for (const auto& a : values) {
      for (const auto& b : values) {
        const auto ab = cmp(a, b);
        const auto ba = cmp(b, a);
        ASSERT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
        ASSERT_EQ(ab == std::strong_ordering::equal, a == b);
      }
    }
  }
}

TEST(OrdGroupProperty, TransitivityOnPQGrid) {
  const auto g = GroupDescriptor::pq(p3);
  std::vector<GroupValue> values{GroupValue::zero(g)};
  for (const auto& e : exponentGrid()) values.push_back(GroupValue::pexp(p3, e));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const auto& a = values[rng() % values.size()];
    const auto& b = values[rng() % values.size()];
    const auto& c = values[rng() % values.size()];
    if (a <= b && b <= c) ASSERT_TRUE(cmp(a, c) <= 0);
  }
}

TEST(OrdGroupProperty, MulCommutativeAssociativeMonotone) {
  std::mt19937_64 rng(5);
  for (const auto& g : kGroups) {
    const auto values = sampleValues(g);
    for (int i = 0; i < 500; ++i) {
      const auto& a = values[rng() % values.size()];
      const auto& b = values[rng() % values.size()];
      const auto& c = values[rng() % values.size()];
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      if (a <= b) ASSERT_TRUE(cmp(a * c, b * c) <= 0);
      if (!a.isZero()) ASSERT_EQ(a * inverse(a), GroupValue::one(g));
    }
  }
}

TEST(OrdGroupProperty, MixedAgreesWithFloatingPoint) {
  const auto g = GroupDescriptor::pqrz(Prime(5), Q("2/3"));
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const Rational e1(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 6) + 1);
    const Rational e2(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 6) + 1);
    const long n1 = static_cast<long>(rng() % 41) - 20;
    const long n2 = static_cast<long>(rng() % 41) - 20;
    Rational c1 = e1, c2 = e2;
    c1.canonicalize();
    c2.canonicalize();
    const long double l1 = c1.get_d() * std::log(5.0L) + n1 * std::log(2.0L / 3.0L);
    const long double l2 = c2.get_d() * std::log(5.0L) + n2 * std::log(2.0L / 3.0L);
    const auto exact = cmp(GroupValue::mixed(g, c1, n1), GroupValue::mixed(g, c2, n2));
    if (std::fabs(l1 - l2) < 1e-9L) continue;
    ASSERT_EQ(exact == std::strong_ordering::less, l1 < l2) << c1 << " " << n1 << " / " << c2 << " " << n2;
    ++checked;
  }
  EXPECT_GT(checked, 9000);
}

TEST(OrdGroupProperty, TruncateIsMultiplicativeOnMembers) {
  const auto h = GroupDescriptor::pqxHalfZ(p3);
  const auto values = sampleValues(h);
  for (auto delta : {ConvexSubgroup::Trivial, ConvexSubgroup::SecondFactor, ConvexSubgroup::Full}) {
    for (const auto& a : values) {
      for (const auto& b : values) {
        const bool bothIn = (a.isZero() || contains(delta, a)) && (b.isZero() || contains(delta, b));
        if (!bothIn) continue;
        ASSERT_EQ(truncate(a * b, delta), truncate(a, delta) * truncate(b, delta));
      }
    }
  }
}

TEST(OrdGroupProperty, QuotientProjectionPreservesOrder) {
  const auto h = GroupDescriptor::pqxHalfZ(p3);
  const auto values = sampleValues(h);
  for (const auto& a : values) {
    if (!a.isZero() && a.secondExponent() == 0) {
      EXPECT_EQ(quotientProject(a, ConvexSubgroup::SecondFactor).pExponent(), a.pExponent());
    }
    for (const auto& b : values) {
      if (a <= b) {
        ASSERT_TRUE(cmp(quotientProject(a, ConvexSubgroup::SecondFactor), quotientProject(b, ConvexSubgroup::SecondFactor)) <= 0);
      }
    }
  }
}
