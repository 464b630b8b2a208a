#include <random>

#include <gtest/gtest.h>

#include "nbt/rational.hpp"

using namespace nbt;
using R = ExtendedRational;

TEST(ExtendedRational, Normalises) {
  EXPECT_EQ(R(2, 4), R(1, 2));
  EXPECT_EQ(R(-1, -3), R(1, 3));
  EXPECT_EQ(R(1, -3), R(-1, 3));
  EXPECT_EQ(R(-5, 0), R::infinity());
  EXPECT_EQ(R(-1, 3).denominator(), 3);
  EXPECT_EQ(R(-1, 3).numerator(), -1);
  EXPECT_EQ(R::infinity().numerator(), 1);
}

TEST(ExtendedRational, ParseAndPrint) {
  EXPECT_EQ(R::parse("-7/2"), R(-7, 2));
  EXPECT_EQ(R::parse("3"), R(3));
  EXPECT_EQ(R::parse("inf"), R::infinity());
  EXPECT_EQ(R::parse("1/0"), R::infinity());
  EXPECT_EQ(R(-7, 2).to_string(), "-7/2");
  EXPECT_EQ(R(4).to_string(), "4");
  EXPECT_EQ(R::infinity().to_string(), "inf");
  EXPECT_THROW(R::parse("1/x"), std::invalid_argument);
  EXPECT_THROW(R::parse("0/0"), std::invalid_argument);
  EXPECT_THROW(R::parse(""), std::invalid_argument);
}

TEST(ExtendedRational, Arithmetic) {
  EXPECT_EQ(R(1, 3) + R(1), R(4, 3));
  EXPECT_EQ(R(-4) + R(1, 2), R(-7, 2));
  EXPECT_EQ(R(2, 3).reciprocal(), R(3, 2));
  EXPECT_EQ(R(0).reciprocal(), R::infinity());
  EXPECT_EQ(R::infinity().reciprocal(), R(0));
  EXPECT_THROW(R::infinity() + R::infinity(), std::domain_error);
}

TEST(TwistUpdate, Examples) {
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(twist_update(R(1, k), -k), R::infinity());
  EXPECT_EQ(twist_update(R::infinity(), 3), R(1, 3));
  EXPECT_EQ(twist_update(R(5, 7), 0), R(5, 7));
  EXPECT_EQ(twist_update(R::infinity(), 0), R::infinity());
  // 1/(2 + 1/(3/4)) = 1/(10/3)
  EXPECT_EQ(twist_update(R(3, 4), 2), R(3, 10));
}

TEST(OffsetUpdate, Examples) {
  for (int kappa = 1; kappa <= 6; ++kappa)
    EXPECT_EQ(offset_update(R(-4) + R(1, kappa), 3, 1), R(-1) + R(1, kappa));
  EXPECT_EQ(offset_update(R(1, 3), 1, 1), R(4, 3));
  EXPECT_EQ(offset_update(R(2, 5), 7, 0), R(2, 5));
  EXPECT_EQ(offset_update(R::infinity(), 4, 2), R::infinity());
  EXPECT_EQ(offset_update(R(1), -1, 3), R(-8));
}

TEST(TwistUpdate, InverseTwistRestores) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-10000, 10000), den(0, 10000), tw(-100, 100);
  for (int i = 0; i < 20000; ++i) {
    const int b = num(rng), a = den(rng), t = tw(rng);
    if (a == 0 && b == 0) continue;
    const R r(b, a);
    EXPECT_EQ(twist_update(twist_update(r, t), -t), r) << r << " t=" << t;
  }
}

TEST(OffsetUpdate, AdditiveInTwist) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000), tw(-50, 50), lk(-6, 6);
  for (int i = 0; i < 20000; ++i) {
    const R r(num(rng), den(rng));
    const int t1 = tw(rng), t2 = tw(rng), l = lk(rng);
    EXPECT_EQ(offset_update(offset_update(r, t1, l), t2, l), offset_update(r, t1 + t2, l));
  }
}
