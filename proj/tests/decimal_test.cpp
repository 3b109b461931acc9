#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "intorbit/decimal.hpp"
#include "intorbit/errors.hpp"
#include "oracle.hpp"

namespace {

using intorbit::EnclosureMode;
using intorbit::enclose_decimal;
using oracle::Rational;

// Nearest-double oracle: fl(v) is at least as close as both neighbours.
void expect_nearest(const std::string& text, double got) {
  const Rational v = intorbit::parse_decimal(text);
  const Rational err = abs(Rational(got) - v);
  EXPECT_LE(err, abs(Rational(std::nextafter(got, -INFINITY)) - v)) << text;
  EXPECT_LE(err, abs(Rational(std::nextafter(got, INFINITY)) - v)) << text;
}

TEST(Decimal, ParsesExactValue) {
  EXPECT_EQ(intorbit::parse_decimal("0.6"), Rational(3, 5));
  EXPECT_EQ(intorbit::parse_decimal("-3.47"), Rational(-347, 100));
  EXPECT_EQ(intorbit::parse_decimal("1.5e2"), Rational(150));
  EXPECT_EQ(intorbit::parse_decimal("+25E-3"), Rational(1, 40));
  EXPECT_EQ(intorbit::parse_decimal(".5"), Rational(1, 2));
  EXPECT_EQ(intorbit::parse_decimal("7."), Rational(7));
}

TEST(Decimal, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1.2.3", "0.6x", "1e", "e5", "--1", " 1", "1e99999", "."}) {
    EXPECT_THROW(intorbit::parse_decimal(bad), intorbit::DecimalError) << bad;
    EXPECT_THROW(enclose_decimal(bad, EnclosureMode::Tight), intorbit::DecimalError) << bad;
  }
  EXPECT_THROW(enclose_decimal("1e400", EnclosureMode::Thin), intorbit::DecimalError);
}

TEST(Decimal, PairEnclosureOfPointSix) {
  const auto x = enclose_decimal("0.6", EnclosureMode::NeighborPair);
  EXPECT_TRUE(oracle::encloses(x, Rational(3, 5)));
  EXPECT_EQ(x.lo(), std::nextafter(0.6, 0.0));
  EXPECT_EQ(x.hi(), std::nextafter(0.6, 1.0));
  EXPECT_NEAR(intorbit::width(x), 2.22e-16, 0.005e-16);
}

TEST(Decimal, TightEnclosureOfPointSix) {
  const auto x = enclose_decimal("0.6", EnclosureMode::Tight);
  EXPECT_TRUE(oracle::encloses(x, Rational(3, 5)));
  EXPECT_EQ(x.lo(), oracle::round_down(Rational(3, 5)));
  EXPECT_EQ(x.hi(), oracle::round_up(Rational(3, 5)));
  // fl(0.6) lies below 3/5.
  EXPECT_EQ(x.lo(), 0.6);
}

TEST(Decimal, ExactlyRepresentableIsPoint) {
  for (auto mode : {EnclosureMode::Thin, EnclosureMode::NeighborPair, EnclosureMode::Tight}) {
    const auto x = enclose_decimal("0.5", mode);
    EXPECT_EQ(x.lo(), 0.5);
    EXPECT_EQ(x.hi(), 0.5);
  }
}

TEST(Decimal, ThinIsCorrectlyRounded) {
  const auto x = enclose_decimal("3.3", EnclosureMode::Thin);
  EXPECT_TRUE(x.is_point());
  expect_nearest("3.3", x.lo());
  EXPECT_EQ(x.lo(), 3.3);
}

TEST(Decimal, RandomDecimalsAreEnclosedAndNearestIsCorrect) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> mant(0, 999999999999999999LL);
  std::uniform_int_distribution<int> exp(-30, 30);
  for (int i = 0; i < 3000; ++i) {
    const std::string text = std::to_string(mant(rng)) + "e" + std::to_string(exp(rng));
    const Rational v = intorbit::parse_decimal(text);
    const auto thin = enclose_decimal(text, EnclosureMode::Thin);
    expect_nearest(text, thin.lo());
    const auto tight = enclose_decimal(text, EnclosureMode::Tight);
    ASSERT_TRUE(oracle::encloses(tight, v)) << text;
    ASSERT_EQ(tight.lo(), oracle::round_down(v)) << text;
    ASSERT_EQ(tight.hi(), oracle::round_up(v)) << text;
    const auto pair = enclose_decimal(text, EnclosureMode::NeighborPair);
    ASSERT_TRUE(oracle::encloses(pair, v)) << text;
    ASSERT_TRUE(intorbit::contains(pair, tight));
  }
}

TEST(Decimal, ModeNames) {
  EXPECT_EQ(intorbit::parse_enclosure_mode("pair"), EnclosureMode::NeighborPair);
  EXPECT_EQ(intorbit::to_string(EnclosureMode::Tight), "tight");
  EXPECT_THROW(intorbit::parse_enclosure_mode("wide"), std::invalid_argument);
}

}  // namespace
