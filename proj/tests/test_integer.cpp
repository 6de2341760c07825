#include <gtest/gtest.h>

#include <climits>
#include <random>

#include "latk/error.hpp"
#include "latk/integer.hpp"

using latk::Integer;
using latk::Rational;

namespace {

std::string str128(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace

TEST(Integer, PromotesOnOverflowAndDemotesBack) {
  Integer big = Integer(INT64_MAX) + Integer(1);
  EXPECT_FALSE(big.fits_int64());
  EXPECT_EQ(big.str(), "9223372036854775808");
  Integer back = big - Integer(1);
  EXPECT_TRUE(back.fits_int64());
  EXPECT_EQ(back, Integer(INT64_MAX));
  EXPECT_EQ((-Integer(INT64_MIN)).str(), "9223372036854775808");
  EXPECT_EQ((Integer(INT64_MIN) / Integer(-1)).str(), "9223372036854775808");
}

TEST(Integer, RandomArithmeticMatchesWideReference) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> any(INT64_MIN, INT64_MAX);
  std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
  for (int i = 0; i < 5000; ++i) {
    std::int64_t a = (i % 3 == 0) ? small(rng) : any(rng);
    std::int64_t b = (i % 5 == 0) ? small(rng) : any(rng);
    __int128 wa = a, wb = b;
    EXPECT_EQ((Integer(a) + Integer(b)).str(), str128(wa + wb));
    EXPECT_EQ((Integer(a) - Integer(b)).str(), str128(wa - wb));
    EXPECT_EQ((Integer(a) * Integer(b)).str(), str128(wa * wb));
    if (b != 0) {
      __int128 q = wa / wb, r = wa % wb;
      EXPECT_EQ((Integer(a) / Integer(b)).str(), str128(q));
      EXPECT_EQ((Integer(a) % Integer(b)).str(), str128(r));
      if (r != 0 && ((r < 0) != (wb < 0))) --q;
      EXPECT_EQ(latk::floor_div(Integer(a), Integer(b)).str(), str128(q));
    }
  }
}

TEST(Integer, ProductChainsStayExact) {
  Integer f = 1;
  for (int k = 1; k <= 30; ++k) f *= Integer(k);
  EXPECT_EQ(f.str(), "265252859812191058636308480000000");
  for (int k = 30; k >= 1; --k) f /= Integer(k);
  EXPECT_EQ(f, Integer(1));
  EXPECT_TRUE(f.fits_int64());
}

TEST(Integer, ParseAndCompare) {
  EXPECT_EQ(Integer::parse("-123456789012345678901234567890").str(), "-123456789012345678901234567890");
  EXPECT_EQ(Integer::parse("+17"), Integer(17));
  EXPECT_THROW(Integer::parse("12a"), latk::Error);
  EXPECT_THROW(Integer::parse(""), latk::Error);
  EXPECT_LT(Integer::parse("-100000000000000000000"), Integer(INT64_MIN));
  EXPECT_GT(Integer::parse("100000000000000000000"), Integer(INT64_MAX));
}

TEST(Integer, GcdLcm) {
  EXPECT_EQ(latk::gcd(Integer(-12), Integer(18)), Integer(6));
  EXPECT_EQ(latk::gcd(Integer(0), Integer(-5)), Integer(5));
  EXPECT_EQ(latk::lcm(Integer(4), Integer(6)), Integer(12));
  Integer big = Integer::parse("340282366920938463463374607431768211456");
  EXPECT_EQ(latk::gcd(big, Integer(1024)), Integer(1024));
}

TEST(Rational, NormalizesSignAndContent) {
  Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), Integer(-3));
  EXPECT_EQ(r.denominator(), Integer(2));
  EXPECT_EQ(r.floor(), Integer(-2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(Integer(5), Integer(5)).str(), "1");
}
