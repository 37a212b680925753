#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lep/intmath.hpp"
#include "oracle.hpp"

using lep::Int;
using lep::Nat;

TEST(Isqrt, Examples) {
  EXPECT_EQ(lep::isqrt(0), 0);
  EXPECT_EQ(lep::isqrt(1), 1);
  EXPECT_EQ(lep::isqrt(729), 27);
  EXPECT_EQ(lep::isqrt(730), 27);
  EXPECT_EQ(lep::isqrt(728), 26);
}

TEST(Isqrt, FloorPropertyUpToMillion) {
  for (long n = 0; n <= 1000000; ++n) {
    const Nat r = lep::isqrt(n);
    ASSERT_TRUE(r * r <= n && n < (r + 1) * (r + 1)) << n;
  }
}

TEST(Isqrt, LargeValues) {
  const Nat big = Nat(1) << 400;
  EXPECT_EQ(lep::isqrt(big), Nat(1) << 200);
  EXPECT_EQ(lep::isqrt(big - 1), (Nat(1) << 200) - 1);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Nat x = rng();
    x = (x << 64) + rng();
    const Nat r = lep::isqrt(x * x + 2 * x);  // (x+1)^2 - 1
    EXPECT_EQ(r, x);
  }
}

TEST(Isqrt, RejectsNegative) { EXPECT_THROW(lep::isqrt(-1), lep::error); }

TEST(PerfectSquare, Examples) {
  EXPECT_EQ(*lep::is_perfect_square(225), 15);
  EXPECT_FALSE(lep::is_perfect_square(-15));
  EXPECT_EQ(*lep::is_perfect_square(Int(2025) - 1296), 27);
  EXPECT_EQ(*lep::is_perfect_square(0), 0);
  EXPECT_FALSE(lep::is_perfect_square(1617));
}

TEST(PerfectSquare, AgreesWithIsqrt) {
  for (long n = -50; n <= 20000; ++n) {
    const bool hit = lep::is_perfect_square(n).has_value();
    const bool expect = n >= 0 && oracle::square_root(n).has_value();
    ASSERT_EQ(hit, expect) << n;
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(lep::gcd(3, 6), 3);
  EXPECT_EQ(lep::gcd(4, 20), 4);
  EXPECT_EQ(lep::gcd(85, 1525), 5);
  EXPECT_EQ(lep::gcd(0, 0), 0);
  EXPECT_EQ(lep::gcd(0, 7), 7);
}

TEST(TwoSquares, TwentyFive) {
  const auto reps = lep::two_square_representations(25);
  ASSERT_EQ(reps.size(), 12u);
  for (auto [p, q] : {std::pair{3, 4}, {4, 3}, {5, 0}, {0, 5}, {-3, 4}, {0, -5}})
    EXPECT_NE(std::find(reps.begin(), reps.end(), std::pair<Int, Int>{p, q}), reps.end());
  EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
}

TEST(TwoSquares, EdgeCases) {
  EXPECT_TRUE(lep::two_square_representations(3).empty());
  const auto zero = lep::two_square_representations(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], (std::pair<Int, Int>{0, 0}));
}

TEST(TwoSquares, MatchesDoubleLoop) {
  for (long n = 0; n <= 2000; ++n) {
    const auto got = lep::two_square_representations(n);
    const auto want = oracle::two_squares(n);  // already lexicographic
    ASSERT_EQ(got.size(), want.size()) << n;
    for (std::size_t i = 0; i < got.size(); ++i) {
      ASSERT_EQ(got[i].first, want[i].first) << n;
      ASSERT_EQ(got[i].second, want[i].second) << n;
    }
  }
}

TEST(ParseInt, AcceptsAndRejects) {
  EXPECT_EQ(*lep::parse_int("17838985"), 17838985);
  EXPECT_EQ(*lep::parse_int("-12"), -12);
  EXPECT_FALSE(lep::parse_int(""));
  EXPECT_FALSE(lep::parse_int("3x"));
  EXPECT_FALSE(lep::parse_int("-"));
}
