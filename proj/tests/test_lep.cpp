#include <gtest/gtest.h>

#include "lep/forest.hpp"
#include "lep/lep.hpp"
#include "oracle.hpp"

using lep::Nat;
using lep::Rational;

namespace {

lep::LepPair must(long a, long b) {
  auto p = lep::lep_check(a, b);
  if (!p) throw std::runtime_error("not a LEP");
  return *p;
}

}  // namespace

TEST(EquableExists, Examples) {
  EXPECT_FALSE(lep::equable_parallelogram_exists(3, 5));
  EXPECT_TRUE(lep::equable_parallelogram_exists(3, 6));
  EXPECT_FALSE(lep::equable_parallelogram_exists(2, 1000));
  EXPECT_FALSE(lep::equable_parallelogram_exists(1, 1));
  EXPECT_TRUE(lep::equable_parallelogram_exists(4, 4));
}

TEST(EquableExists, RejectsUnordered) {
  try {
    lep::equable_parallelogram_exists(6, 3);
    FAIL();
  } catch (const lep::error& e) {
    EXPECT_EQ(e.code(), lep::errc::unordered_sides);
  }
}

TEST(EquableExists, MatchesFactoredForm) {
  for (long a = 1; a <= 60; ++a)
    for (long b = a; b <= 60; ++b)
      ASSERT_EQ(lep::equable_parallelogram_exists(a, b), (a - 2) * (b - 2) >= 4) << a << "," << b;
}

TEST(LepCheck, Examples) {
  auto p = lep::lep_check(3, 6);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->disc_root(), 0);
  auto r = lep::lep_check(5, 5);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->disc_root(), 15);
  EXPECT_FALSE(lep::lep_check(7, 7));
  EXPECT_FALSE(lep::lep_check(0, 6));
}

TEST(LepCheck, ReordersInput) {
  auto p = lep::lep_check(15, 3);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->a(), 3);
  EXPECT_EQ(p->b(), 15);
  EXPECT_EQ(p->gcd_class(), lep::GcdClass::G3);
  EXPECT_EQ(p->area(), 36);
}

TEST(LepCheck, BruteForceEquivalenceTo500) {
  for (long a = 1; a <= 500; ++a)
    for (long b = a; b <= 500; ++b) {
      const bool hit = lep::lep_check(a, b).has_value();
      ASSERT_EQ(hit, oracle::is_lep(a, b)) << a << "," << b;
      if (hit) {
        const long g = std::gcd(a, b);
        ASSERT_TRUE(g == 3 || g == 4 || g == 5) << a << "," << b;
      }
    }
}

TEST(Decompose, Examples) {
  auto d = lep::decompose(must(3, 6));
  EXPECT_EQ(d.k, 9);
  EXPECT_EQ(d.m, 1);
  EXPECT_EQ(d.n, 1);
  EXPECT_EQ(d.q, 1);
  EXPECT_EQ(d.r, 2);

  d = lep::decompose(must(5, 10));
  EXPECT_EQ(d.k, 5);
  EXPECT_EQ(d.m, 1);
  EXPECT_EQ(d.n, 3);
  EXPECT_EQ(d.q, 1);
  EXPECT_EQ(d.r, 2);

  d = lep::decompose(must(4, 20));
  EXPECT_EQ(d.k, 8);
  EXPECT_EQ(d.m, 1);
  EXPECT_EQ(d.n, 3);
  EXPECT_EQ(d.q, 1);
  EXPECT_EQ(d.r, 5);
}

TEST(Decompose, InvariantsOverAllSmallLeps) {
  for (const auto& p : lep::enumerate_all(20000)) {
    const auto d = lep::decompose(p);
    const Nat ab = p.a() * p.b();
    ASSERT_EQ(ab, d.k * (d.m * d.m + d.n * d.n));
    ASSERT_EQ(p.sum(), d.k * d.m * d.n);
    ASSERT_TRUE(d.m <= d.n);
    ASSERT_EQ(lep::gcd(d.m, d.n), 1);
    switch (d.k) {
      case 9:
        ASSERT_EQ(d.q + d.r, 3 * d.m * d.n);
        ASSERT_EQ(d.q * d.r, d.m * d.m + d.n * d.n);
        break;
      case 8:
        ASSERT_EQ(d.q + d.r, 2 * d.m * d.n);
        ASSERT_EQ(2 * d.q * d.r, d.m * d.m + d.n * d.n);
        break;
      case 5:
        ASSERT_EQ(d.q + d.r, d.m * d.n);
        ASSERT_EQ(5 * d.q * d.r, d.m * d.m + d.n * d.n);
        break;
      default:
        FAIL() << "unexpected k " << d.k;
    }
  }
}

TEST(Geometry, Examples) {
  auto g = lep::geometry(must(5, 5));
  EXPECT_EQ(g.d_long_sq, 80);
  EXPECT_EQ(g.d_short_sq, 20);
  EXPECT_EQ(g.area, 20);

  g = lep::geometry(must(3, 6));
  EXPECT_EQ(g.h_long, 6);
  EXPECT_EQ(g.h_short, 3);

  g = lep::geometry(must(4, 4));
  EXPECT_EQ(g.d_long_sq, 32);
  EXPECT_EQ(g.d_short_sq, 32);
  EXPECT_EQ(g.eta_short_sq, 8);
}

TEST(Geometry, RhombusDiagonalsMatchDrawnVertices) {
  // (0,0),(5,0),(8,4),(3,4)
  const auto g = lep::geometry(must(5, 5));
  EXPECT_EQ(g.d_long_sq, 8 * 8 + 4 * 4);
  EXPECT_EQ(g.d_short_sq, 2 * 2 + 4 * 4);
}

TEST(Geometry, PropertySuite) {
  for (const auto& p : lep::enumerate_all(10000)) {
    const auto g = lep::geometry(p);
    const Nat s = p.sum();
    const Nat diff = p.b() - p.a();
    ASSERT_EQ(g.d_long_sq * g.d_short_sq, s * s * (16 + diff * diff));
    ASSERT_EQ((g.h_short - 2) * (g.h_long - 2), Rational(4));
    ASSERT_TRUE(g.eta_long_sq > 4 && g.eta_long_sq <= 20);
    ASSERT_TRUE(g.eta_short_sq > 4 && g.eta_short_sq <= 8);
    ASSERT_FALSE(lep::is_perfect_square(g.d_long_sq)) << p.a() << "," << p.b();
    ASSERT_FALSE(lep::is_perfect_square(g.d_short_sq)) << p.a() << "," << p.b();
  }
}

TEST(Divisibility, RemarkFacts) {
  for (const auto& p : lep::enumerate_all(10000)) {
    const long a = p.a().convert_to<long>(), b = p.b().convert_to<long>();
    switch (p.gcd_class()) {
      case lep::GcdClass::G3:
        ASSERT_EQ((a + b) % 9, 0);
        ASSERT_NE(a % 9, 0);
        ASSERT_NE(b % 9, 0);
        ASSERT_FALSE(oracle::has_prime_divisor_3_mod_4(a / 3));
        ASSERT_FALSE(oracle::has_prime_divisor_3_mod_4(b / 3));
        break;
      case lep::GcdClass::G4:
        ASSERT_EQ((a + b) % 8, 0);
        ASSERT_NE(a % 8, 0);
        ASSERT_NE(b % 8, 0);
        [[fallthrough]];
      case lep::GcdClass::G5:
        ASSERT_FALSE(oracle::has_prime_divisor_3_mod_4(a)) << a;
        ASSERT_FALSE(oracle::has_prime_divisor_3_mod_4(b)) << b;
        break;
    }
  }
  // 5^2 can divide a side in the gcd-5 class.
  auto p = must(85, 1525);
  EXPECT_EQ(p.b() % 25, 0);
}

TEST(Pythagorean, Examples) {
  EXPECT_FALSE(lep::is_pythagorean(must(25, 65)));
  EXPECT_TRUE(lep::is_pythagorean(must(3, 87)));
  EXPECT_TRUE(lep::is_pythagorean(must(10, 25)));
}

TEST(ClassifySpecial, Examples) {
  EXPECT_EQ(lep::classify_special(must(4, 4)), lep::Special::Rhombus4);
  EXPECT_EQ(lep::classify_special(must(5, 5)), lep::Special::Rhombus5);
  EXPECT_EQ(lep::classify_special(must(3, 6)), lep::Special::DoubleRatio3);
  EXPECT_EQ(lep::classify_special(must(5, 10)), lep::Special::DoubleRatio5);
  EXPECT_EQ(lep::classify_special(must(3, 15)), lep::Special::Generic);
}

TEST(Triangles, AppendixList) {
  const auto t = lep::enumerate_equable_triangles();
  ASSERT_EQ(t.size(), 5u);
  const std::vector<std::array<int, 3>> want{{5, 12, 13}, {6, 8, 10}, {6, 25, 29}, {7, 15, 20}, {9, 10, 17}};
  EXPECT_EQ(t, want);
}

TEST(Triangles, MatchesHeronSearch) {
  const auto brute = oracle::equable_triangles(100);
  const auto got = lep::enumerate_equable_triangles();
  ASSERT_EQ(brute.size(), got.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(brute[i][j], got[i][j]);
}
