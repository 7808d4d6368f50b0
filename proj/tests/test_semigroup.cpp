#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace mcres;

TEST(Semigroup, Membership) {
  SubSemigroup s({5, 7, 9});
  EXPECT_FALSE(contains(s, 11));
  EXPECT_TRUE(contains(s, 22));
  EXPECT_TRUE(contains(s, 0));
  EXPECT_TRUE(contains(SubSemigroup({4, 6}), 10));
}

TEST(Semigroup, ClosedUnderGenerators) {
  SubSemigroup s({5, 7, 9, 11});
  for (std::int64_t x = 0; x <= 35; ++x)
    if (s.contains(x))
      for (auto g : s.generators()) EXPECT_TRUE(s.contains(x + g)) << x << "+" << g;
}

namespace {
std::vector<std::int64_t> sorted_apery(const SubSemigroup& s, std::int64_t a) {
  auto v = apery_set(s, a);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i] % a, static_cast<std::int64_t>(i));
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST(Semigroup, Apery) {
  EXPECT_EQ(sorted_apery(SubSemigroup({3, 4, 5}), 3), (std::vector<std::int64_t>{0, 4, 5}));
  EXPECT_EQ(sorted_apery(SubSemigroup({1}), 1), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(sorted_apery(SubSemigroup({5, 7, 9}), 5), (std::vector<std::int64_t>{0, 7, 9, 16, 18}));
}

TEST(Semigroup, Frobenius) {
  EXPECT_EQ(frobenius(SubSemigroup({3, 4, 5})), 2);
  EXPECT_EQ(frobenius(SubSemigroup({5, 7, 9, 11})), 13);
  EXPECT_EQ(frobenius(SubSemigroup({1})), -1);
}

TEST(Semigroup, FrobeniusAgainstBruteForce) {
  for (std::int64_t a = 2; a <= 9; ++a)
    for (std::int64_t b = a + 1; b <= 13; ++b) {
      if (std::gcd(a, b) != 1) continue;
      EXPECT_EQ(frobenius(SubSemigroup({a, b})), a * b - a - b) << a << "," << b;
    }
}

TEST(Semigroup, MinMultiple) {
  EXPECT_EQ(min_multiple_in(11, SubSemigroup({5, 7, 9})), 2);
  EXPECT_EQ(min_multiple_in(5, SubSemigroup({4, 6, 8})), 2);
  EXPECT_EQ(min_multiple_in(14, SubSemigroup({5, 7, 9})), 1);
}

TEST(Semigroup, Validate) {
  auto s = validate_sequence(5, 7, 9, 11);
  EXPECT_EQ(s.d(), 2);
  try {
    validate_sequence(4, 6, 8, 5);
    FAIL() << "expected NotMinimal";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMinimal);
    EXPECT_NE(e.detail().find("m2"), std::string::npos);
  }
  try {
    validate_sequence(2, 4, 6, 3);
    FAIL() << "expected NotMinimal";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMinimal);
    EXPECT_NE(e.detail().find("m1"), std::string::npos);
  }
  try {
    validate_sequence(4, 6, 8, 10);
    FAIL() << "expected GcdNotOne";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GcdNotOne);
  }
  try {
    validate_sequence(5, 7, 10, 11);
    FAIL() << "expected NotArithmetic";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotArithmetic);
  }
}

TEST(Semigroup, GammaSeries) {
  auto s = validate_sequence(5, 7, 9, 11);
  EXPECT_EQ(gamma_series_truncation(s, 6), (std::vector<std::int64_t>{1, 0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(gamma_series_truncation(s, 0), (std::vector<std::int64_t>{1}));
  auto g = gamma_series_truncation(s, 14);
  std::vector<std::int64_t> ones;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i]) ones.push_back(static_cast<std::int64_t>(i));
  EXPECT_EQ(ones, (std::vector<std::int64_t>{0, 5, 7, 9, 10, 11, 12, 14}));
}
