#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ptk/bitset.hpp"

using ptk::Bitset;

TEST(Bitset, SetTestCountAcrossWordBoundary) {
  Bitset b(130);
  for (std::size_t i : {0u, 63u, 64u, 129u}) b.set(i);
  EXPECT_EQ(b.count(), 4u);
  EXPECT_TRUE(b.test(64));
  EXPECT_FALSE(b.test(65));
  b.reset(64);
  EXPECT_EQ(b.indices(), (std::vector<std::size_t>{0, 63, 129}));
  b.set_all();
  EXPECT_EQ(b.count(), 130u);
}

TEST(Bitset, AlgebraMatchesStdSet) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    Bitset a(n), b(n);
    std::set<std::size_t> sa, sb;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 3 == 0) a.set(i), sa.insert(i);
      if (rng() % 3 == 0) b.set(i), sb.insert(i);
    }
    std::set<std::size_t> u = sa, in, diff;
    u.insert(sb.begin(), sb.end());
    for (auto x : sa) (sb.count(x) ? in : diff).insert(x);
    auto to_set = [](const Bitset& s) {
      auto v = s.indices();
      return std::set<std::size_t>(v.begin(), v.end());
    };
    EXPECT_EQ(to_set(a | b), u);
    EXPECT_EQ(to_set(a & b), in);
    Bitset d = a;
    d.subtract(b);
    EXPECT_EQ(to_set(d), diff);
    EXPECT_EQ(a.is_subset_of(b), std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
    EXPECT_EQ(a.intersects(b), !in.empty());
  }
}

TEST(Bitset, OrderingIsCountThenLowestDifference) {
  Bitset a(8), b(8), c(8);
  a.set(5);
  b.set(1), b.set(2);
  c.set(1), c.set(3);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_EQ(ptk::BitsetHash{}(b), ptk::BitsetHash{}(Bitset(b)));
}
