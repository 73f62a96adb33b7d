#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ptk/setpart.hpp"

using namespace ptk;
using setpart::SetPartition;
using setpart::parse;

namespace {

oracle::Blocks to_blocks(const SetPartition& x) {
  oracle::Blocks b;
  for (const auto& bl : x.blocks()) b.insert(std::set<int>(bl.begin(), bl.end()));
  return b;
}

} // namespace

TEST(SetPartition, EnumerationCountsMatchAssignmentScan) {
  EXPECT_EQ(setpart::enumerate_partitions(1).size(), 1u);
  EXPECT_EQ(setpart::enumerate_partitions(3).size(), 5u);
  EXPECT_EQ(setpart::enumerate_partitions(4).size(), 15u);
  for (int n = 1; n <= 7; ++n) {
    auto mine = setpart::enumerate_partitions(n);
    std::set<oracle::Blocks> got;
    for (const auto& x : mine) got.insert(to_blocks(x));
    EXPECT_EQ(got, oracle::all_set_partitions(n)) << "n=" << n;
    EXPECT_EQ(mine.size(), setpart::bell_number(n));
    EXPECT_TRUE(std::is_sorted(mine.begin(), mine.end()));
  }
}

TEST(SetPartition, EnumerationCap) {
  EXPECT_THROW(setpart::enumerate_partitions(13), SizeCapError);
  EXPECT_THROW(setpart::enumerate_partitions(0), Error);
}

TEST(SetPartition, DisplayAndParse) {
  EXPECT_EQ(setpart::to_string(parse("12|3")), "12|3");
  EXPECT_EQ(setpart::to_string(parse("3|21")), "12|3");
  EXPECT_EQ(setpart::to_string(setpart::bottom(3)), "1|2|3");
  EXPECT_EQ(setpart::to_string(setpart::top(3)), "123");
  EXPECT_EQ(setpart::to_string(setpart::top(10)), "1,2,3,4,5,6,7,8,9,10");
  EXPECT_EQ(setpart::to_string(parse("1,10|2,3,4,5,6,7,8,9")), "1,10|2,3,4,5,6,7,8,9");
  EXPECT_THROW(parse("12|2"), ValidationError);
  EXPECT_THROW(parse("12|4", 3), ValidationError);
  for (int n = 1; n <= 5; ++n)
    for (const auto& x : setpart::enumerate_partitions(n)) EXPECT_EQ(parse(setpart::to_string(x), n), x);
}

TEST(SetPartition, RefinementExamples) {
  EXPECT_TRUE(setpart::refines(parse("1|2|3"), parse("12|3")));
  EXPECT_FALSE(setpart::refines(parse("12|3"), parse("13|2")));
  EXPECT_TRUE(setpart::refines(parse("12|3"), parse("123")));
  EXPECT_THROW(setpart::refines(parse("12|3"), parse("1234")), DimensionError);
}

TEST(SetPartition, RefinementMatchesBlockInclusionOracle) {
  for (int n = 1; n <= 6; ++n) {
    auto all = setpart::enumerate_partitions(n);
    for (const auto& v : all)
      for (const auto& x : all) {
        ASSERT_EQ(setpart::refines(v, x), oracle::refines(to_blocks(v), to_blocks(x)))
            << setpart::to_string(v) << " " << setpart::to_string(x);
      }
  }
}

TEST(SetPartition, RefinementIsPartialOrderWithBounds) {
  for (int n = 1; n <= 6; ++n) {
    auto all = setpart::enumerate_partitions(n);
    const auto bot = setpart::bottom(n), top = setpart::top(n);
    for (const auto& a : all) {
      EXPECT_TRUE(setpart::refines(a, a));
      EXPECT_TRUE(setpart::refines(bot, a));
      EXPECT_TRUE(setpart::refines(a, top));
      for (const auto& b : all) {
        const bool ab = setpart::refines(a, b);
        if (ab && setpart::refines(b, a)) { EXPECT_EQ(a, b); }
        if (ab) { EXPECT_GE(a.block_count(), b.block_count()); }
        if (!ab || n > 5) continue;
        for (const auto& c : all)
          if (setpart::refines(b, c)) { EXPECT_TRUE(setpart::refines(a, c)); }
      }
    }
  }
}

TEST(SetPartition, JoinMeetExamples) {
  EXPECT_EQ(setpart::join(parse("12|3"), parse("13|2")), parse("123"));
  EXPECT_EQ(setpart::meet(parse("12|3"), parse("13|2")), parse("1|2|3"));
  for (const auto& x : setpart::enumerate_partitions(4)) EXPECT_EQ(setpart::join(x, setpart::bottom(4)), x);
}

TEST(SetPartition, JoinMeetAreLeastUpperAndGreatestLowerBounds) {
  for (int n = 1; n <= 5; ++n) {
    auto all = setpart::enumerate_partitions(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto j = setpart::join(a, b), m = setpart::meet(a, b);
        EXPECT_EQ(j, setpart::join(b, a));
        EXPECT_EQ(m, setpart::meet(b, a));
        EXPECT_EQ(setpart::join(a, a), a);
        EXPECT_EQ(setpart::meet(a, a), a);
        EXPECT_EQ(setpart::join(a, setpart::meet(a, b)), a);
        EXPECT_EQ(setpart::meet(a, setpart::join(a, b)), a);
        // brute force: the join is the least common upper bound, the meet the greatest lower bound
        for (const auto& c : all) {
          if (setpart::refines(a, c) && setpart::refines(b, c)) { EXPECT_TRUE(setpart::refines(j, c)); }
          if (setpart::refines(c, a) && setpart::refines(c, b)) { EXPECT_TRUE(setpart::refines(c, m)); }
        }
      }
  }
}

TEST(SetPartition, Permutations) {
  const std::vector<int> swap02{2, 1, 0};
  EXPECT_EQ(setpart::apply_permutation(swap02, parse("12|3")), parse("1|23"));
  EXPECT_EQ(setpart::apply_permutation({0, 1, 2}, parse("13|2")), parse("13|2"));
  EXPECT_EQ(setpart::apply_permutation({3, 1, 0, 2}, setpart::top(4)), setpart::top(4));
  EXPECT_THROW(setpart::apply_permutation({0, 0, 1}, parse("12|3")), ValidationError);
  EXPECT_THROW(setpart::apply_permutation({0, 1}, parse("12|3")), Error);
}

TEST(SetPartition, TypeIsPermutationInvariant) {
  std::mt19937 rng(11);
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (const auto& x : setpart::enumerate_partitions(n))
      for (int t = 0; t < 3; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(setpart::type_of(setpart::apply_permutation(perm, x)), setpart::type_of(x));
      }
  }
}

TEST(SetPartition, EqualTypesAreRelatedByAPermutation) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    auto all = setpart::enumerate_partitions(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (setpart::type_of(a) != setpart::type_of(b)) continue;
        std::iota(perm.begin(), perm.end(), 0);
        bool found = false;
        do found = setpart::apply_permutation(perm, a) == b;
        while (!found && std::next_permutation(perm.begin(), perm.end()));
        EXPECT_TRUE(found) << setpart::to_string(a) << " " << setpart::to_string(b);
      }
  }
}

TEST(SetPartition, TypesAndPreimages) {
  EXPECT_EQ(setpart::type_of(parse("1|24|3")), intpart::IntPartition({2, 1, 1}));
  EXPECT_EQ(setpart::type_of(setpart::top(5)), intpart::IntPartition({5}));
  EXPECT_EQ(setpart::type_of(setpart::bottom(3)), intpart::IntPartition({1, 1, 1}));
  EXPECT_EQ(setpart::preimage_of_type(intpart::IntPartition({3})), std::vector<SetPartition>{parse("123")});
  auto pre21 = setpart::preimage_of_type(intpart::IntPartition({2, 1}));
  EXPECT_EQ(pre21, (std::vector<SetPartition>{parse("12|3"), parse("13|2"), parse("1|23")}));
  EXPECT_EQ(setpart::preimage_of_type(intpart::IntPartition({2, 2})).size(), 3u);
  // preimages of all types partition the enumeration
  for (int n = 1; n <= 7; ++n) {
    std::size_t total = 0;
    for (const auto& t : intpart::enumerate_intpartitions(n)) {
      auto pre = setpart::preimage_of_type(t);
      total += pre.size();
      for (const auto& x : pre) EXPECT_EQ(setpart::type_of(x), t);
      EXPECT_TRUE(std::is_sorted(pre.begin(), pre.end()));
    }
    EXPECT_EQ(total, setpart::bell_number(n));
  }
}
