#include <gtest/gtest.h>

#include <set>

#include "chromfold/snapshot_oracle.hpp"

using namespace chromfold;

namespace {

OrderedPartition partition(std::initializer_list<std::initializer_list<int>> blocks) {
  OrderedPartition p;
  for (auto b : blocks) p.blocks.push_back(ColorSet::of(b));
  return p;
}

}  // namespace

TEST(Fubini, KnownValues) {
  const std::vector<std::uint64_t> expected{1, 1, 3, 13, 75, 541, 4683};
  for (int k = 0; k < static_cast<int>(expected.size()); ++k) EXPECT_EQ(fubini(k), expected[k]) << k;
}

TEST(Executions, ExplicitListings) {
  auto zero = enumerate_executions(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], partition({{0}}));

  auto one = enumerate_executions(1);
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0], partition({{0}, {1}}));
  EXPECT_EQ(one[1], partition({{0, 1}}));
  EXPECT_EQ(one[2], partition({{1}, {0}}));
}

TEST(Executions, CountsAndValidity) {
  for (int n = 0; n <= 4; ++n) {
    auto all = enumerate_executions(n);
    EXPECT_EQ(all.size(), fubini(n + 1));
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& e : all) {
      ColorSet seen;
      std::vector<std::uint32_t> key;
      for (ColorSet b : e.blocks) {
        EXPECT_FALSE(b.empty());
        EXPECT_TRUE((seen & b).empty());
        seen = seen | b;
        key.push_back(b.bits());
      }
      EXPECT_EQ(seen, ColorSet::full(n));
      distinct.insert(key);
    }
    EXPECT_EQ(distinct.size(), all.size());
  }
}

TEST(TopCell, ViewRule) {
  auto full = top_cell_of(partition({{0, 1}}));
  EXPECT_EQ(full, (std::vector<ChromaticVertex>{{0, ColorSet::of({0, 1})}, {1, ColorSet::of({0, 1})}}));
  auto seq = top_cell_of(partition({{0}, {1}}));
  EXPECT_EQ(seq, (std::vector<ChromaticVertex>{{0, ColorSet::of({0})}, {1, ColorSet::of({0, 1})}}));
  auto three = top_cell_of(partition({{1}, {0}, {2}}));
  EXPECT_EQ(three, (std::vector<ChromaticVertex>{
                       {0, ColorSet::of({0, 1})}, {1, ColorSet::of({1})}, {2, ColorSet::of({0, 1, 2})}}));
}

TEST(CrossValidate, MatchesSubdivision) {
  const std::vector<std::size_t> counts{1, 3, 13, 75, 541};
  for (int n = 0; n <= 4; ++n) {
    auto report = cross_validate(n);
    EXPECT_TRUE(report.match()) << "n=" << n;
    EXPECT_EQ(report.executions, counts[static_cast<std::size_t>(n)]);
    EXPECT_EQ(report.subdivision_cells, counts[static_cast<std::size_t>(n)]);
  }
}

TEST(Executions, HeredityMirror) {
  // Executions of {0..n} in which color j runs alone in the last block,
  // restricted to the other colors, biject with executions for n - 1 colors.
  for (int n = 1; n <= 3; ++n)
    for (int j = 0; j <= n; ++j) {
      std::set<std::vector<std::uint32_t>> restricted;
      for (const auto& e : enumerate_executions(n)) {
        if (e.blocks.back() != ColorSet::singleton(j)) continue;
        std::vector<std::uint32_t> key;
        for (std::size_t b = 0; b + 1 < e.blocks.size(); ++b) key.push_back(e.blocks[b].drop_and_renumber(j).bits());
        restricted.insert(key);
      }
      EXPECT_EQ(restricted.size(), fubini(n));
    }
}
