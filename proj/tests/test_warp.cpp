#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "rollercoaster/catalog.hpp"
#include "rollercoaster/warp.hpp"
#include "test_support.hpp"

using namespace rollercoaster;

namespace {

GaussCode code_of(const char* dt) { return dt_to_gauss(parse_dt(dt)); }

std::vector<GaussCode> catalog_codes() {
  std::vector<GaussCode> out;
  for (const auto& e : load_catalog(test_support::data_path("catalog.csv"))) out.push_back(dt_to_gauss(e.witness));
  return out;
}

}  // namespace

TEST(WarpFrom, TrefoilAtEdgeZero) {
  // Passages 1O 3U 2O 1U 3O 2U: crossings 1 and 2 are met from above first,
  // crossing 3 (labels 5 and 2) from below.
  const auto w = warp_from(code_of("[4, 6, 2]"), {0, Direction::Forward});
  EXPECT_EQ(w.degree, 1);
  EXPECT_EQ(w.below, std::vector<int>{3});
  EXPECT_EQ(w.above, (std::vector<int>{1, 2}));
}

TEST(WarpFrom, TrefoilAtEdgeOneIsAdjacent) {
  const auto w = warp_from(code_of("[4, 6, 2]"), {1, Direction::Forward});
  EXPECT_LE(std::abs(w.degree - 1), 1);
}

TEST(WarpFrom, SetsPartitionCrossings) {
  for (const auto& g : catalog_codes()) {
    for (int e = 0; e < g.size(); ++e) {
      for (Direction d : {Direction::Forward, Direction::Backward}) {
        const auto w = warp_from(g, {e, d});
        std::vector<int> all = w.below;
        all.insert(all.end(), w.above.begin(), w.above.end());
        std::sort(all.begin(), all.end());
        std::vector<int> expected(static_cast<std::size_t>(g.crossings()));
        std::iota(expected.begin(), expected.end(), 1);
        ASSERT_EQ(all, expected);
        ASSERT_EQ(w.degree, static_cast<int>(w.below.size()));
      }
    }
  }
}

TEST(WarpFrom, RejectsOutOfRangeBasepoint) {
  EXPECT_THROW(warp_from(code_of("[4, 6, 2]"), {6, Direction::Forward}), InputError);
  EXPECT_THROW(warp_from(code_of("[4, 6, 2]"), {-1, Direction::Forward}), InputError);
}

TEST(MinWarp, SpecExamples) {
  EXPECT_EQ(min_warp(code_of("[4, 6, 2]")).degree, 1);
  EXPECT_EQ(min_warp(code_of("[4, 6, 8, 2]")).degree, 1);
  EXPECT_EQ(min_warp(code_of("[12, 14, 16, 2, 4, 6, 8, 10]")).degree, 2);
  EXPECT_EQ(min_warp(code_of("[16, 18, -20, 22, 2, 6, -4, 10, 8, 14, 12]")).degree, 2);
}

TEST(MinWarp, WitnessAchievesMinimumWithTieBreak) {
  const auto g = code_of("[4, 6, 8, 2]");
  const auto m = min_warp(g);
  EXPECT_EQ(warp_from(g, m.witness.basepoint).degree, m.degree);
  // No earlier (edge, direction) pair reaches the minimum.
  for (int e = 0; e <= m.witness.basepoint.edge; ++e) {
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      if (e == m.witness.basepoint.edge && d == m.witness.basepoint.direction) break;
      EXPECT_GT(warp_from(g, {e, d}).degree, m.degree);
    }
  }
}

TEST(MinWarp, InvariantUnderReverse) {
  for (const auto& g : catalog_codes()) EXPECT_EQ(min_warp(reverse(g)).degree, min_warp(g).degree);
}

TEST(WarpProfile, TrefoilForwardMinimumIsOne) {
  const auto p = warp_profile(code_of("[4, 6, 2]"), Direction::Forward);
  ASSERT_EQ(p.size(), 6u);
  EXPECT_EQ(*std::min_element(p.begin(), p.end()), 1);
}

TEST(WarpProfile, AdjacencyOnCatalog) {
  for (const auto& g : catalog_codes()) {
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const auto p = warp_profile(g, d);
      for (std::size_t k = 0; k < p.size(); ++k) EXPECT_LE(std::abs(p[k] - p[(k + 1) % p.size()]), 1);
    }
  }
}

TEST(WarpProfile, MirrorIsComplement) {
  for (const auto& g : catalog_codes()) {
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const auto p = warp_profile(g, d);
      const auto q = warp_profile(mirror(g), d);
      for (std::size_t k = 0; k < p.size(); ++k) ASSERT_EQ(p[k] + q[k], g.crossings());
    }
  }
}

TEST(ApplyRollerCoaster, TrefoilBecomesDescending) {
  const auto g = code_of("[4, 6, 2]");
  const Basepoint b{0, Direction::Forward};
  const auto h = apply_roller_coaster(g, b);
  EXPECT_EQ(warp_from(h, b).degree, 0);
}

TEST(ApplyRollerCoaster, DescendingCodeIsFixed) {
  const auto g = code_of("[4, 6, 2]");
  const Basepoint b{0, Direction::Forward};
  const auto h = apply_roller_coaster(g, b);
  EXPECT_EQ(apply_roller_coaster(h, b), h);
}

TEST(ApplyRollerCoaster, FigureEightSwapsOneCrossing) {
  const auto g = code_of("[4, 6, 8, 2]");
  const auto m = min_warp(g);
  const auto h = apply_roller_coaster(g, m.witness.basepoint);
  int changed = 0;
  for (int k = 0; k < g.size(); ++k) changed += g[static_cast<std::size_t>(k)].role != h[static_cast<std::size_t>(k)].role;
  EXPECT_EQ(changed, 2);  // one crossing, both passages
}

TEST(ApplyRollerCoaster, FixedPointOnCatalogEverywhere) {
  for (const auto& g : catalog_codes()) {
    for (int e = 0; e < g.size(); ++e) {
      for (Direction d : {Direction::Forward, Direction::Backward}) {
        const auto h = apply_roller_coaster(g, {e, d});
        ASSERT_EQ(warp_from(h, {e, d}).degree, 0);
        ASSERT_EQ(apply_roller_coaster(h, {e, d}), h);
      }
    }
  }
}
