#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "stabxc/tree_cover.hpp"

using namespace stabxc;

namespace {

long long vertex_count_oracle(int k) {
  static std::map<int, long long> memo;
  if (k == 1) return 2;
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  const long long v = k - 1 + vertex_count_oracle((k + 1) / 2) + vertex_count_oracle(k / 2);
  memo[k] = v;
  return v;
}

std::vector<int> labels_on_path(const LabeledTree& t, int leaf) {
  std::vector<int> out;
  for (int v : t.path_from_root(leaf)) out.push_back(t.label[v]);
  return out;
}

}  // namespace

TEST(TreeCover, SmallTreeGoldens) {
  const LabeledTree t1 = build_tree(1);
  EXPECT_EQ(t1.size(), 2);
  EXPECT_EQ(t1.leaves(), (std::vector<int>{1}));
  EXPECT_EQ(t1.label[1], 1);

  const LabeledTree t3 = build_tree(3);
  EXPECT_EQ(t3.size(), 9);
  std::set<std::vector<int>> paths;
  for (int leaf : t3.leaves()) paths.insert(labels_on_path(t3, leaf));
  EXPECT_EQ(paths, (std::set<std::vector<int>>{{1, 2, 3}, {3, 1, 2}, {3, 2, 1}}));

  const LabeledTree t8 = build_tree(8);
  EXPECT_EQ(t8.size(), 33);
  EXPECT_EQ(t8.leaves().size(), 8U);
  EXPECT_THROW(build_tree(0), std::invalid_argument);
}

TEST(TreeCover, VertexCountMatchesRecurrence) {
  for (int k = 1; k <= 300; ++k) {
    EXPECT_EQ(tree_vertex_count(k), vertex_count_oracle(k));
    if (k <= 130) {
      EXPECT_EQ(build_tree(k).size(), vertex_count_oracle(k));
    }
  }
}

TEST(TreeCover, PropertiesHoldUpTo256) {
  for (int k = 1; k <= 256; ++k) {
    const LabeledTree t = build_tree(k);
    const TreeReport r = tree_properties_check(t);
    EXPECT_TRUE(r.ok()) << "k=" << k;
    EXPECT_LE(r.max_multiplicity, ceil_log2(k) + 1);
    // Independent recheck of the two path properties.
    std::set<int> leaf_labels;
    for (int leaf : t.leaves()) {
      auto labels = labels_on_path(t, leaf);
      ASSERT_EQ(static_cast<int>(labels.size()), k);
      std::sort(labels.begin(), labels.end());
      for (int i = 0; i < k; ++i) ASSERT_EQ(labels[i], i + 1);
      leaf_labels.insert(t.label[leaf]);
    }
    EXPECT_EQ(static_cast<int>(leaf_labels.size()), k);
  }
  EXPECT_EQ(ceil_log2(1), 0);
  EXPECT_EQ(ceil_log2(8), 3);
  EXPECT_EQ(ceil_log2(9), 4);
}

TEST(TreeCover, YSet) {
  const LabeledTree t = build_tree(3);
  const std::vector<int> pts{10, 20, 30};
  for (int v = 1; v < t.size(); ++v) {
    if (t.is_leaf(v)) {
      EXPECT_THROW(y_set(t, v, pts), std::invalid_argument);
      continue;
    }
    std::vector<int> expected;
    for (int u : t.path_from_root(v)) expected.push_back(pts[t.label[u] - 1]);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(y_set(t, v, pts), expected);
  }
  EXPECT_THROW(y_set(t, LabeledTree::root, pts), std::invalid_argument);
}

TEST(TreeCover, LineCoverSizeAndValidity) {
  const PlaneTables t(build_plane(2));
  const LabeledTree tree = build_tree(3);
  for (int l = 0; l < t.n(); ++l) {
    const auto cover = line_cover(t, tree, l);
    EXPECT_EQ(cover.size(), 5U);
    for (const auto& r : cover) {
      EXPECT_TRUE(is_valid_centered(t, r));
      EXPECT_EQ(r.lines, std::vector<int>{l});
      EXPECT_TRUE(std::binary_search(r.y.begin(), r.y.end(), r.center));
    }
  }
}

TEST(TreeCover, LocalWitnessCoversEntry) {
  for (int q : {2, 3, 4}) {
    const PlaneTables t(build_plane(q));
    const LabeledTree tree = build_tree(q + 1);
    const auto covers = all_line_covers(t);
    for (const auto& se : enumerate_special_entries(t)) {
      const std::size_t i = local_cover_witness(t, tree, se);
      ASSERT_LT(i, covers[se.line].size());
      EXPECT_TRUE(covered_by(t, se, to_maximal(t, covers[se.line][i])));
    }
  }
}

TEST(TreeCover, PrunedAndFullVerificationAgree) {
  for (int q : {2, 3}) {
    const PlaneTables t(build_plane(q));
    const auto per_line = all_line_covers(t);
    const auto merged = merge_covers(t, per_line);
    const SpecialCoverReport pruned = verify_special_cover(t, merged);
    const SpecialCoverReport full = verify_special_cover_full(t, merged);
    EXPECT_TRUE(pruned.complete());
    EXPECT_TRUE(full.complete());
    EXPECT_EQ(pruned.entries, enumerate_special_entries(t).size());

    auto dropped = merged;
    dropped.erase(dropped.begin());
    const SpecialCoverReport a = verify_special_cover(t, dropped);
    const SpecialCoverReport b = verify_special_cover_full(t, dropped);
    EXPECT_FALSE(a.complete());
    EXPECT_EQ(a.covered, b.covered);
  }
}

TEST(TreeCover, MergeKeepsEveryEntry) {
  for (int q : {2, 3, 4, 5}) {
    const PlaneTables t(build_plane(q));
    const auto per_line = all_line_covers(t);
    const auto merged = merge_covers(t, per_line);
    const MergeNoLossReport r = merge_no_loss_check(t, per_line, merged);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.covered_before, r.entries);
    EXPECT_EQ(r.covered_after, r.entries);
    for (const auto& m : merged) EXPECT_TRUE(is_valid_centered(t, m));
  }
}

TEST(TreeCover, SingleFiberMerge) {
  const PlaneTables t(build_plane(2));
  const auto per_line = all_line_covers(t);
  // Only one line contributes: merging must return its rectangles unchanged
  // up to the tree_node marker and ordering by center.
  std::vector<std::vector<CenteredRectangle>> one(per_line.size());
  one[0] = per_line[0];
  auto merged = merge_covers(t, one);
  ASSERT_EQ(merged.size(), per_line[0].size());
  auto original = per_line[0];
  for (auto& r : original) r.tree_node = -1;
  for (auto& r : merged) r.tree_node = -1;
  const auto key = [](const CenteredRectangle& a, const CenteredRectangle& b) {
    return std::tie(a.center, a.y) < std::tie(b.center, b.y);
  };
  std::sort(original.begin(), original.end(), key);
  std::sort(merged.begin(), merged.end(), key);
  EXPECT_EQ(merged, original);
}

TEST(TreeCover, CoverSizeWithinBounds) {
  const std::vector<int> qs{2, 3, 4, 5, 7};
  for (const auto& row : cover_size_report(qs)) {
    EXPECT_TRUE(row.ok(kCoverRatioBound)) << "q=" << row.q;
    EXPECT_EQ(row.bound, static_cast<std::size_t>((ceil_log2(row.q + 1) + 1) * row.n));
    EXPECT_NEAR(row.n_log2_n, row.n * std::log2(row.n), 1e-9);
    EXPECT_LE(row.merged, row.unmerged);
  }
  EXPECT_EQ(cover_size_row(PlaneTables(build_plane(3))).merged, 26U);
}

TEST(TreeCover, TextRoundTrip) {
  const PlaneTables t(build_plane(3));
  const auto merged = merge_covers(t, all_line_covers(t));
  std::stringstream ss;
  write_cover(ss, merged);
  auto back = read_cover(ss);
  ASSERT_EQ(back.size(), merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    EXPECT_EQ(back[i].center, merged[i].center);
    EXPECT_EQ(back[i].y, merged[i].y);
    EXPECT_EQ(back[i].lines, merged[i].lines);
  }
  std::istringstream bad("rect centre=1 Y=1 lines=2\n");
  EXPECT_THROW(read_cover(bad), std::invalid_argument);
}
