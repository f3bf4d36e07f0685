#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "stabxc/special_weights.hpp"

namespace stabxc {

/// Rooted tree T(k) with labels in 1..k on its non-root nodes. Node 0 is the
/// root; nodes are numbered in creation order.
struct LabeledTree {
  int k = 0;
  std::vector<int> parent;                 // -1 at the root
  std::vector<int> label;                  // 0 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> main_path_1;            // v_1..v_{ceil(k/2)}, empty for k = 1
  std::vector<int> main_path_2;            // v_{ceil(k/2)+1}..v_k
  std::vector<int> branch_1;               // nodes of B_1 below the end of main_path_1
  std::vector<int> branch_2;               // nodes of B_2 below the end of main_path_2

  static constexpr int root = 0;

  int size() const { return static_cast<int>(parent.size()); }
  bool is_leaf(int v) const { return v != root && children[v].empty(); }
  int depth(int v) const;
  std::vector<int> leaves() const;
  /// Non-root nodes from the root down to v, v last.
  std::vector<int> path_from_root(int v) const;
};

/// T(1) is a root with one leaf labeled 1. For k > 1, two paths of lengths
/// k1 = ceil(k/2) and k2 = floor(k/2) leave the root, labeled 1..k1 and
/// k1+1..k; a copy of T(k2) with labels shifted by k1 hangs off the end of
/// the first, a copy of T(k1) with its own labels off the end of the second.
/// Throws std::invalid_argument for k < 1.
LabeledTree build_tree(int k);

/// V(1) = 2, V(k) = k - 1 + V(ceil(k/2)) + V(floor(k/2)).
long long tree_vertex_count(int k);

struct TreeReport {
  bool vertex_recurrence = false;
  bool vertex_bound = false;        // V(k) <= 2k(log2 k + 1) + 2
  bool leaf_count = false;          // k leaves
  bool path_lengths = false;        // every root-to-leaf path has k edges
  bool branch_leaf_labels = false;  // B_1 leaves: k1+1..k, B_2 leaves: 1..k1
  bool path_labels = false;         // each root-to-leaf path uses every label once
  bool label_multiplicity = false;  // every label at most ceil(log2 k) + 1 times
  int max_multiplicity = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

TreeReport tree_properties_check(const LabeledTree& t);

int ceil_log2(long long k);

/// Y(v) = points p_{label(u)} for the non-root nodes u on the path to v,
/// where line_points names N(l) as p_1..p_{q+1}. Sorted ascending.
/// Throws std::invalid_argument when v is the root or a leaf.
std::vector<int> y_set(const LabeledTree& t, int v, std::span<const int> line_points);

/// Centered rectangle with center c: P_R = (union of N(l) over `lines`)
/// minus Y, L_R = N(c). A single boxed rectangle has one line.
struct CenteredRectangle {
  int center = 0;
  std::vector<int> lines;  // ascending
  std::vector<int> y;      // ascending, contains center
  int tree_node = -1;      // node of T(q+1) for a boxed rectangle, -1 after merging

  friend bool operator==(const CenteredRectangle&, const CenteredRectangle&) = default;
};

MaximalRectangle to_maximal(const PlaneTables& t, const CenteredRectangle& r);

/// Centered: |L_R| >= 2, center outside P_R and on every line of L_R, and
/// the expansion is a valid rectangle of the incidence graph.
bool is_valid_centered(const PlaneTables& t, const CenteredRectangle& r);

/// Boxed rectangles (p_{label(v)}, l, Y(v)) for every non-root non-leaf v of
/// tree = T(q+1), in node order. Points of l are named in ascending order.
std::vector<CenteredRectangle> line_cover(const PlaneTables& t, const LabeledTree& tree, int line);

/// Index into line_cover(t, tree, se.line) of the rectangle picked by walking
/// from the root to the leaf labeled with p's position and taking the last
/// node whose point lies in X.
std::size_t local_cover_witness(const PlaneTables& t, const LabeledTree& tree, const SpecialEntry& se);

/// Per center c: the line through c whose cover has the most c-centered
/// rectangles (lowest index on ties) receives the others, the j-th
/// c-centered rectangle of each other line going to its j-th one. Each
/// group is replaced by its sum. Output ordered by center, then group.
/// Throws std::logic_error if some line has more c-centered rectangles than
/// the receiving line.
std::vector<CenteredRectangle> merge_covers(const PlaneTables& t,
                                            const std::vector<std::vector<CenteredRectangle>>& per_line);

/// All line covers of the plane (index = line).
std::vector<std::vector<CenteredRectangle>> all_line_covers(const PlaneTables& t);

struct SpecialCoverReport {
  std::size_t entries = 0;
  std::size_t covered = 0;
  std::vector<SpecialEntry> uncovered;  // first few only

  bool complete() const { return covered == entries; }
};

/// Checks every special entry against the rectangles, trying only those
/// whose center lies in X: every line through c must meet X, and on the
/// entry's line that forces c into X.
SpecialCoverReport verify_special_cover(const PlaneTables& t, std::span<const CenteredRectangle> rects);

/// Same without the center shortcut. Quadratic; for small q.
SpecialCoverReport verify_special_cover_full(const PlaneTables& t, std::span<const CenteredRectangle> rects);

/// Entry-by-entry comparison of what the unmerged and merged covers cover.
struct MergeNoLossReport {
  std::size_t entries = 0;
  std::size_t covered_before = 0;
  std::size_t covered_after = 0;
  std::size_t lost = 0;   // covered before, not after
  std::size_t gained = 0;

  bool ok() const { return lost == 0; }
};

MergeNoLossReport merge_no_loss_check(const PlaneTables& t,
                                      const std::vector<std::vector<CenteredRectangle>>& per_line,
                                      std::span<const CenteredRectangle> merged);

struct CoverSizeRow {
  int q = 0;
  int n = 0;
  std::size_t unmerged = 0;
  std::size_t merged = 0;
  std::size_t bound = 0;       // (ceil(log2(q+1)) + 1) * n
  double n_log2_n = 0;
  double ratio = 0;            // merged / (n log2 n)
  bool all_centered = false;
  SpecialCoverReport coverage;

  bool ok(double max_ratio) const {
    return coverage.complete() && all_centered && merged <= bound && ratio <= max_ratio;
  }
};

inline constexpr double kCoverRatioBound = 2.0;

CoverSizeRow cover_size_row(const PlaneTables& t);
std::vector<CoverSizeRow> cover_size_report(std::span<const int> qs);

/// "rect center=<p> Y=<p1,p2,...> lines=<l1,...>" per rectangle.
void write_cover(std::ostream& out, std::span<const CenteredRectangle> rects);
std::vector<CenteredRectangle> read_cover(std::istream& in);

}  // namespace stabxc
