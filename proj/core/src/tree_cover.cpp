#include "stabxc/tree_cover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stabxc {

int LabeledTree::depth(int v) const {
  int d = 0;
  for (; v != root; v = parent[v]) ++d;
  return d;
}

std::vector<int> LabeledTree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> LabeledTree::path_from_root(int v) const {
  std::vector<int> out;
  for (; v != root; v = parent[v]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

int add_node(LabeledTree& t, int parent, int label) {
  const int v = t.size();
  t.parent.push_back(parent);
  t.label.push_back(label);
  t.children.emplace_back();
  if (parent >= 0) t.children[parent].push_back(v);
  return v;
}

int add_path(LabeledTree& t, int from, int first_label, int length, std::vector<int>* record) {
  int v = from;
  for (int i = 0; i < length; ++i) {
    v = add_node(t, v, first_label + i);
    if (record) record->push_back(v);
  }
  return v;
}

// Hangs T(k), labels shifted by offset, below `at`.
void grow(LabeledTree& t, int at, int k, int offset) {
  if (k == 1) {
    add_node(t, at, offset + 1);
    return;
  }
  const int k1 = (k + 1) / 2;
  const int k2 = k / 2;
  const int end1 = add_path(t, at, offset + 1, k1, nullptr);
  const int end2 = add_path(t, at, offset + k1 + 1, k2, nullptr);
  grow(t, end1, k2, offset + k1);
  grow(t, end2, k1, offset);
}

void collect_below(const LabeledTree& t, int v, std::vector<int>& out) {
  for (int c : t.children[v]) {
    out.push_back(c);
    collect_below(t, c, out);
  }
}

}  // namespace

LabeledTree build_tree(int k) {
  if (k < 1) throw std::invalid_argument("tree parameter must be >= 1");
  LabeledTree t;
  t.k = k;
  add_node(t, -1, 0);
  if (k == 1) {
    add_node(t, LabeledTree::root, 1);
    return t;
  }
  const int k1 = (k + 1) / 2;
  const int k2 = k / 2;
  const int end1 = add_path(t, LabeledTree::root, 1, k1, &t.main_path_1);
  const int end2 = add_path(t, LabeledTree::root, k1 + 1, k2, &t.main_path_2);
  grow(t, end1, k2, k1);
  grow(t, end2, k1, 0);
  collect_below(t, end1, t.branch_1);
  collect_below(t, end2, t.branch_2);
  return t;
}

long long tree_vertex_count(int k) {
  if (k < 1) throw std::invalid_argument("tree parameter must be >= 1");
  if (k == 1) return 2;
  return k - 1 + tree_vertex_count((k + 1) / 2) + tree_vertex_count(k / 2);
}

int ceil_log2(long long k) {
  if (k < 1) throw std::invalid_argument("ceil_log2 needs k >= 1");
  int r = 0;
  while ((1LL << r) < k) ++r;
  return r;
}

TreeReport tree_properties_check(const LabeledTree& t) {
  TreeReport rep;
  const int k = t.k;
  auto fail = [&](bool& flag, bool ok, const std::string& what) {
    flag = ok;
    if (!ok) rep.failures.push_back(what);
  };

  fail(rep.vertex_recurrence, t.size() == tree_vertex_count(k),
       "vertex count " + std::to_string(t.size()) + " differs from recurrence");
  const long double bound = 2.0L * k * (std::log2(static_cast<long double>(k)) + 1) + 2;
  fail(rep.vertex_bound, t.size() <= bound + 1e-9L, "vertex count exceeds 2k(log2 k + 1) + 2");

  const auto leaves = t.leaves();
  fail(rep.leaf_count, static_cast<int>(leaves.size()) == k, "leaf count differs from k");

  bool lengths = true;
  bool labels = true;
  for (int leaf : leaves) {
    const auto path = t.path_from_root(leaf);
    if (static_cast<int>(path.size()) != k) lengths = false;
    std::vector<int> seen;
    for (int v : path) seen.push_back(t.label[v]);
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < static_cast<int>(seen.size()); ++i) {
      if (seen[i] != i + 1) labels = false;
    }
    if (static_cast<int>(seen.size()) != k) labels = false;
  }
  fail(rep.path_lengths, lengths, "root-to-leaf path with length other than k");
  fail(rep.path_labels, labels, "root-to-leaf path missing or repeating a label");

  bool branches = true;
  if (k > 1) {
    const int k1 = (k + 1) / 2;
    auto leaf_labels = [&](const std::vector<int>& nodes) {
      std::vector<int> out;
      for (int v : nodes) {
        if (t.is_leaf(v)) out.push_back(t.label[v]);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    std::vector<int> want1, want2;
    for (int i = k1 + 1; i <= k; ++i) want1.push_back(i);
    for (int i = 1; i <= k1; ++i) want2.push_back(i);
    branches = leaf_labels(t.branch_1) == want1 && leaf_labels(t.branch_2) == want2;
  } else {
    branches = t.label[leaves.front()] == 1;
  }
  fail(rep.branch_leaf_labels, branches, "branch leaf labels do not split at ceil(k/2)");

  std::vector<int> count(k + 1, 0);
  for (int v = 1; v < t.size(); ++v) ++count[t.label[v]];
  rep.max_multiplicity = *std::max_element(count.begin() + 1, count.end());
  fail(rep.label_multiplicity, rep.max_multiplicity <= ceil_log2(k) + 1,
       "a label occurs more than ceil(log2 k) + 1 times");
  return rep;
}

std::vector<int> y_set(const LabeledTree& t, int v, std::span<const int> line_points) {
  if (v <= LabeledTree::root || v >= t.size() || t.is_leaf(v)) {
    throw std::invalid_argument("y_set needs a non-root non-leaf node");
  }
  std::vector<int> out;
  for (int u : t.path_from_root(v)) out.push_back(line_points[t.label[u] - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

MaximalRectangle to_maximal(const PlaneTables& t, const CenteredRectangle& r) {
  MaximalRectangle m{VertexSet(t.n()), VertexSet(t.n())};
  for (int l : r.lines) {
    for (int p : t.points_on(l)) m.a_side.set(p);
  }
  for (int y : r.y) m.a_side.reset(y);
  for (int l : t.lines_through(r.center)) m.b_side.set(l);
  return m;
}

bool is_valid_centered(const PlaneTables& t, const CenteredRectangle& r) {
  if (r.center < 0 || r.center >= t.n()) return false;
  if (!std::binary_search(r.y.begin(), r.y.end(), r.center)) return false;
  for (int l : r.lines) {
    if (t.position(r.center, l) < 0) return false;
  }
  const MaximalRectangle m = to_maximal(t, r);
  if (m.b_side.count() < 2 || m.a_side.test(r.center)) return false;
  return verify_rectangle(t.plane().graph, m);
}

std::vector<CenteredRectangle> line_cover(const PlaneTables& t, const LabeledTree& tree, int line) {
  if (tree.k != t.q() + 1) throw std::invalid_argument("line_cover needs T(q+1)");
  const auto pts = t.points_on(line);
  std::vector<CenteredRectangle> out;
  for (int v = 1; v < tree.size(); ++v) {
    if (tree.is_leaf(v)) continue;
    out.push_back({pts[tree.label[v] - 1], {line}, y_set(tree, v, pts), v});
  }
  return out;
}

std::size_t local_cover_witness(const PlaneTables& t, const LabeledTree& tree, const SpecialEntry& se) {
  const int label = t.position(se.point, se.line) + 1;
  int leaf = -1;
  for (int v : tree.leaves()) {
    if (tree.label[v] == label) leaf = v;
  }
  if (leaf < 0) throw std::logic_error("no leaf carries the entry's label");
  int chosen = -1;
  for (int u : tree.path_from_root(leaf)) {
    if (se.subset & (std::uint32_t{1} << (tree.label[u] - 1))) chosen = u;
  }
  if (chosen < 0 || tree.is_leaf(chosen)) throw std::logic_error("tree walk found no covering node");
  // line_cover lists non-leaf nodes in node order.
  std::size_t index = 0;
  for (int v = 1; v < chosen; ++v) index += tree.is_leaf(v) ? 0 : 1;
  return index;
}

std::vector<std::vector<CenteredRectangle>> all_line_covers(const PlaneTables& t) {
  const LabeledTree tree = build_tree(t.q() + 1);
  std::vector<std::vector<CenteredRectangle>> out(t.n());
  for (int l = 0; l < t.n(); ++l) out[l] = line_cover(t, tree, l);
  return out;
}

std::vector<CenteredRectangle> merge_covers(const PlaneTables& t,
                                            const std::vector<std::vector<CenteredRectangle>>& per_line) {
  if (static_cast<int>(per_line.size()) != t.n()) throw std::invalid_argument("need one cover per line");
  // by_center[c][l]: c-centered rectangles of R_l in creation order.
  std::vector<std::map<int, std::vector<const CenteredRectangle*>>> by_center(t.n());
  for (int l = 0; l < t.n(); ++l) {
    for (const auto& r : per_line[l]) by_center[r.center][l].push_back(&r);
  }

  std::vector<CenteredRectangle> out;
  for (int c = 0; c < t.n(); ++c) {
    const auto& groups = by_center[c];
    if (groups.empty()) continue;
    // The receiving line (first with the most rectangles) fixes the group count.
    std::size_t best_count = 0;
    for (const auto& [l, rs] : groups) best_count = std::max(best_count, rs.size());
    std::vector<CenteredRectangle> sums(best_count);
    for (std::size_t j = 0; j < best_count; ++j) sums[j].center = c;
    for (const auto& [l, rs] : groups) {
      if (rs.size() > best_count) throw std::logic_error("merge injection infeasible");
      for (std::size_t j = 0; j < rs.size(); ++j) {
        auto& s = sums[j];
        s.lines.insert(s.lines.end(), rs[j]->lines.begin(), rs[j]->lines.end());
        s.y.insert(s.y.end(), rs[j]->y.begin(), rs[j]->y.end());
      }
    }
    for (auto& s : sums) {
      std::sort(s.lines.begin(), s.lines.end());
      if (std::adjacent_find(s.lines.begin(), s.lines.end()) != s.lines.end()) {
        throw std::logic_error("merged group repeats a line");
      }
      std::sort(s.y.begin(), s.y.end());
      s.y.erase(std::unique(s.y.begin(), s.y.end()), s.y.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

namespace {

struct FastCentered {
  int center;
  PlaneSet points;  // P_R
};

std::vector<FastCentered> prepare(const PlaneTables& t, std::span<const CenteredRectangle> rects) {
  std::vector<FastCentered> out;
  out.reserve(rects.size());
  for (const auto& r : rects) {
    FastCentered f{r.center, {}};
    const MaximalRectangle m = to_maximal(t, r);
    for (auto p = m.a_side.find_first(); p != VertexSet::npos; p = m.a_side.find_next(p)) f.points.set(p);
    out.push_back(f);
  }
  return out;
}

// Coverage of (p l, S(X)) by a rectangle with L_R = N(c): p in P_R, X
// misses P_R, l through c, and every line through c meets X.
bool covers(const PlaneTables& t, const FastCentered& r, int point, int line, const PlaneSet& nx,
            const PlaneSet& x_points) {
  if (!r.points.test(point)) return false;
  if ((r.points & x_points).any()) return false;
  if (t.position(r.center, line) < 0) return false;
  for (int l : t.lines_through(r.center)) {
    if (!nx.test(l)) return false;
  }
  return true;
}

template <typename Visit>
void for_each_entry(const PlaneTables& t, Visit&& visit) {
  const int q = t.q();
  const std::uint32_t full = (std::uint32_t{1} << (q + 1)) - 1;
  for (int p = 0; p < t.n(); ++p) {
    for (int l : t.lines_through(p)) {
      const std::uint32_t allowed = full & ~(std::uint32_t{1} << t.position(p, l));
      for (std::uint32_t x = allowed; x; x = (x - 1) & allowed) visit(SpecialEntry{p, l, x});
    }
  }
}

struct EntrySets {
  PlaneSet nx;
  PlaneSet x_points;
};

EntrySets entry_sets(const PlaneTables& t, const SpecialEntry& se) {
  EntrySets s;
  const auto pts = t.points_on(se.line);
  for (std::uint32_t m = se.subset; m; m &= m - 1) {
    const int x = pts[std::countr_zero(m)];
    s.x_points.set(x);
    s.nx |= t.pencil(x);
  }
  return s;
}

constexpr std::size_t kReportedUncovered = 16;

template <typename Covered>
SpecialCoverReport scan_entries(const PlaneTables& t, Covered&& covered) {
  SpecialCoverReport rep;
  for_each_entry(t, [&](const SpecialEntry& se) {
    ++rep.entries;
    if (covered(se)) {
      ++rep.covered;
    } else if (rep.uncovered.size() < kReportedUncovered) {
      rep.uncovered.push_back(se);
    }
  });
  return rep;
}

std::vector<std::vector<std::size_t>> index_by_center(const PlaneTables& t, std::span<const CenteredRectangle> rects) {
  std::vector<std::vector<std::size_t>> out(t.n());
  for (std::size_t i = 0; i < rects.size(); ++i) out[rects[i].center].push_back(i);
  return out;
}

bool covered_pruned(const PlaneTables& t, const std::vector<FastCentered>& fast,
                    const std::vector<std::vector<std::size_t>>& centers, const SpecialEntry& se) {
  const EntrySets s = entry_sets(t, se);
  const auto pts = t.points_on(se.line);
  for (std::uint32_t m = se.subset; m; m &= m - 1) {
    for (std::size_t i : centers[pts[std::countr_zero(m)]]) {
      if (covers(t, fast[i], se.point, se.line, s.nx, s.x_points)) return true;
    }
  }
  return false;
}

}  // namespace

SpecialCoverReport verify_special_cover(const PlaneTables& t, std::span<const CenteredRectangle> rects) {
  const auto fast = prepare(t, rects);
  const auto centers = index_by_center(t, rects);
  return scan_entries(t, [&](const SpecialEntry& se) { return covered_pruned(t, fast, centers, se); });
}

SpecialCoverReport verify_special_cover_full(const PlaneTables& t, std::span<const CenteredRectangle> rects) {
  std::vector<MaximalRectangle> full;
  full.reserve(rects.size());
  for (const auto& r : rects) full.push_back(to_maximal(t, r));
  return scan_entries(t, [&](const SpecialEntry& se) {
    return std::any_of(full.begin(), full.end(), [&](const MaximalRectangle& m) { return covered_by(t, se, m); });
  });
}

MergeNoLossReport merge_no_loss_check(const PlaneTables& t,
                                      const std::vector<std::vector<CenteredRectangle>>& per_line,
                                      std::span<const CenteredRectangle> merged) {
  std::vector<CenteredRectangle> before;
  for (const auto& cover : per_line) before.insert(before.end(), cover.begin(), cover.end());
  const auto fast_before = prepare(t, before);
  const auto centers_before = index_by_center(t, before);
  const auto fast_after = prepare(t, merged);
  const auto centers_after = index_by_center(t, merged);

  MergeNoLossReport rep;
  for_each_entry(t, [&](const SpecialEntry& se) {
    ++rep.entries;
    const bool b = covered_pruned(t, fast_before, centers_before, se);
    const bool a = covered_pruned(t, fast_after, centers_after, se);
    rep.covered_before += b ? 1 : 0;
    rep.covered_after += a ? 1 : 0;
    if (b && !a) ++rep.lost;
    if (a && !b) ++rep.gained;
  });
  return rep;
}

CoverSizeRow cover_size_row(const PlaneTables& t) {
  CoverSizeRow row;
  row.q = t.q();
  row.n = t.n();
  const auto per_line = all_line_covers(t);
  for (const auto& c : per_line) row.unmerged += c.size();
  const auto merged = merge_covers(t, per_line);
  row.merged = merged.size();
  row.bound = static_cast<std::size_t>(ceil_log2(t.q() + 1) + 1) * t.n();
  row.n_log2_n = t.n() * std::log2(static_cast<double>(t.n()));
  row.ratio = static_cast<double>(row.merged) / row.n_log2_n;
  row.all_centered = std::all_of(merged.begin(), merged.end(),
                                 [&](const CenteredRectangle& r) { return is_valid_centered(t, r); });
  row.coverage = verify_special_cover(t, merged);
  return row;
}

std::vector<CoverSizeRow> cover_size_report(std::span<const int> qs) {
  std::vector<CoverSizeRow> rows;
  for (int q : qs) rows.push_back(cover_size_row(PlaneTables(build_plane(q))));
  return rows;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> split_ints(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

void write_cover(std::ostream& out, std::span<const CenteredRectangle> rects) {
  for (const auto& r : rects) {
    out << "rect center=" << r.center << " Y=" << join(r.y) << " lines=" << join(r.lines) << '\n';
  }
}

std::vector<CenteredRectangle> read_cover(std::istream& in) {
  std::vector<CenteredRectangle> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tag, center, y, lines;
    if (!(ls >> tag >> center >> y >> lines) || tag != "rect" || center.rfind("center=", 0) != 0 ||
        y.rfind("Y=", 0) != 0 || lines.rfind("lines=", 0) != 0) {
      throw std::invalid_argument("malformed cover line: " + line);
    }
    CenteredRectangle r;
    r.center = std::stoi(center.substr(7));
    r.y = split_ints(y.substr(2));
    r.lines = split_ints(lines.substr(6));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace stabxc
