#include "stabxc/slack.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace stabxc {

bool entry_in_support(const BipartiteGraph& g, int edge, const StableSet& column) {
  if (!is_stable(g, column)) throw std::invalid_argument("column not a stable set");
  const Edge& e = g.edge(edge);
  return !column.test(e.a) && !column.test(e.b);
}

bool verify_rectangle(const BipartiteGraph& g, const Rectangle& rect) {
  for (const StableSet& col : rect.cols) {
    if (!is_stable(g, col)) return false;
    for (int row : rect.rows) {
      if (row < 0 || row >= g.num_edges()) return false;
      const Edge& e = g.edge(row);
      if (col.test(e.a) || col.test(e.b)) return false;
    }
  }
  return true;
}

std::vector<int> rectangle_rows(const BipartiteGraph& g, const MaximalRectangle& rect) {
  std::vector<int> rows;
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (rect.a_side.test(e.a) && rect.b_side.test(e.b - g.a_size())) rows.push_back(i);
  }
  return rows;
}

bool verify_rectangle(const BipartiteGraph& g, const MaximalRectangle& rect) {
  if (static_cast<int>(rect.a_side.size()) != g.a_size() ||
      static_cast<int>(rect.b_side.size()) != g.b_size()) {
    return false;
  }
  // Every row edge has both ends in a_side + b_side, and every column avoids
  // that union, so the product lies in the support once rows are nonempty.
  return !rectangle_rows(g, rect).empty();
}

bool rectangle_contains(const BipartiteGraph& /*g*/, const Rectangle& rect, const Entry& entry) {
  if (std::find(rect.rows.begin(), rect.rows.end(), entry.edge) == rect.rows.end()) return false;
  return std::find(rect.cols.begin(), rect.cols.end(), entry.column) != rect.cols.end();
}

bool rectangle_contains(const BipartiteGraph& g, const MaximalRectangle& rect, const Entry& entry) {
  const Edge& e = g.edge(entry.edge);
  if (!rect.a_side.test(e.a) || !rect.b_side.test(e.b - g.a_size())) return false;
  for (auto v = entry.column.find_first(); v != VertexSet::npos; v = entry.column.find_next(v)) {
    const int vi = static_cast<int>(v);
    if (vi < g.a_size() ? rect.a_side.test(vi) : rect.b_side.test(vi - g.a_size())) return false;
  }
  return true;
}

namespace {

template <typename Rect>
CoverReport verify_cover_impl(const BipartiteGraph& g, std::span<const Rect> rects,
                              std::span<const Entry> entries) {
  for (const Rect& r : rects) {
    if (!verify_rectangle(g, r)) throw std::invalid_argument("cover contains an invalid rectangle");
  }
  CoverReport report;
  report.entries_checked = entries.size();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const bool hit = std::any_of(rects.begin(), rects.end(),
                                 [&](const Rect& r) { return rectangle_contains(g, r, entries[i]); });
    if (!hit) report.uncovered.push_back(i);
  }
  return report;
}

}  // namespace

CoverReport verify_cover(const BipartiteGraph& g, std::span<const Rectangle> rects,
                         std::span<const Entry> entries) {
  return verify_cover_impl(g, rects, entries);
}

CoverReport verify_cover(const BipartiteGraph& g, std::span<const MaximalRectangle> rects,
                         std::span<const Entry> entries) {
  return verify_cover_impl(g, rects, entries);
}

std::vector<Entry> support_entries(const BipartiteGraph& g, std::span<const StableSet> columns) {
  std::vector<Entry> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    for (const StableSet& col : columns) {
      if (entry_in_support(g, e, col)) out.push_back({e, col});
    }
  }
  return out;
}

std::vector<std::pair<int, int>> BinaryMatrix::support() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::identity(int n) {
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix BinaryMatrix::ones(int rows, int cols) {
  BinaryMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.set(i, j, true);
  }
  return m;
}

BinaryMatrix edge_stable_matrix(const BipartiteGraph& g) {
  const auto columns = enumerate_stable_sets(g);
  BinaryMatrix m(g.num_edges(), static_cast<int>(columns.size()));
  for (int e = 0; e < g.num_edges(); ++e) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      m.set(e, static_cast<int>(j), entry_in_support(g, e, columns[j]));
    }
  }
  return m;
}

void write_matrix(std::ostream& out, const BinaryMatrix& m) {
  out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << (m.at(i, j) ? 1 : 0);
    out << '\n';
  }
}

BinaryMatrix read_matrix(std::istream& in) {
  std::string tag;
  int rows = 0, cols = 0;
  if (!(in >> tag >> rows >> cols) || tag != "matrix" || rows < 0 || cols < 0) {
    throw std::invalid_argument("malformed matrix header (expected 'matrix <rows> <cols>')");
  }
  BinaryMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int v = 0;
      if (!(in >> v) || (v != 0 && v != 1)) throw std::invalid_argument("matrix entries must be 0 or 1");
      m.set(i, j, v == 1);
    }
  }
  return m;
}

namespace {

VertexSet row_support(const BinaryMatrix& m, int i) {
  VertexSet s(m.cols());
  for (int j = 0; j < m.cols(); ++j) s[j] = m.at(i, j);
  return s;
}

VertexSet rows_containing(const BinaryMatrix& m, const std::vector<VertexSet>& row_sets,
                          const VertexSet& cols) {
  VertexSet rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows[i] = cols.is_subset_of(row_sets[i]);
  return rows;
}

MatrixRectangle to_rectangle(const VertexSet& rows, const VertexSet& cols) {
  return {members(rows), members(cols)};
}

// Support entries of m indexed row-major, with a lookup from (row, col).
struct SupportIndex {
  std::vector<std::pair<int, int>> entries;
  std::vector<int> index;  // rows * cols, -1 off the support
  int cols = 0;

  explicit SupportIndex(const BinaryMatrix& m) : entries(m.support()), index(static_cast<std::size_t>(m.rows()) * m.cols(), -1), cols(m.cols()) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      index[static_cast<std::size_t>(entries[k].first) * cols + entries[k].second] = static_cast<int>(k);
    }
  }
  int at(int i, int j) const { return index[static_cast<std::size_t>(i) * cols + j]; }
};

VertexSet entries_of(const SupportIndex& idx, const MatrixRectangle& r) {
  VertexSet s(idx.entries.size());
  for (int i : r.rows) {
    for (int j : r.cols) {
      const int k = idx.at(i, j);
      if (k >= 0) s.set(k);
    }
  }
  return s;
}

}  // namespace

std::vector<MatrixRectangle> maximal_rectangles(const BinaryMatrix& m) {
  if (m.support().size() > kMaxCoverSupport) throw std::length_error("instance too large for exact rc");
  std::vector<VertexSet> row_sets;
  for (int i = 0; i < m.rows(); ++i) row_sets.push_back(row_support(m, i));

  // Closed column sets, keyed canonically; each determines its row closure.
  std::set<VertexSet> seen;
  std::vector<VertexSet> frontier;
  for (int i = 0; i < m.rows(); ++i) {
    if (row_sets[i].none()) continue;
    const VertexSet cols = row_sets[i];
    if (seen.insert(cols).second) frontier.push_back(cols);
  }
  std::vector<VertexSet> closed;
  while (!frontier.empty()) {
    VertexSet cols = std::move(frontier.back());
    frontier.pop_back();
    closed.push_back(cols);
    if (closed.size() > kMaxMaximalRectangles) throw std::length_error("instance too large for exact rc");
    const VertexSet rows = rows_containing(m, row_sets, cols);
    for (int r = 0; r < m.rows(); ++r) {
      if (rows.test(r)) continue;
      VertexSet narrower = cols & row_sets[r];
      if (narrower.none()) continue;
      if (seen.insert(narrower).second) frontier.push_back(std::move(narrower));
    }
  }
  std::sort(closed.begin(), closed.end(), [&](const VertexSet& x, const VertexSet& y) {
    const auto rx = members(rows_containing(m, row_sets, x));
    const auto ry = members(rows_containing(m, row_sets, y));
    if (rx != ry) return rx < ry;
    return members(x) < members(y);
  });
  std::vector<MatrixRectangle> out;
  out.reserve(closed.size());
  for (const VertexSet& cols : closed) out.push_back(to_rectangle(rows_containing(m, row_sets, cols), cols));
  return out;
}

CoverReport verify_matrix_cover(const BinaryMatrix& m, std::span<const MatrixRectangle> cover) {
  const SupportIndex idx(m);
  CoverReport report;
  report.entries_checked = idx.entries.size();
  VertexSet hit(idx.entries.size());
  for (const MatrixRectangle& r : cover) {
    for (int i : r.rows) {
      for (int j : r.cols) {
        if (!m.at(i, j)) throw std::invalid_argument("cover contains an invalid rectangle");
      }
    }
    hit |= entries_of(idx, r);
  }
  for (std::size_t k = 0; k < idx.entries.size(); ++k) {
    if (!hit.test(k)) report.uncovered.push_back(k);
  }
  return report;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(std::vector<VertexSet> sets, std::size_t universe)
      : sets_(std::move(sets)), universe_(universe), covering_(universe), reach_(universe, VertexSet(universe)) {
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      for (auto e = sets_[s].find_first(); e != VertexSet::npos; e = sets_[s].find_next(e)) {
        covering_[e].push_back(static_cast<int>(s));
        reach_[e] |= sets_[s];
      }
    }
    order_.resize(universe_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return covering_[x].size() < covering_[y].size(); });
  }

  std::vector<int> solve() {
    best_ = greedy();
    std::vector<int> chosen;
    VertexSet uncovered(universe_);
    uncovered.set();
    branch(uncovered, chosen);
    return best_;
  }

 private:
  std::vector<int> greedy() const {
    VertexSet uncovered(universe_);
    uncovered.set();
    std::vector<int> picked;
    while (uncovered.any()) {
      int best = -1;
      std::size_t gain = 0;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        const std::size_t g = (sets_[s] & uncovered).count();
        if (g > gain) {
          gain = g;
          best = static_cast<int>(s);
        }
      }
      picked.push_back(best);
      uncovered -= sets_[best];
    }
    return picked;
  }

  // Entries no two of which share a rectangle each need their own set.
  std::size_t lower_bound(const VertexSet& uncovered) const {
    std::vector<std::size_t> picked;
    for (std::size_t e : order_) {
      if (!uncovered.test(e)) continue;
      const bool clash = std::any_of(picked.begin(), picked.end(), [&](std::size_t f) { return reach_[f].test(e); });
      if (!clash) picked.push_back(e);
    }
    return picked.size();
  }

  void branch(const VertexSet& uncovered, std::vector<int>& chosen) {
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + lower_bound(uncovered) >= best_.size()) return;
    std::size_t pivot = VertexSet::npos;
    for (std::size_t e : order_) {
      if (uncovered.test(e)) {
        pivot = e;
        break;
      }
    }
    std::vector<std::pair<std::size_t, int>> options;
    for (int s : covering_[pivot]) options.emplace_back((sets_[s] & uncovered).count(), s);
    std::stable_sort(options.begin(), options.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [gain, s] : options) {
      chosen.push_back(s);
      branch(uncovered - sets_[s], chosen);
      chosen.pop_back();
      if (chosen.size() + 1 >= best_.size()) return;
    }
  }

  std::vector<VertexSet> sets_;
  std::size_t universe_;
  std::vector<std::vector<int>> covering_;
  std::vector<VertexSet> reach_;
  std::vector<std::size_t> order_;
  std::vector<int> best_;
};

}  // namespace

CoverResult min_cover_bruteforce(const BinaryMatrix& m) {
  const auto rects = maximal_rectangles(m);
  const SupportIndex idx(m);
  CoverResult result;
  if (idx.entries.empty()) return result;
  std::vector<VertexSet> sets;
  sets.reserve(rects.size());
  for (const auto& r : rects) sets.push_back(entries_of(idx, r));
  CoverSearch search(std::move(sets), idx.entries.size());
  auto chosen = search.solve();
  std::sort(chosen.begin(), chosen.end());
  for (int s : chosen) result.cover.push_back(rects[s]);
  result.size = static_cast<int>(result.cover.size());
  return result;
}

bool is_fooling_set(const BinaryMatrix& m, std::span<const std::pair<int, int>> entries) {
  for (const auto& [i, j] : entries) {
    if (i < 0 || i >= m.rows() || j < 0 || j >= m.cols() || !m.at(i, j)) return false;
  }
  for (std::size_t x = 0; x < entries.size(); ++x) {
    for (std::size_t y = x + 1; y < entries.size(); ++y) {
      const auto [i, j] = entries[x];
      const auto [k, l] = entries[y];
      if (m.at(i, l) && m.at(k, j)) return false;
    }
  }
  return true;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {}

  std::vector<int> solve() {
    VertexSet all(adj_.size());
    all.set();
    std::vector<int> current;
    expand(current, all);
    return best_;
  }

 private:
  // Greedy sequential coloring; color classes are independent sets, so the
  // number of colors bounds the clique size within the candidate set.
  void color_order(const VertexSet& candidates, std::vector<int>& order, std::vector<int>& bound) const {
    VertexSet uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      VertexSet available = uncolored;
      while (available.any()) {
        const auto v = available.find_first();
        available.reset(v);
        available -= adj_[v];
        uncolored.reset(v);
        order.push_back(static_cast<int>(v));
        bound.push_back(color);
      }
    }
  }

  void expand(std::vector<int>& current, VertexSet candidates) {
    std::vector<int> order, bound;
    color_order(candidates, order, bound);
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (current.size() + bound[idx] <= best_.size()) return;
      const int v = order[idx];
      current.push_back(v);
      VertexSet next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<VertexSet> adj_;
  std::vector<int> best_;
};

}  // namespace

FoolingResult max_fooling_bruteforce(const BinaryMatrix& m) {
  const auto support = m.support();
  if (support.size() > kMaxFoolingSupport) throw std::length_error("instance too large for exact fooling number");
  std::vector<VertexSet> adj(support.size(), VertexSet(support.size()));
  for (std::size_t x = 0; x < support.size(); ++x) {
    for (std::size_t y = x + 1; y < support.size(); ++y) {
      const auto [i, j] = support[x];
      const auto [k, l] = support[y];
      if (!(m.at(i, l) && m.at(k, j))) {
        adj[x].set(y);
        adj[y].set(x);
      }
    }
  }
  CliqueSearch search(std::move(adj));
  auto clique = search.solve();
  std::sort(clique.begin(), clique.end());
  FoolingResult result;
  for (int v : clique) result.entries.push_back(support[v]);
  result.size = static_cast<int>(result.entries.size());
  return result;
}

}  // namespace stabxc
