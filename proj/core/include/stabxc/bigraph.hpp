#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "stabxc/rational.hpp"

namespace stabxc {

/// Edge between an A-vertex and a B-vertex, both as global vertex indices.
struct Edge {
  int a = 0;
  int b = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple bipartite graph. A-vertices are 0..a_size-1 and B-vertices are
/// a_size..a_size+b_size-1. Neighbor lists are kept sorted.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Throws std::invalid_argument when an edge does not join A to B, is out
  /// of range, or is repeated.
  BipartiteGraph(int a_size, int b_size, std::vector<Edge> edges);

  int a_size() const { return a_size_; }
  int b_size() const { return b_size_; }
  int num_vertices() const { return a_size_ + b_size_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool in_a(int v) const { return v < a_size_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const;

  /// Index of the edge {u, v} in edges(), or -1.
  int edge_index(int u, int v) const;

  bool has_isolated_vertices() const;

  /// True when every vertex has degree d.
  bool is_regular(int d) const;

 private:
  int a_size_ = 0;
  int b_size_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incident_edges_;
};

using StableSet = VertexSet;

/// True when no edge of g has both endpoints in s.
bool is_stable(const BipartiteGraph& g, const StableSet& s);

inline constexpr int kMaxEnumerationVertices = 30;

/// Every stable set of g, the empty set first, by include/exclude
/// backtracking over vertices in index order.
/// Throws std::length_error("graph too large for explicit enumeration")
/// when g has more than kMaxEnumerationVertices vertices.
std::vector<StableSet> enumerate_stable_sets(const BipartiteGraph& g);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const BipartiteGraph& g);

/// Proper d-edge-coloring of a d-regular bipartite graph, built by peeling
/// off d perfect matchings. Colors are 1..d, indexed like g.edges().
/// Augmenting paths are searched from the lowest-index free A-vertex and
/// scan neighbors in ascending order, so the coloring is reproducible.
/// Throws std::invalid_argument("graph not d-regular").
std::vector<int> edge_coloring_regular(const BipartiteGraph& g, int d);

/// True when colors is a proper coloring with colors 1..d in which every
/// color class is a perfect matching.
bool is_proper_edge_coloring(const BipartiteGraph& g, std::span<const int> colors, int d);

/// Cubic hexagonal grid on a torus.
///
/// Brick-wall layout on a rows x cols vertex grid, vertex (i, j) at position
/// i * cols + j before relabeling:
///   - (i, j) -- (i, j + 1) for j < cols - 1;
///   - (i, cols - 1) -- (i + 2 mod rows, 0), a two-row twist on the
///     horizontal wrap so that rows of length 4 do not close 4-cycles;
///   - (i, j) -- (i + 1 mod rows, j) whenever i + j is even.
/// A holds the vertices with i + j even, B the rest, each side numbered in
/// row-major order. Requires rows, cols even and at least 4; the result is
/// 3-regular with girth 6.
/// Throws std::invalid_argument below the guard.
BipartiteGraph hexagonal_torus(int rows, int cols);

/// Complete bipartite graph K_{s,t}.
BipartiteGraph complete_bipartite(int s, int t);

/// Even cycle C_{2k} (k >= 2), vertices alternating A, B around the cycle.
BipartiteGraph even_cycle(int length);

/// Path on `vertices` vertices (>= 2).
BipartiteGraph path_graph(int vertices);

/// rows x cols grid graph (P_rows x P_cols).
BipartiteGraph grid_graph(int rows, int cols);

/// Text edge-list format:
///   bipartite <a_size> <b_size> <m>
///   <a_vertex> <b_vertex>        (m lines, global indices)
void write_graph(std::ostream& out, const BipartiteGraph& g);
BipartiteGraph read_graph(std::istream& in);

}  // namespace stabxc
