#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "stabxc/bigraph.hpp"

namespace stabxc {

// Edge-vs-stable-set matrix M(G): one row per edge, one column per stable
// set, a 1 in position (e, S) iff e and S are disjoint.

/// A position (edge, column) of M(G) with the column given explicitly.
struct Entry {
  int edge = 0;  // index into g.edges()
  StableSet column;
};

/// Explicit rectangle: a set of rows (edge indices) times a set of columns.
struct Rectangle {
  std::vector<int> rows;
  std::vector<StableSet> cols;
};

/// Rectangle described by vertex sets: rows are all edges between a_side and
/// b_side, columns are all stable sets disjoint from a_side and b_side.
/// Both sets use local indices (a_side over 0..a_size-1, b_side over
/// 0..b_size-1); for a plane these are points and lines.
struct MaximalRectangle {
  VertexSet a_side;
  VertexSet b_side;
};

/// Throws std::invalid_argument("column not a stable set") if the column is
/// not stable in g.
bool entry_in_support(const BipartiteGraph& g, int edge, const StableSet& column);

bool verify_rectangle(const BipartiteGraph& g, const Rectangle& rect);

/// False when the row set is empty.
bool verify_rectangle(const BipartiteGraph& g, const MaximalRectangle& rect);

/// Edge indices forming the rows of rect.
std::vector<int> rectangle_rows(const BipartiteGraph& g, const MaximalRectangle& rect);

bool rectangle_contains(const BipartiteGraph& g, const Rectangle& rect, const Entry& entry);
bool rectangle_contains(const BipartiteGraph& g, const MaximalRectangle& rect, const Entry& entry);

struct CoverReport {
  std::size_t entries_checked = 0;
  std::vector<std::size_t> uncovered;  // indices into the entry list

  bool complete() const { return uncovered.empty(); }
};

/// Lists the entries hit by no rectangle. Throws std::invalid_argument when
/// one of the rectangles is not contained in the support.
CoverReport verify_cover(const BipartiteGraph& g, std::span<const Rectangle> rects,
                         std::span<const Entry> entries);
CoverReport verify_cover(const BipartiteGraph& g, std::span<const MaximalRectangle> rects,
                         std::span<const Entry> entries);

/// All 1-entries of M(G) restricted to the given columns, row-major.
std::vector<Entry> support_entries(const BipartiteGraph& g, std::span<const StableSet> columns);

/// Dense 0/1 matrix.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j] != 0; }
  void set(int i, int j, bool value) { data_[static_cast<std::size_t>(i) * cols_ + j] = value ? 1 : 0; }

  /// 1-entries as (row, col), row-major.
  std::vector<std::pair<int, int>> support() const;

  static BinaryMatrix identity(int n);
  static BinaryMatrix ones(int rows, int cols);

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<unsigned char> data_;
};

/// M(G) with columns in the order of enumerate_stable_sets(g).
BinaryMatrix edge_stable_matrix(const BipartiteGraph& g);

/// Text format: "matrix <rows> <cols>" followed by one line per row of
/// space-separated 0/1 values.
void write_matrix(std::ostream& out, const BinaryMatrix& m);
BinaryMatrix read_matrix(std::istream& in);

struct MatrixRectangle {
  std::vector<int> rows;
  std::vector<int> cols;
};

inline constexpr std::size_t kMaxCoverSupport = 256;
inline constexpr std::size_t kMaxMaximalRectangles = 10000;
inline constexpr std::size_t kMaxFoolingSupport = 256;

/// Inclusion-maximal all-ones submatrices, found by closing row sets under
/// "common columns, then all rows sharing them" and deduplicating.
/// Throws std::length_error("instance too large for exact rc") past the
/// guards.
std::vector<MatrixRectangle> maximal_rectangles(const BinaryMatrix& m);

struct CoverResult {
  int size = 0;
  std::vector<MatrixRectangle> cover;
};

/// Exact rectangle covering number rc(M) by branch and bound over maximal
/// rectangles. Branches on the uncovered entry with fewest covering
/// rectangles; prunes with a greedily built set of pairwise incompatible
/// uncovered entries.
CoverResult min_cover_bruteforce(const BinaryMatrix& m);

/// Uncovered 1-entries (as indices into m.support()); also reports entries
/// outside the support if a rectangle contains a zero.
CoverReport verify_matrix_cover(const BinaryMatrix& m, std::span<const MatrixRectangle> cover);

struct FoolingResult {
  int size = 0;
  std::vector<std::pair<int, int>> entries;
};

/// Exact fool(M) as a maximum clique of the graph on 1-entries joining
/// (i,j), (k,l) when M[i][l] * M[k][j] == 0.
/// Throws std::length_error past kMaxFoolingSupport.
FoolingResult max_fooling_bruteforce(const BinaryMatrix& m);

/// True when every listed entry is a 1 and each distinct pair satisfies
/// M[i][l] * M[k][j] == 0.
bool is_fooling_set(const BinaryMatrix& m, std::span<const std::pair<int, int>> entries);

}  // namespace stabxc
