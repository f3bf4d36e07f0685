#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stabxc/bigraph.hpp"
#include "stabxc/exact_lp.hpp"

namespace stabxc {

/// Complete bipartite subgraph a_side x b_side (global vertex ids).
struct Biclique {
  std::vector<int> a_side;
  std::vector<int> b_side;

  int weight() const { return static_cast<int>(a_side.size() + b_side.size()); }
  friend bool operator==(const Biclique&, const Biclique&) = default;
};

bool is_biclique(const BipartiteGraph& g, const Biclique& b);

/// Every edge in some biclique and every biclique complete.
bool is_biclique_cover(const BipartiteGraph& g, const std::vector<Biclique>& cover);

/// Greedy cover: candidates are the stars of all vertices, the closures of
/// those stars, and the closures of common neighborhoods of vertex pairs on
/// either side. Each round takes the candidate with the best ratio of newly
/// covered edges to weight, compared exactly, earliest candidate on ties.
/// Throws std::invalid_argument("graph has isolated vertices").
std::vector<Biclique> greedy_biclique_cover(const BipartiteGraph& g);

int total_weight(const std::vector<Biclique>& cover);

/// Edge-polytope extension by disjunctive union of simplex products.
/// Variables: y_v (original), then per biclique lambda_i and y^i_v.
struct EdgeExtension {
  LinearSystem system;
  std::vector<Biclique> cover;
  std::vector<int> lambda;                    // var of lambda_i
  std::vector<std::vector<int>> block_var;    // block_var[i][v] or -1
  std::vector<int> lambda_sign_row;           // inequality row -lambda_i <= 0
  std::vector<std::vector<int>> block_sign_row;
  std::vector<int> a_row, b_row;              // equation rows per biclique
  int simplex_row = -1;                       // sum lambda = 1
  std::vector<int> link_row;                  // y_v - sum_i y^i_v = 0
};

/// Throws std::invalid_argument("invalid biclique cover").
EdgeExtension edge_polytope_union_ef(const BipartiteGraph& g, const std::vector<Biclique>& cover);

/// Point of the edge extension projecting to the indicator of edge `edge`.
std::vector<Rational> edge_lift(const BipartiteGraph& g, const EdgeExtension& ef, int edge);

/// Extension of { x >= 0 : <x, y> <= 1 for every y in the projection of
/// edge_ef } built from LP duality. Variables: x (original, one per vertex),
/// one multiplier per inequality row of edge_ef (nonnegative), one free
/// multiplier per equation row. Rows: stationarity equations (one per
/// edge_ef variable), sign rows of the inequality multipliers, the dual
/// objective <= 1, and x >= 0.
struct StabExtension {
  LinearSystem system;
  int num_vertices = 0;
  int first_ineq_multiplier = 0;
  int first_eq_multiplier = 0;
  int objective_row = -1;
};

/// Throws std::invalid_argument("extension must be bounded") when the edge
/// extension is not structurally bounded.
StabExtension martin_dual_ef(const EdgeExtension& edge_ef, const BipartiteGraph& g);

/// Point of the stab extension over the indicator of a stable set: the
/// multipliers of the block equations are the maxima of x over each side,
/// the simplex equation gets 1, and the sign multipliers take up the slack.
std::vector<Rational> stable_set_lift(const BipartiteGraph& g, const EdgeExtension& edge_ef,
                                      const StabExtension& stab, const StableSet& s);

struct ExtensionSize {
  std::size_t bicliques = 0;
  std::size_t total_weight = 0;
  std::size_t edge_inequalities = 0;  // total_weight + bicliques
  std::size_t stab_inequalities = 0;  // edge_inequalities + 1 + n
  bool accounting_ok = false;
};

ExtensionSize extension_size(const BipartiteGraph& g, const EdgeExtension& edge_ef, const StabExtension& stab);

inline constexpr int kMaxStabVerifyVertices = 12;

struct StabVerifyReport {
  std::size_t stable_sets = 0;
  std::size_t lifts_ok = 0;            // inner leg
  std::size_t facets = 0;
  std::size_t facets_ok = 0;           // outer leg
  std::size_t edges_attaining_one = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && lifts_ok == stable_sets && facets_ok == facets; }
};

/// Inner leg: every stable set has a lift satisfying all rows exactly.
/// Outer leg: exact LP max of x_u + x_v over the extension is <= 1 for each
/// edge, and max of -x_v is <= 0 for each vertex.
/// Throws std::length_error for more than kMaxStabVerifyVertices vertices.
StabVerifyReport verify_stab_ef(const BipartiteGraph& g, const EdgeExtension& edge_ef, const StabExtension& stab);

}  // namespace stabxc
