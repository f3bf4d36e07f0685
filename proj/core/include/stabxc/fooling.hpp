#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabxc/bigraph.hpp"
#include "stabxc/slack.hpp"

namespace stabxc {

enum class FoolingSource { cubic_construction, bruteforce, manual };

struct FoolingEntry {
  Edge edge;
  StableSet column;
};

/// Fooling set of M(G): support entries (e, S) such that for distinct
/// (e, S), (f, T) either e meets T or f meets S.
struct FoolingSet {
  std::vector<FoolingEntry> entries;
  FoolingSource source = FoolingSource::manual;

  std::size_t size() const { return entries.size(); }
};

/// Tight fooling set of a cubic C4-free bipartite graph together with the
/// coloring that names each A-vertex's neighbors.
struct CubicFoolingConstruction {
  FoolingSet fooling;
  std::vector<int> edge_color;                 // 1..3, indexed like g.edges()
  std::vector<std::array<int, 3>> named;       // named[a][i-1] = a_i
};

/// For every a in A with neighbors a_1, a_2, a_3 (edge aa_i colored i):
///   (aa_1, A \ {a}),
///   (aa_2, {a_1} + {a' in A : a' not adjacent to a_1}),
///   (aa_3, B \ {a_3}).
/// Entries are listed by a, then by color.
/// Throws std::invalid_argument naming the failed precondition
/// ("graph is not 3-regular" or "graph is not C4-free").
CubicFoolingConstruction build_cubic_fooling_set(const BipartiteGraph& g);

/// Convenience wrapper returning only the fooling set.
FoolingSet cubic_fooling_set(const BipartiteGraph& g);

struct FoolingVerdict {
  bool ok = false;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;

  explicit operator bool() const { return ok; }
};

/// Checks support membership, column stability and the pairwise condition.
FoolingVerdict verify_fooling_set(const BipartiteGraph& g, const FoolingSet& fs);

/// Which case of the cubic construction's correctness argument separates a
/// pair, plus the vertex that witnesses it.
enum class CubicProofCase { color1 = 1, color3 = 2, both_color2 = 3 };

struct PairResolution {
  CubicProofCase proof_case;
  int witness;             // vertex in (S_e meets f) or (S_f meets e)
  bool witness_in_first;   // true: witness in S_e and f; false: in S_f and e
};

/// Follows the three-case argument for the pair (e, f) of distinct edges,
/// returning the case used and a concrete separating vertex. Throws
/// std::logic_error if the claimed witness does not separate the pair.
PairResolution resolve_pair(const BipartiteGraph& g, const CubicFoolingConstruction& c,
                            int edge_e, int edge_f);

/// Subgraph given in the parent's vertex numbering.
struct Subgraph {
  VertexSet vertices;
  std::vector<Edge> edges;
};

/// Restricts a verified fooling set of g to the edges of h (columns
/// intersected with V(h)) and re-verifies it inside h.
/// Throws std::invalid_argument("not a subgraph") when h is not a subgraph
/// of g.
FoolingVerdict subgraph_closure_check(const BipartiteGraph& g, const FoolingSet& parent,
                                      const Subgraph& h, FoolingSet* restricted = nullptr);

/// One line per entry: "<a_vertex> <b_vertex> : <sorted members>".
void write_fooling_set(std::ostream& out, const FoolingSet& fs);
FoolingSet read_fooling_set(std::istream& in, int num_vertices);

}  // namespace stabxc
