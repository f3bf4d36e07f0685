#include "stabxc/fooling.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stabxc {

CubicFoolingConstruction build_cubic_fooling_set(const BipartiteGraph& g) {
  if (!g.is_regular(3)) throw std::invalid_argument("graph is not 3-regular");
  const auto gth = girth(g);
  if (gth && *gth < 6) throw std::invalid_argument("graph is not C4-free");

  CubicFoolingConstruction c;
  c.edge_color = edge_coloring_regular(g, 3);
  c.named.assign(g.a_size(), {-1, -1, -1});
  for (int i = 0; i < g.num_edges(); ++i) {
    c.named[g.edge(i).a][c.edge_color[i] - 1] = g.edge(i).b;
  }

  const int nv = g.num_vertices();
  StableSet all_a(nv), all_b(nv);
  for (int v = 0; v < nv; ++v) (g.in_a(v) ? all_a : all_b).set(v);

  c.fooling.source = FoolingSource::cubic_construction;
  for (int a = 0; a < g.a_size(); ++a) {
    const auto& [a1, a2, a3] = c.named[a];

    StableSet s1 = all_a;
    s1.reset(a);

    StableSet s2(nv);
    s2.set(a1);
    for (int other = 0; other < g.a_size(); ++other) {
      if (!g.adjacent(other, a1)) s2.set(other);
    }

    StableSet s3 = all_b;
    s3.reset(a3);

    c.fooling.entries.push_back({{a, a1}, std::move(s1)});
    c.fooling.entries.push_back({{a, a2}, std::move(s2)});
    c.fooling.entries.push_back({{a, a3}, std::move(s3)});
  }
  return c;
}

FoolingSet cubic_fooling_set(const BipartiteGraph& g) {
  return build_cubic_fooling_set(g).fooling;
}

namespace {

bool meets(const StableSet& s, const Edge& e) { return s.test(e.a) || s.test(e.b); }

}  // namespace

FoolingVerdict verify_fooling_set(const BipartiteGraph& g, const FoolingSet& fs) {
  FoolingVerdict verdict;
  for (std::size_t i = 0; i < fs.entries.size(); ++i) {
    const auto& [edge, column] = fs.entries[i];
    if (g.edge_index(edge.a, edge.b) < 0) {
      verdict.reason = "entry " + std::to_string(i) + " is not an edge";
      return verdict;
    }
    if (!is_stable(g, column)) {
      verdict.reason = "entry " + std::to_string(i) + " has a non-stable column";
      return verdict;
    }
    if (meets(column, edge)) {
      verdict.reason = "entry " + std::to_string(i) + " is not in the support";
      return verdict;
    }
  }
  for (std::size_t i = 0; i < fs.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.entries.size(); ++j) {
      const auto& x = fs.entries[i];
      const auto& y = fs.entries[j];
      if (!meets(x.column, y.edge) && !meets(y.column, x.edge)) {
        verdict.reason = "entries " + std::to_string(i) + " and " + std::to_string(j) +
                         " fit in a common rectangle";
        verdict.counterexample = std::make_pair(i, j);
        return verdict;
      }
    }
  }
  verdict.ok = true;
  return verdict;
}

PairResolution resolve_pair(const BipartiteGraph& g, const CubicFoolingConstruction& c,
                            int edge_e, int edge_f) {
  if (edge_e == edge_f) throw std::invalid_argument("resolve_pair needs distinct edges");
  // Entries are stored as 3 * a + (color - 1).
  auto entry_of = [&](int edge) -> const FoolingEntry& {
    return c.fooling.entries[3 * g.edge(edge).a + c.edge_color[edge] - 1];
  };
  auto check = [&](PairResolution r, int first, int second) {
    const FoolingEntry& x = entry_of(first);
    const FoolingEntry& y = entry_of(second);
    const bool ok = r.witness_in_first
                        ? x.column.test(r.witness) && (y.edge.a == r.witness || y.edge.b == r.witness)
                        : y.column.test(r.witness) && (x.edge.a == r.witness || x.edge.b == r.witness);
    if (!ok) throw std::logic_error("case analysis produced a non-separating witness");
    return r;
  };
  // Swapping roles flips which side carries the witness.
  auto swapped = [](PairResolution r) {
    r.witness_in_first = !r.witness_in_first;
    return r;
  };

  const int ce = c.edge_color[edge_e];
  const int cf = c.edge_color[edge_f];
  const Edge& e = g.edge(edge_e);
  const Edge& f = g.edge(edge_f);

  // S_e = A \ {a} meets f unless f leaves a; then a_1 lies in S_f and e.
  auto color1 = [&](const Edge& one, const Edge& other) {
    if (other.a != one.a) return PairResolution{CubicProofCase::color1, other.a, true};
    return PairResolution{CubicProofCase::color1, c.named[one.a][0], false};
  };
  // S_e = B \ {a_3} meets f unless f ends at a_3; then f has color 2 and
  // C4-freeness puts a outside N(a'_1), so a lies in S_f.
  auto color3 = [&](const Edge& three, const Edge& other) {
    if (other.b != three.b) return PairResolution{CubicProofCase::color3, other.b, true};
    return PairResolution{CubicProofCase::color3, three.a, false};
  };

  if (ce == 1) return check(color1(e, f), edge_e, edge_f);
  if (cf == 1) return check(swapped(color1(f, e)), edge_e, edge_f);
  if (ce == 3) return check(color3(e, f), edge_e, edge_f);
  if (cf == 3) return check(swapped(color3(f, e)), edge_e, edge_f);

  // Both colored 2: a not adjacent to a'_1, or a' not adjacent to a_1.
  const int a = e.a;
  const int ap = f.a;
  if (!g.adjacent(a, c.named[ap][0])) {
    return check(PairResolution{CubicProofCase::both_color2, a, false}, edge_e, edge_f);
  }
  return check(PairResolution{CubicProofCase::both_color2, ap, true}, edge_e, edge_f);
}

FoolingVerdict subgraph_closure_check(const BipartiteGraph& g, const FoolingSet& parent,
                                      const Subgraph& h, FoolingSet* restricted) {
  if (static_cast<int>(h.vertices.size()) != g.num_vertices()) throw std::invalid_argument("not a subgraph");
  std::vector<Edge> h_edges;
  for (Edge e : h.edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (g.edge_index(e.a, e.b) < 0 || !h.vertices.test(e.a) || !h.vertices.test(e.b)) {
      throw std::invalid_argument("not a subgraph");
    }
    h_edges.push_back(e);
  }
  std::map<Edge, const FoolingEntry*> by_edge;
  for (const auto& entry : parent.entries) by_edge[entry.edge] = &entry;

  FoolingSet out;
  out.source = parent.source;
  for (const Edge& e : h_edges) {
    const auto it = by_edge.find(e);
    if (it == by_edge.end()) throw std::invalid_argument("parent fooling set misses an edge of the subgraph");
    out.entries.push_back({e, it->second->column & h.vertices});
  }
  const BipartiteGraph hg(g.a_size(), g.b_size(), std::move(h_edges));
  FoolingVerdict verdict = verify_fooling_set(hg, out);
  if (restricted) *restricted = std::move(out);
  return verdict;
}

void write_fooling_set(std::ostream& out, const FoolingSet& fs) {
  for (const auto& entry : fs.entries) {
    out << entry.edge.a << ' ' << entry.edge.b << " :";
    for (int v : members(entry.column)) out << ' ' << v;
    out << '\n';
  }
}

FoolingSet read_fooling_set(std::istream& in, int num_vertices) {
  FoolingSet fs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    FoolingEntry entry{{}, StableSet(num_vertices)};
    std::string colon;
    if (!(ls >> entry.edge.a >> entry.edge.b >> colon) || colon != ":") {
      throw std::invalid_argument("malformed fooling-set line: " + line);
    }
    const auto in_range = [&](int x) { return x >= 0 && x < num_vertices; };
    if (!in_range(entry.edge.a) || !in_range(entry.edge.b)) {
      throw std::invalid_argument("vertex out of range in fooling set");
    }
    int v = 0;
    while (ls >> v) {
      if (v < 0 || v >= num_vertices) throw std::invalid_argument("vertex out of range in fooling set");
      entry.column.set(v);
    }
    fs.entries.push_back(std::move(entry));
  }
  return fs;
}

}  // namespace stabxc
