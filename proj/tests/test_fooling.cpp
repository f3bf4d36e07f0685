#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

#include "stabxc/fooling.hpp"
#include "stabxc/galois.hpp"

using namespace stabxc;

namespace {

// Pairwise condition straight from the definition, without the library.
bool fooling_by_definition(const BipartiteGraph& g, const FoolingSet& fs) {
  for (const auto& x : fs.entries) {
    if (x.column.test(x.edge.a) || x.column.test(x.edge.b)) return false;
    for (const Edge& e : g.edges()) {
      if (x.column.test(e.a) && x.column.test(e.b)) return false;
    }
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const auto& x = fs.entries[i];
      const auto& y = fs.entries[j];
      const bool sep = y.column.test(x.edge.a) || y.column.test(x.edge.b) || x.column.test(y.edge.a) ||
                       x.column.test(y.edge.b);
      if (!sep) return false;
    }
  }
  return true;
}

Subgraph whole(const BipartiteGraph& g) {
  Subgraph h{VertexSet(g.num_vertices()), {}};
  h.vertices.set();
  h.edges.assign(g.edges().begin(), g.edges().end());
  return h;
}

}  // namespace

TEST(Fooling, HeawoodTight) {
  const BipartiteGraph g = build_plane(2).graph;
  const CubicFoolingConstruction c = build_cubic_fooling_set(g);
  EXPECT_EQ(c.fooling.size(), 21U);
  EXPECT_TRUE(verify_fooling_set(g, c.fooling).ok);
  EXPECT_TRUE(fooling_by_definition(g, c.fooling));
  EXPECT_TRUE(is_proper_edge_coloring(g, c.edge_color, 3));
  std::set<std::vector<int>> columns;
  for (const auto& e : c.fooling.entries) columns.insert(members(e.column));
  EXPECT_EQ(columns.size(), 21U);
}

TEST(Fooling, ToriAreTight) {
  for (auto [r, cols] : {std::pair{4, 4}, {4, 6}, {6, 6}, {6, 8}, {8, 8}}) {
    const BipartiteGraph g = hexagonal_torus(r, cols);
    const FoolingSet fs = cubic_fooling_set(g);
    EXPECT_EQ(static_cast<int>(fs.size()), g.num_edges());
    EXPECT_TRUE(verify_fooling_set(g, fs).ok) << r << "x" << cols;
    EXPECT_TRUE(fooling_by_definition(g, fs));
  }
}

TEST(Fooling, PreconditionErrors) {
  EXPECT_THROW(build_cubic_fooling_set(complete_bipartite(3, 3)), std::invalid_argument);
  EXPECT_THROW(build_cubic_fooling_set(even_cycle(6)), std::invalid_argument);
}

TEST(Fooling, EveryProofCaseOccurs) {
  const BipartiteGraph g = build_plane(2).graph;
  const CubicFoolingConstruction c = build_cubic_fooling_set(g);
  std::map<CubicProofCase, int> counts;
  for (int e = 0; e < g.num_edges(); ++e) {
    for (int f = e + 1; f < g.num_edges(); ++f) {
      const PairResolution pr = resolve_pair(g, c, e, f);
      ++counts[pr.proof_case];
      const Edge& first = g.edge(e);
      const Edge& second = g.edge(f);
      const auto column_of = [&](int idx) {
        for (const auto& x : c.fooling.entries) {
          if (x.edge == g.edge(idx)) return x.column;
        }
        return VertexSet();
      };
      const VertexSet col = column_of(pr.witness_in_first ? e : f);
      const Edge& other = pr.witness_in_first ? second : first;
      EXPECT_TRUE(col.test(pr.witness));
      EXPECT_TRUE(pr.witness == other.a || pr.witness == other.b);
    }
  }
  EXPECT_EQ(counts.size(), 3U);
  EXPECT_EQ(counts[CubicProofCase::color1] + counts[CubicProofCase::color3] + counts[CubicProofCase::both_color2],
            21 * 20 / 2);
  EXPECT_EQ(counts[CubicProofCase::both_color2], 21);
  EXPECT_THROW(resolve_pair(g, c, 0, 0), std::invalid_argument);
}

TEST(Fooling, SubgraphClosure) {
  const BipartiteGraph g = build_plane(2).graph;
  const FoolingSet fs = cubic_fooling_set(g);

  Subgraph minus = whole(g);
  minus.edges.pop_back();
  FoolingSet restricted;
  EXPECT_TRUE(subgraph_closure_check(g, fs, minus, &restricted).ok);
  EXPECT_EQ(restricted.size(), 20U);

  // A hexagon through edge 0: 6 entries survive the restriction.
  const Edge cyc_start = g.edge(0);
  std::vector<int> hex;
  for (int u1 : g.neighbors(cyc_start.b)) {
    if (u1 == cyc_start.a) continue;
    for (int u2 : g.neighbors(u1)) {
      if (u2 == cyc_start.b) continue;
      for (int u3 : g.neighbors(u2)) {
        if (u3 == u1) continue;
        for (int u4 : g.neighbors(u3)) {
          if (u4 == u2 || u4 == cyc_start.b || !g.adjacent(u4, cyc_start.a)) continue;
          hex = {cyc_start.a, cyc_start.b, u1, u2, u3, u4};
          break;
        }
        if (!hex.empty()) break;
      }
      if (!hex.empty()) break;
    }
    if (!hex.empty()) break;
  }
  ASSERT_EQ(hex.size(), 6U);
  Subgraph c6{VertexSet(g.num_vertices()), {}};
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const int u = hex[i];
    const int v = hex[(i + 1) % hex.size()];
    c6.vertices.set(u);
    c6.edges.push_back(g.in_a(u) ? Edge{u, v} : Edge{v, u});
  }
  EXPECT_TRUE(subgraph_closure_check(g, fs, c6, &restricted).ok);
  EXPECT_EQ(restricted.size(), 6U);

  Subgraph single{VertexSet(g.num_vertices()), {g.edge(3)}};
  single.vertices.set(g.edge(3).a);
  single.vertices.set(g.edge(3).b);
  EXPECT_TRUE(subgraph_closure_check(g, fs, single, &restricted).ok);
  EXPECT_EQ(restricted.size(), 1U);

  Subgraph foreign = whole(g);
  int b = g.a_size();
  while (g.adjacent(0, b)) ++b;
  foreign.edges.push_back({0, b});
  EXPECT_THROW(subgraph_closure_check(g, fs, foreign), std::invalid_argument);
}

TEST(Fooling, CorruptedSetsFail) {
  const BipartiteGraph g = build_plane(2).graph;
  FoolingSet fs = cubic_fooling_set(g);

  FoolingSet dup = fs;
  dup.entries[1].column = dup.entries[0].column;
  dup.entries[1].edge = dup.entries[0].edge;
  const FoolingVerdict v = verify_fooling_set(g, dup);
  EXPECT_FALSE(v.ok);
  EXPECT_TRUE(v.counterexample.has_value());

  FoolingSet meets = fs;
  meets.entries[0].column.set(meets.entries[0].edge.a);
  EXPECT_FALSE(verify_fooling_set(g, meets).ok);

  FoolingSet unstable = fs;
  unstable.entries[0].column.set();
  EXPECT_FALSE(verify_fooling_set(g, unstable).ok);
}

TEST(Fooling, TextRoundTrip) {
  const BipartiteGraph g = hexagonal_torus(4, 6);
  const FoolingSet fs = cubic_fooling_set(g);
  std::stringstream ss;
  write_fooling_set(ss, fs);
  const FoolingSet back = read_fooling_set(ss, g.num_vertices());
  ASSERT_EQ(back.size(), fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    EXPECT_EQ(back.entries[i].edge, fs.entries[i].edge);
    EXPECT_EQ(back.entries[i].column, fs.entries[i].column);
  }
  EXPECT_TRUE(verify_fooling_set(g, back).ok);
  std::istringstream bad("0 99 : 1 2\n");
  EXPECT_THROW(read_fooling_set(bad, 10), std::invalid_argument);
}
