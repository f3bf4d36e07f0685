#include <gtest/gtest.h>

#include <sstream>

#include "stabxc/bigraph.hpp"
#include "support.hpp"

using namespace stabxc;
using stabxc::testing::Rng;

namespace {

long lucas(int n) {
  long a = 2, b = 1;
  for (int i = 0; i < n; ++i) {
    const long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

// Stable sets counted by subset scan.
long count_stable_naive(const BipartiteGraph& g) {
  const int n = g.num_vertices();
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if ((mask >> e.a & 1U) && (mask >> e.b & 1U)) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

// Shortest cycle by BFS from every vertex over an adjacency matrix.
std::optional<int> girth_naive(const BipartiteGraph& g) {
  const int n = g.num_vertices();
  std::optional<int> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int u = queue[i];
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          const int len = dist[u] + dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST(Bigraph, ConstructionErrors) {
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 4}}), std::invalid_argument);
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 2}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(even_cycle(3), std::invalid_argument);
  EXPECT_THROW(hexagonal_torus(4, 5), std::invalid_argument);
  EXPECT_THROW(hexagonal_torus(2, 4), std::invalid_argument);
}

TEST(Bigraph, StableSetCountsFollowLucas) {
  for (int len : {4, 6, 8, 10}) {
    const BipartiteGraph c = even_cycle(len);
    EXPECT_EQ(static_cast<long>(enumerate_stable_sets(c).size()), lucas(len)) << "C" << len;
  }
  EXPECT_EQ(enumerate_stable_sets(even_cycle(4)).size(), 7U);
  EXPECT_EQ(enumerate_stable_sets(even_cycle(6)).size(), 18U);
  EXPECT_EQ(enumerate_stable_sets(even_cycle(8)).size(), 47U);
  EXPECT_EQ(enumerate_stable_sets(path_graph(4)).size(), 8U);
}

TEST(Bigraph, EnumerationAgreesWithSubsetScan) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const BipartiteGraph g = stabxc::testing::random_bipartite(rng, 1 + rng.below(5), 1 + rng.below(5));
    const auto sets = enumerate_stable_sets(g);
    EXPECT_EQ(static_cast<long>(sets.size()), count_stable_naive(g));
    EXPECT_TRUE(sets.front().none());
    for (const auto& s : sets) EXPECT_TRUE(is_stable(g, s));
  }
}

TEST(Bigraph, EnumerationGuard) {
  EXPECT_THROW(enumerate_stable_sets(even_cycle(32)), std::length_error);
}

TEST(Bigraph, GirthAgreesWithBfs) {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const BipartiteGraph g = stabxc::testing::random_bipartite(rng, 2 + rng.below(5), 2 + rng.below(5));
    EXPECT_EQ(girth(g), girth_naive(g));
  }
  EXPECT_EQ(girth(even_cycle(10)), 10);
  EXPECT_EQ(girth(path_graph(5)), std::nullopt);
  EXPECT_EQ(girth(complete_bipartite(2, 3)), 4);
}

TEST(Bigraph, TorusIsCubicGirthSix) {
  for (auto [r, c] : {std::pair{4, 4}, {4, 6}, {6, 6}, {6, 8}, {8, 8}}) {
    const BipartiteGraph g = hexagonal_torus(r, c);
    EXPECT_EQ(g.num_vertices(), r * c);
    EXPECT_EQ(g.a_size(), g.b_size());
    EXPECT_TRUE(g.is_regular(3));
    EXPECT_EQ(girth(g), 6) << r << "x" << c;
  }
}

TEST(Bigraph, EdgeColoringIsProper) {
  for (int d = 1; d <= 5; ++d) {
    const BipartiteGraph k = complete_bipartite(d, d);
    const auto colors = edge_coloring_regular(k, d);
    EXPECT_TRUE(is_proper_edge_coloring(k, colors, d));
  }
  const BipartiteGraph t = hexagonal_torus(6, 6);
  auto colors = edge_coloring_regular(t, 3);
  EXPECT_TRUE(is_proper_edge_coloring(t, colors, 3));
  std::swap(colors[0], colors[1]);
  if (colors[0] != colors[1]) {
    EXPECT_FALSE(is_proper_edge_coloring(t, colors, 3));
  }
  EXPECT_THROW(edge_coloring_regular(path_graph(4), 2), std::invalid_argument);
}

TEST(Bigraph, Generators) {
  const BipartiteGraph g = grid_graph(3, 3);
  EXPECT_EQ(g.num_vertices(), 9);
  EXPECT_EQ(g.num_edges(), 12);
  EXPECT_EQ(g.a_size(), 5);
  const BipartiteGraph k = complete_bipartite(2, 3);
  EXPECT_EQ(k.num_edges(), 6);
  EXPECT_TRUE(k.adjacent(0, 4));
  EXPECT_EQ(k.edge_index(1, 2), 3);
  EXPECT_EQ(k.edge_index(0, 1), -1);
  EXPECT_FALSE(k.has_isolated_vertices());
  EXPECT_TRUE(BipartiteGraph(2, 1, {{0, 2}}).has_isolated_vertices());
}

TEST(Bigraph, TextRoundTrip) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const BipartiteGraph g = stabxc::testing::random_bipartite(rng, 1 + rng.below(6), 1 + rng.below(6));
    std::stringstream ss;
    write_graph(ss, g);
    const BipartiteGraph h = read_graph(ss);
    EXPECT_EQ(h.a_size(), g.a_size());
    EXPECT_EQ(h.b_size(), g.b_size());
    EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end()));
  }
  std::istringstream bad("bipartite 2 2 3\n0 2\n");
  EXPECT_THROW(read_graph(bad), std::invalid_argument);
}
