#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "stabxc/bigraph.hpp"
#include "stabxc/slack.hpp"

namespace stabxc::testing {

// Raw 64-bit draws only, so streams match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }
  int below(int bound) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(bound)); }
  bool coin() { return (gen_() & 1U) != 0; }

 private:
  std::mt19937_64 gen_;
};

// Each A-B pair an edge with probability 1/2; isolated vertices get one edge.
inline BipartiteGraph random_bipartite(Rng& rng, int a, int b) {
  std::vector<Edge> edges;
  std::vector<bool> touched(a + b, false);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (rng.coin()) {
        edges.push_back({i, a + j});
        touched[i] = touched[a + j] = true;
      }
    }
  }
  for (int v = 0; v < a + b; ++v) {
    if (touched[v]) continue;
    const Edge e = v < a ? Edge{v, a + rng.below(b)} : Edge{rng.below(a), v};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    touched[e.a] = touched[e.b] = true;
  }
  return BipartiteGraph(a, b, edges);
}

inline BinaryMatrix random_matrix(Rng& rng, int rows, int cols) {
  BinaryMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.set(i, j, rng.coin());
  }
  return m;
}

inline VertexSet all_of(int n) {
  VertexSet s(n);
  s.set();
  return s;
}

}  // namespace stabxc::testing
