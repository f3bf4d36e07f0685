#include "stabxc/bigraph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace stabxc {

BipartiteGraph::BipartiteGraph(int a_size, int b_size, std::vector<Edge> edges)
    : a_size_(a_size), b_size_(b_size), edges_(std::move(edges)) {
  if (a_size < 0 || b_size < 0) throw std::invalid_argument("negative part size");
  const int n = a_size + b_size;
  adjacency_.assign(n, {});
  incident_edges_.assign(n, {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    if (e.a < 0 || e.a >= a_size || e.b < a_size || e.b >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                                  ") does not join A to B");
    }
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
    incident_edges_[e.a].push_back(i);
    incident_edges_[e.b].push_back(i);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("parallel edges");
    }
  }
}

bool BipartiteGraph::adjacent(int u, int v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int BipartiteGraph::edge_index(int u, int v) const {
  for (int i : incident_edges_[u]) {
    const Edge& e = edges_[i];
    if (e.a == v || e.b == v) return i;
  }
  return -1;
}

bool BipartiteGraph::has_isolated_vertices() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& nbrs) { return nbrs.empty(); });
}

bool BipartiteGraph::is_regular(int d) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [d](const auto& nbrs) { return static_cast<int>(nbrs.size()) == d; });
}

bool is_stable(const BipartiteGraph& g, const StableSet& s) {
  if (static_cast<int>(s.size()) != g.num_vertices()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return s.test(e.a) && s.test(e.b); });
}

namespace {

void enumerate_from(int v, int n, std::uint32_t chosen, std::uint32_t blocked,
                    const std::vector<std::uint32_t>& nbr_mask, std::vector<std::uint32_t>& out) {
  if (v == n) {
    out.push_back(chosen);
    return;
  }
  enumerate_from(v + 1, n, chosen, blocked, nbr_mask, out);
  if (!(blocked >> v & 1U)) {
    enumerate_from(v + 1, n, chosen | (1U << v), blocked | nbr_mask[v], nbr_mask, out);
  }
}

}  // namespace

std::vector<StableSet> enumerate_stable_sets(const BipartiteGraph& g) {
  const int n = g.num_vertices();
  if (n > kMaxEnumerationVertices) {
    throw std::length_error("graph too large for explicit enumeration");
  }
  std::vector<std::uint32_t> nbr_mask(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) nbr_mask[v] |= 1U << w;
  }
  std::vector<std::uint32_t> masks;
  enumerate_from(0, n, 0, 0, nbr_mask, masks);
  std::vector<StableSet> sets;
  sets.reserve(masks.size());
  for (std::uint32_t m : masks) sets.emplace_back(n, m);
  return sets;
}

std::optional<int> girth(const BipartiteGraph& g) {
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      if (2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          frontier.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

// Kuhn's augmenting path search restricted to edges still marked available.
bool augment(int a, const BipartiteGraph& g, const std::vector<char>& available,
             std::vector<int>& match_of_b, std::vector<char>& visited) {
  for (int b : g.neighbors(a)) {
    const int e = g.edge_index(a, b);
    if (!available[e]) continue;
    const int bi = b - g.a_size();
    if (visited[bi]) continue;
    visited[bi] = 1;
    if (match_of_b[bi] < 0 || augment(match_of_b[bi], g, available, match_of_b, visited)) {
      match_of_b[bi] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> edge_coloring_regular(const BipartiteGraph& g, int d) {
  if (d < 1 || !g.is_regular(d) || g.a_size() != g.b_size()) {
    throw std::invalid_argument("graph not d-regular");
  }
  std::vector<int> color(g.num_edges(), 0);
  std::vector<char> available(g.num_edges(), 1);
  for (int c = 1; c <= d; ++c) {
    std::vector<int> match_of_b(g.b_size(), -1);
    for (int a = 0; a < g.a_size(); ++a) {
      std::vector<char> visited(g.b_size(), 0);
      if (!augment(a, g, available, match_of_b, visited)) {
        throw std::logic_error("regular bipartite graph without a perfect matching");
      }
    }
    for (int bi = 0; bi < g.b_size(); ++bi) {
      const int e = g.edge_index(match_of_b[bi], bi + g.a_size());
      color[e] = c;
      available[e] = 0;
    }
  }
  return color;
}

bool is_proper_edge_coloring(const BipartiteGraph& g, std::span<const int> colors, int d) {
  if (static_cast<int>(colors.size()) != g.num_edges()) return false;
  const int n = g.num_vertices();
  std::vector<std::vector<int>> seen(n, std::vector<int>(d + 1, 0));
  for (int i = 0; i < g.num_edges(); ++i) {
    const int c = colors[i];
    if (c < 1 || c > d) return false;
    if (seen[g.edge(i).a][c]++ || seen[g.edge(i).b][c]++) return false;
  }
  // Each color class must saturate every vertex.
  for (int v = 0; v < n; ++v) {
    for (int c = 1; c <= d; ++c) {
      if (seen[v][c] != 1) return false;
    }
  }
  return true;
}

BipartiteGraph hexagonal_torus(int rows, int cols) {
  if (rows < 4 || cols < 4 || rows % 2 != 0 || cols % 2 != 0) {
    throw std::invalid_argument("hexagonal torus needs even rows, cols >= 4");
  }
  const int total = rows * cols;
  // Row-major grid position -> global index, A side first.
  std::vector<int> relabel(total);
  int next_a = 0;
  int next_b = total / 2;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      relabel[i * cols + j] = (i + j) % 2 == 0 ? next_a++ : next_b++;
    }
  }
  auto at = [&](int i, int j) { return relabel[((i % rows + rows) % rows) * cols + j]; };
  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) {
        add(at(i, j), at(i, j + 1));
      } else {
        add(at(i, j), at(i + 2, 0));
      }
      if ((i + j) % 2 == 0) add(at(i, j), at(i + 1, j));
    }
  }
  std::sort(edges.begin(), edges.end());
  return BipartiteGraph(total / 2, total / 2, std::move(edges));
}

BipartiteGraph complete_bipartite(int s, int t) {
  std::vector<Edge> edges;
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < t; ++b) edges.push_back({a, s + b});
  }
  return BipartiteGraph(s, t, std::move(edges));
}

BipartiteGraph even_cycle(int length) {
  if (length < 4 || length % 2 != 0) throw std::invalid_argument("even cycle needs even length >= 4");
  const int half = length / 2;
  // Cycle order a_0 b_0 a_1 b_1 ... ; a_i ~ b_i and a_{i+1} ~ b_i.
  std::vector<Edge> edges;
  for (int i = 0; i < half; ++i) {
    edges.push_back({i, half + i});
    edges.push_back({(i + 1) % half, half + i});
  }
  std::sort(edges.begin(), edges.end());
  return BipartiteGraph(half, half, std::move(edges));
}

BipartiteGraph path_graph(int vertices) {
  if (vertices < 2) throw std::invalid_argument("path needs at least 2 vertices");
  const int a_size = (vertices + 1) / 2;
  // Path position k -> A index k/2 for even k, B index a_size + k/2 for odd k.
  auto id = [&](int k) { return k % 2 == 0 ? k / 2 : a_size + k / 2; };
  std::vector<Edge> edges;
  for (int k = 0; k + 1 < vertices; ++k) {
    const int u = id(k), v = id(k + 1);
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(edges.begin(), edges.end());
  return BipartiteGraph(a_size, vertices / 2, std::move(edges));
}

BipartiteGraph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2) throw std::invalid_argument("grid too small");
  std::vector<int> relabel(rows * cols);
  const int a_size = (rows * cols + 1) / 2;
  int next_a = 0, next_b = a_size;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) relabel[i * cols + j] = (i + j) % 2 == 0 ? next_a++ : next_b++;
  }
  std::vector<Edge> edges;
  auto add = [&](int u, int v) { edges.push_back({std::min(u, v), std::max(u, v)}); };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) add(relabel[i * cols + j], relabel[i * cols + j + 1]);
      if (i + 1 < rows) add(relabel[i * cols + j], relabel[(i + 1) * cols + j]);
    }
  }
  std::sort(edges.begin(), edges.end());
  return BipartiteGraph(a_size, rows * cols - a_size, std::move(edges));
}

void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << "bipartite " << g.a_size() << ' ' << g.b_size() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
}

BipartiteGraph read_graph(std::istream& in) {
  std::string tag;
  int a_size = 0, b_size = 0, m = 0;
  if (!(in >> tag >> a_size >> b_size >> m) || tag != "bipartite" || m < 0) {
    throw std::invalid_argument("malformed graph header (expected 'bipartite <a> <b> <m>')");
  }
  std::vector<Edge> edges(m);
  for (auto& e : edges) {
    if (!(in >> e.a >> e.b)) throw std::invalid_argument("graph file truncated");
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  return BipartiteGraph(a_size, b_size, std::move(edges));
}

}  // namespace stabxc
