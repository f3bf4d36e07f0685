#include "stabxc/galois.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabxc {

namespace {

using Poly = std::vector<int>;  // coefficients c_0..c_d

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g over Z_p.
Poly poly_mod(Poly f, const Poly& g, int p) {
  trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int lead = f.back();
    for (int j = 0; j <= dg; ++j) {
      f[shift + j] = ((f[shift + j] - lead * g[j]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

Poly digits(int index, int p, int k) {
  Poly c(k, 0);
  for (int j = 0; j < k; ++j) {
    c[j] = index % p;
    index /= p;
  }
  return c;
}

int undigits(const Poly& c, int p) {
  int index = 0;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) index = index * p + c[j];
  return index;
}

int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> prime_power_decomposition(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, k);
}

bool is_irreducible(const std::vector<int>& coefficients, int p) {
  const int k = static_cast<int>(coefficients.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    for (int low = 0; low < ipow(p, d); ++low) {
      Poly divisor = digits(low, p, d);
      divisor.push_back(1);
      if (poly_mod(coefficients, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldTable FieldTable::make(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("not prime");
  if (k < 1 || k > 4) throw std::invalid_argument("unsupported degree");
  const int q = ipow(p, k);
  if (q > 64) throw std::invalid_argument("field too large");

  FieldTable f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;
  for (int low = 0; low < q; ++low) {
    Poly candidate = digits(low, p, k);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) {
      f.modulus_ = std::move(candidate);
      break;
    }
  }

  f.add_.assign(q * q, 0);
  f.mul_.assign(q * q, 0);
  f.neg_.assign(q, 0);
  f.inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const Poly ca = digits(a, p, k);
    Poly cn(k);
    for (int j = 0; j < k; ++j) cn[j] = (p - ca[j]) % p;
    f.neg_[a] = undigits(cn, p);
    for (int b = 0; b < q; ++b) {
      const Poly cb = digits(b, p, k);
      Poly sum(k);
      for (int j = 0; j < k; ++j) sum[j] = (ca[j] + cb[j]) % p;
      f.add_[a * q + b] = undigits(sum, p);

      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      }
      Poly reduced = poly_mod(prod, f.modulus_, p);
      reduced.resize(k, 0);
      f.mul_[a * q + b] = undigits(reduced, p);
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (f.mul_[a * q + b] == 1) {
        f.inv_[a] = b;
        break;
      }
    }
  }
  return f;
}

int FieldTable::inv(int a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

ProjTriple normalize(const FieldTable& field, ProjTriple t) {
  const auto lead = std::find_if(t.begin(), t.end(), [](int c) { return c != 0; });
  if (lead == t.end()) throw std::invalid_argument("zero triple");
  const int scale = field.inv(*lead);
  for (int& c : t) c = field.mul(c, scale);
  return t;
}

std::vector<ProjTriple> normalized_triples(const FieldTable& field) {
  const int q = field.order();
  std::vector<ProjTriple> out;
  out.reserve(q * q + q + 1);
  // Lexicographic order over (x, y, z) restricted to normalized triples:
  // (0,0,1), then (0,1,*), then (1,*,*).
  out.push_back({0, 0, 1});
  for (int z = 0; z < q; ++z) out.push_back({0, 1, z});
  for (int y = 0; y < q; ++y) {
    for (int z = 0; z < q; ++z) out.push_back({1, y, z});
  }
  return out;
}

std::vector<int> IncidenceGraph::points_on(int line) const {
  std::vector<int> out;
  for (int v : graph.neighbors(line_vertex(line))) out.push_back(v);
  return out;
}

std::vector<int> IncidenceGraph::lines_through(int point) const {
  std::vector<int> out;
  for (int v : graph.neighbors(point)) out.push_back(v - n());
  return out;
}

IncidenceGraph build_plane(int q) {
  const auto pk = prime_power_decomposition(q);
  if (!pk || q > 64) throw std::invalid_argument("q must be a prime power");
  const FieldTable field = FieldTable::make(pk->first, pk->second);

  IncidenceGraph g;
  g.q = q;
  g.points = normalized_triples(field);
  g.lines = g.points;
  const int n = static_cast<int>(g.points.size());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(q + 1) * n);
  for (int i = 0; i < n; ++i) {
    const ProjTriple& pt = g.points[i];
    for (int j = 0; j < n; ++j) {
      const ProjTriple& ln = g.lines[j];
      const int dot = field.add(field.add(field.mul(pt[0], ln[0]), field.mul(pt[1], ln[1])),
                                field.mul(pt[2], ln[2]));
      if (dot == 0) edges.push_back({i, n + j});
    }
  }
  g.graph = BipartiteGraph(n, n, std::move(edges));
  return g;
}

PlaneAxiomReport verify_plane_axioms(const IncidenceGraph& g) {
  PlaneAxiomReport report;
  const BipartiteGraph& bg = g.graph;
  const long long n = 1LL * g.q * g.q + g.q + 1;

  report.regular = bg.is_regular(g.q + 1);
  if (!report.regular) report.failures.push_back("not (q+1)-regular");

  report.counts = bg.a_size() == n && bg.b_size() == n && bg.num_edges() == (g.q + 1) * n;
  if (!report.counts) report.failures.push_back("vertex/edge counts differ from q^2+q+1 and (q+1)(q^2+q+1)");

  // Codegree of every pair of A-vertices, saturating at 2.
  const int a = bg.a_size();
  std::vector<unsigned char> codegree(static_cast<std::size_t>(a) * a, 0);
  for (int b = a; b < bg.num_vertices(); ++b) {
    const auto nbrs = bg.neighbors(b);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        auto& c = codegree[static_cast<std::size_t>(nbrs[i]) * a + nbrs[j]];
        if (c < 2) ++c;
      }
    }
  }
  bool at_most_one = true;
  bool exactly_one = true;
  for (int i = 0; i < a; ++i) {
    for (int j = i + 1; j < a; ++j) {
      const auto c = codegree[static_cast<std::size_t>(i) * a + j];
      at_most_one = at_most_one && c <= 1;
      exactly_one = exactly_one && c == 1;
    }
  }
  report.c4_free = at_most_one;
  report.unique_join = exactly_one;

  // BFS girth is quadratic in |V|; skip it for the largest planes, where the
  // codegree test above already decides C4-freeness.
  if (bg.num_vertices() <= 1200) {
    report.girth = girth(bg);
    const bool girth_ok = !report.girth || *report.girth >= 6;
    if (girth_ok != report.c4_free) {
      throw std::logic_error("girth and codegree disagree on C4-freeness");
    }
  }
  if (!report.c4_free) report.failures.push_back("contains a 4-cycle");
  if (!report.unique_join) report.failures.push_back("two points do not span exactly one line");
  return report;
}

}  // namespace stabxc
