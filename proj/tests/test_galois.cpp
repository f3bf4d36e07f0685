#include <gtest/gtest.h>

#include <set>

#include "stabxc/galois.hpp"

using namespace stabxc;

namespace {

// Evaluates the modulus at every element of Z_p by hand.
bool has_root(const std::vector<int>& c, int p) {
  for (int x = 0; x < p; ++x) {
    long v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = (v * x + *it) % p;
    if (v == 0) return true;
  }
  return false;
}

std::vector<int> orders_up_to(int limit) {
  std::vector<int> out;
  for (int q = 2; q <= limit; ++q) {
    if (prime_power_decomposition(q)) out.push_back(q);
  }
  return out;
}

// Orders whose field the tables support: exponent at most 4.
std::vector<int> table_orders() {
  std::vector<int> out;
  for (int q : orders_up_to(64)) {
    if (prime_power_decomposition(q)->second <= 4) out.push_back(q);
  }
  return out;
}

}  // namespace

TEST(Galois, PrimePowerDecomposition) {
  EXPECT_EQ(orders_up_to(32), (std::vector<int>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32}));
  EXPECT_EQ(prime_power_decomposition(27), std::make_pair(3, 3));
  EXPECT_FALSE(prime_power_decomposition(6));
  EXPECT_FALSE(prime_power_decomposition(1));
  EXPECT_TRUE(is_prime(61));
  EXPECT_FALSE(is_prime(91));
}

TEST(Galois, FieldAxiomsForEveryOrder) {
  for (int q : table_orders()) {
    const auto [p, k] = *prime_power_decomposition(q);
    const FieldTable f = FieldTable::make(p, k);
    ASSERT_EQ(f.order(), q);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1) << "q=" << q << " a=" << a;
      }
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        if (a != 0 && b != 0) {
          EXPECT_NE(f.mul(a, b), 0);
        }
      }
    }
    // Distributivity and associativity on a stride so q=64 stays quick.
    const int step = q > 16 ? 5 : 1;
    for (int a = 0; a < q; a += step) {
      for (int b = 0; b < q; b += step) {
        for (int c = 0; c < q; c += step) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          EXPECT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
          EXPECT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        }
      }
    }
  }
}

TEST(Galois, ModulusGoldens) {
  EXPECT_EQ(FieldTable::make(2, 3).modulus(), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(FieldTable::make(3, 2).modulus(), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(FieldTable::make(2, 2).modulus(), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(FieldTable::make(5, 1).modulus().size(), 2U);
}

TEST(Galois, ModulusIsIrreducible) {
  for (int q : table_orders()) {
    const auto [p, k] = *prime_power_decomposition(q);
    const FieldTable f = FieldTable::make(p, k);
    const auto& m = f.modulus();
    EXPECT_TRUE(is_irreducible(m, p));
    // Degrees 2 and 3 are irreducible exactly when rootless.
    if (k == 2 || k == 3) {
      EXPECT_FALSE(has_root(m, p)) << "q=" << q;
    }
  }
  EXPECT_FALSE(is_irreducible({0, 0, 1}, 2));      // x^2
  EXPECT_FALSE(is_irreducible({1, 0, 1}, 2));      // (x+1)^2
  EXPECT_FALSE(is_irreducible({1, 0, 1, 0, 1}, 2));  // (x^2+x+1)^2, rootless but reducible
}

TEST(Galois, FieldErrors) {
  EXPECT_THROW(FieldTable::make(6, 1), std::invalid_argument);
  EXPECT_THROW(FieldTable::make(2, 7), std::invalid_argument);
  EXPECT_THROW(FieldTable::make(67, 1), std::invalid_argument);
  EXPECT_THROW(FieldTable::make(2, 2).inv(0), std::domain_error);
  EXPECT_THROW(build_plane(6), std::invalid_argument);
  EXPECT_THROW(build_plane(1), std::invalid_argument);
  EXPECT_THROW(build_plane(32), std::invalid_argument);
  EXPECT_THROW(build_plane(64), std::invalid_argument);
  EXPECT_EQ(table_orders().back(), 61);
  const FieldTable f = FieldTable::make(3, 1);
  EXPECT_THROW(normalize(f, {0, 0, 0}), std::invalid_argument);
  EXPECT_EQ(normalize(f, {0, 2, 1}), (ProjTriple{0, 1, 2}));
}

TEST(Galois, PlaneAxioms) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const IncidenceGraph g = build_plane(q);
    const int n = q * q + q + 1;
    EXPECT_EQ(g.n(), n);
    EXPECT_EQ(g.graph.num_edges(), (q + 1) * n);
    const PlaneAxiomReport r = verify_plane_axioms(g);
    EXPECT_TRUE(r.ok()) << "q=" << q;
    EXPECT_EQ(r.girth, 6);
    for (int l = 0; l < n; ++l) {
      const auto pts = g.points_on(l);
      EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
      EXPECT_EQ(static_cast<int>(pts.size()), q + 1);
    }
    // Dual axiom: two lines meet in exactly one point.
    for (int l1 = 0; l1 < std::min(n, 12); ++l1) {
      for (int l2 = l1 + 1; l2 < n; ++l2) {
        const auto a = g.points_on(l1);
        const auto b = g.points_on(l2);
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        EXPECT_EQ(common.size(), 1U);
      }
    }
  }
}

TEST(Galois, FanoGolden) {
  const IncidenceGraph g = build_plane(2);
  EXPECT_EQ(normalized_triples(FieldTable::make(2, 1)).front(), (ProjTriple{0, 0, 1}));
  std::set<std::vector<int>> lines;
  for (int l = 0; l < 7; ++l) lines.insert(g.points_on(l));
  EXPECT_EQ(lines.size(), 7U);
}

TEST(Galois, CorruptedPlaneFails) {
  IncidenceGraph g = build_plane(3);
  // Move one incidence so a point gains a second line shared with another point.
  std::vector<Edge> edges(g.graph.edges().begin(), g.graph.edges().end());
  const Edge removed = edges.front();
  edges.erase(edges.begin());
  for (int b = g.n(); b < 2 * g.n(); ++b) {
    const Edge e{removed.a, b};
    if (std::find(edges.begin(), edges.end(), e) == edges.end() && b != removed.b) {
      edges.push_back(e);
      break;
    }
  }
  g.graph = BipartiteGraph(g.n(), g.n(), edges);
  const PlaneAxiomReport r = verify_plane_axioms(g);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.failures.empty());
}
