#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabxc/bigraph.hpp"

namespace stabxc {

/// Arithmetic tables for GF(p^k), p^k <= 64.
///
/// Element with index i stands for the polynomial sum_j c_j * alpha^j where
/// i = sum_j c_j * p^j and 0 <= c_j < p, so index 0 is zero and index 1 is
/// one. alpha is a root of the modulus, the least monic irreducible degree-k
/// polynomial over Z_p when coefficient vectors are compared from the
/// leading term down.
class FieldTable {
 public:
  /// Throws std::invalid_argument with "not prime", "unsupported degree"
  /// (k outside 1..4) or "field too large" (p^k > 64).
  static FieldTable make(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }

  /// Coefficients c_0..c_k of the modulus; c_k == 1.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for zero.
  int inv(int a) const;

 private:
  FieldTable() = default;

  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

bool is_prime(int n);

/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power_decomposition(int q);

/// True when the monic polynomial with coefficients c_0..c_k has no monic
/// factor of degree 1..k/2 over Z_p (exhaustive trial division).
bool is_irreducible(const std::vector<int>& coefficients, int p);

/// Homogeneous coordinates of a point or line of PG(2, q); the first nonzero
/// coordinate is 1.
using ProjTriple = std::array<int, 3>;

/// Scales a nonzero triple so that its first nonzero entry is 1.
/// Throws std::invalid_argument for the zero triple.
ProjTriple normalize(const FieldTable& field, ProjTriple t);

/// All normalized triples in lexicographic order (q^2 + q + 1 of them).
std::vector<ProjTriple> normalized_triples(const FieldTable& field);

/// Point/line incidence graph of PG(2, q). Point i is A-vertex i, line j is
/// B-vertex n + j, n = q^2 + q + 1. Coordinates may be empty when the
/// structure is assembled from a bare graph (for checking the verifier).
struct IncidenceGraph {
  int q = 0;
  std::vector<ProjTriple> points;
  std::vector<ProjTriple> lines;
  BipartiteGraph graph;

  int n() const { return graph.a_size(); }
  int line_vertex(int line) const { return n() + line; }
  /// Points on a line, ascending.
  std::vector<int> points_on(int line) const;
  /// Lines through a point, ascending (local line indices).
  std::vector<int> lines_through(int point) const;
};

/// Throws std::invalid_argument("q must be a prime power") when q is not a
/// prime power or q > 64, and "unsupported degree" for q = 32 and q = 64,
/// whose fields need a modulus of degree above 4.
IncidenceGraph build_plane(int q);

struct PlaneAxiomReport {
  bool regular = false;          // every vertex has degree q + 1
  bool counts = false;           // |V| = 2(q^2+q+1), |E| = (q+1)(q^2+q+1)
  bool c4_free = false;          // girth >= 6
  bool unique_join = false;      // any two points share exactly one line
  std::optional<int> girth;
  std::vector<std::string> failures;

  bool ok() const { return regular && counts && c4_free && unique_join; }
};

PlaneAxiomReport verify_plane_axioms(const IncidenceGraph& g);

}  // namespace stabxc
