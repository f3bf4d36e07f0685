#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stabxc/fooling.hpp"
#include "stabxc/special_weights.hpp"

namespace stabxc {

/// A certified lower bound on xc(STAB(G)) with the reasoning printed as a
/// chain, next to the trivial bounds n <= xc <= n + m.
struct LowerBoundReport {
  std::string graph;
  int vertices = 0;
  int edges = 0;
  Rational bound;
  std::vector<std::string> chain;  // human-readable lines, in order
  bool consistent = false;         // bound <= n + m

  void print(std::ostream& out) const;
};

/// Brute-forces rc(M(G)) and fool(M(G)), re-verifies both certificates and
/// reports xc >= rc >= fool. Throws std::logic_error("unverified
/// certificate") if a certificate fails or fool > rc.
LowerBoundReport lower_bound_from_matrix(const std::string& name, const BipartiteGraph& g);

/// xc >= |fs| for a fooling set of M(G). Throws std::logic_error
/// ("unverified certificate") when verify_fooling_set rejects it.
LowerBoundReport lower_bound_from_fooling(const std::string& name, const BipartiteGraph& g, const FoolingSet& fs);

/// xc >= total special weight, valid when every rectangle has weight <= 1.
/// Accepts only an exhaustive sweep that passed; throws std::logic_error
/// ("unverified certificate") otherwise.
LowerBoundReport lower_bound_from_weighting(const PlaneTables& t, const RectangleSweepReport& sweep);

}  // namespace stabxc
