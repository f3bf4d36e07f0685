#include "stabxc/lower_bound.hpp"

#include <ostream>
#include <stdexcept>

namespace stabxc {

void LowerBoundReport::print(std::ostream& out) const {
  for (const auto& line : chain) out << line << '\n';
  out << "trivial bounds: " << vertices << " <= xc(STAB(" << graph << ")) <= " << vertices + edges << '\n';
  out << "consistent: " << (consistent ? "yes" : "no") << '\n';
}

namespace {

LowerBoundReport start(const std::string& name, const BipartiteGraph& g) {
  LowerBoundReport r;
  r.graph = name;
  r.vertices = g.num_vertices();
  r.edges = g.num_edges();
  return r;
}

void finish(LowerBoundReport& r) { r.consistent = r.bound <= r.vertices + r.edges; }

[[noreturn]] void unverified(const std::string& why) { throw std::logic_error("unverified certificate: " + why); }

}  // namespace

LowerBoundReport lower_bound_from_matrix(const std::string& name, const BipartiteGraph& g) {
  const BinaryMatrix m = edge_stable_matrix(g);
  const FoolingResult fool = max_fooling_bruteforce(m);
  const CoverResult rc = min_cover_bruteforce(m);
  if (!is_fooling_set(m, fool.entries) || static_cast<int>(fool.entries.size()) != fool.size) {
    unverified("fooling set of M(" + name + ")");
  }
  if (!verify_matrix_cover(m, rc.cover).complete() || static_cast<int>(rc.cover.size()) != rc.size) {
    unverified("rectangle cover of M(" + name + ")");
  }
  if (fool.size > rc.size) unverified("fool exceeds rc");

  LowerBoundReport r = start(name, g);
  r.bound = rc.size;
  const std::string stab = "xc(STAB(" + name + "))";
  r.chain.push_back(stab + " >= rc(M) = " + std::to_string(rc.size) + " >= fool(M) = " + std::to_string(fool.size));
  r.chain.push_back("verified by: is_fooling_set on " + std::to_string(fool.size) +
                    " entries, verify_matrix_cover on " + std::to_string(rc.size) + " rectangles (" +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix)");
  finish(r);
  return r;
}

LowerBoundReport lower_bound_from_fooling(const std::string& name, const BipartiteGraph& g, const FoolingSet& fs) {
  const FoolingVerdict v = verify_fooling_set(g, fs);
  if (!v.ok) unverified(v.reason);
  LowerBoundReport r = start(name, g);
  r.bound = static_cast<long>(fs.size());
  r.chain.push_back("xc(STAB(" + name + ")) >= rc(M) >= fool(M) >= " + std::to_string(fs.size()));
  r.chain.push_back("verified by: verify_fooling_set, all " + std::to_string(fs.size() * (fs.size() - 1) / 2) +
                    " pairs");
  finish(r);
  return r;
}

LowerBoundReport lower_bound_from_weighting(const PlaneTables& t, const RectangleSweepReport& sweep) {
  if (sweep.method != "exhaustive") unverified("weighting needs an exhaustive rectangle sweep");
  if (!sweep.ok() || sweep.max_rect_weight > 1) unverified("some rectangle has weight above 1");
  if (sweep.q != t.q()) unverified("sweep belongs to another plane");
  const TotalWeight tw = total_weight(t);
  LowerBoundReport r = start("I(" + std::to_string(t.q()) + ")", t.plane().graph);
  r.bound = tw.enumerated;
  r.chain.push_back("xc(STAB(" + r.graph + ")) >= rc(S) >= total special weight = " + to_string(tw.enumerated));
  r.chain.push_back("verified by: exhaustive sweep of " + std::to_string(sweep.rectangles_checked) +
                    " rectangles, max weight " + to_string(sweep.max_rect_weight) + "; total weight equals n*H_q = " +
                    to_string(tw.closed_form));
  finish(r);
  return r;
}

}  // namespace stabxc
