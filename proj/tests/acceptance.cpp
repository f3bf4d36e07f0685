// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Exact criteria use zero tolerance; the time limits are below.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stabxc/ef_builder.hpp"
#include "stabxc/fooling.hpp"
#include "stabxc/galois.hpp"
#include "stabxc/lower_bound.hpp"
#include "stabxc/slack.hpp"
#include "stabxc/special_weights.hpp"
#include "stabxc/tree_cover.hpp"

using namespace stabxc;

namespace {

using Seconds = std::chrono::duration<double>;

// Time limits in seconds.
constexpr double kPlaneLimitPerQ = 1.0;
constexpr double kFoolingLimitEach = 1.0;
constexpr double kEvenCycleLimit = 10.0;
constexpr double kTotalWeightLimit = 5.0;
constexpr double kRectangleLimit = 300.0;
constexpr double kIdentityLimit = 30.0;
constexpr double kTreeLimit = 120.0;
constexpr double kCoverLimit = 120.0;
constexpr double kStabLimit = 120.0;
constexpr double kChainLimit = 30.0;

constexpr std::size_t kSampledRectangles = 100000;
constexpr std::uint64_t kSweepSeed = 1;
constexpr int kIdentityMax = 16;
constexpr int kTreeMax = 1024;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

template <class F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return Seconds(std::chrono::steady_clock::now() - start).count();
}

Check plane_construction() {
  Check c;
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    PlaneAxiomReport r;
    int n = 0, m = 0;
    const double s = timed([&] {
      const IncidenceGraph g = build_plane(q);
      r = verify_plane_axioms(g);
      n = g.n();
      m = g.graph.num_edges();
    });
    const int expect_n = q * q + q + 1;
    c.require(r.ok(), "axioms fail at q=" + std::to_string(q));
    c.require(n == expect_n && m == (q + 1) * expect_n, "counts wrong at q=" + std::to_string(q));
    c.require(r.girth && *r.girth >= 6, "girth below 6 at q=" + std::to_string(q));
    c.require(s < kPlaneLimitPerQ, "q=" + std::to_string(q) + " took too long");
  }
  c.detail = c.ok ? "q in {2,3,4,5,7,8,9}: regular, exact counts, girth 6" : c.detail;
  return c;
}

Check cubic_fooling() {
  Check c;
  std::vector<std::pair<std::string, BipartiteGraph>> graphs{{"Heawood", build_plane(2).graph},
                                                             {"torus 4x4", hexagonal_torus(4, 4)},
                                                             {"torus 4x6", hexagonal_torus(4, 6)},
                                                             {"torus 6x6", hexagonal_torus(6, 6)}};
  std::ostringstream sizes;
  for (const auto& [name, g] : graphs) {
    FoolingSet fs;
    bool verified = false;
    const double s = timed([&] {
      fs = cubic_fooling_set(g);
      verified = verify_fooling_set(g, fs).ok;
    });
    c.require(static_cast<int>(fs.size()) == g.num_edges(), name + ": size differs from |E|");
    c.require(verified, name + ": verify_fooling_set rejects");
    c.require(s < kFoolingLimitEach, name + " took too long");
    sizes << ' ' << name << '=' << fs.size();
  }
  if (c.ok) c.detail = "|fooling set| = |E| for" + sizes.str();
  return c;
}

Check even_cycles() {
  Check c;
  const double s = timed([&] {
    for (int len : {4, 6, 8}) {
      const BinaryMatrix m = edge_stable_matrix(even_cycle(len));
      c.require(max_fooling_bruteforce(m).size == len, "fool(M(C" + std::to_string(len) + ")) != " + std::to_string(len));
      c.require(min_cover_bruteforce(m).size == len, "rc(M(C" + std::to_string(len) + ")) != " + std::to_string(len));
    }
  });
  c.require(s < kEvenCycleLimit, "too slow");
  if (c.ok) c.detail = "fool = rc = 2k for C4, C6, C8";
  return c;
}

Check total_weights() {
  Check c;
  std::ostringstream values;
  const double s = timed([&] {
    for (int q : {2, 3, 4, 5}) {
      const int n = q * q + q + 1;
      Rational expected;
      for (int k = 1; k <= q; ++k) expected += Rational(n, k);
      try {
        const TotalWeight tw = total_weight(q);
        c.require(tw.enumerated == expected, "q=" + std::to_string(q) + " total " + to_string(tw.enumerated));
        values << " q=" << q << ':' << to_string(tw.enumerated);
      } catch (const std::logic_error& e) {
        c.require(false, e.what());
      }
    }
  });
  c.require(s < kTotalWeightLimit, "too slow");
  if (c.ok) c.detail = "total = n*H_q exactly:" + values.str();
  return c;
}

Check rectangle_weights() {
  Check c;
  std::ostringstream info;
  const double s = timed([&] {
    const PlaneTables fano(build_plane(2));
    const RectangleSweepReport ex = exhaustive_rectangle_sweep(fano);
    c.require(ex.ok(), "q=2 exhaustive sweep reports violations");
    c.require(ex.rectangles_checked == 16384, "q=2 sweep did not see 16384 rectangles");
    c.require(ex.max_rect_weight == 1, "q=2 max weight " + to_string(ex.max_rect_weight));
    info << "q=2 exhaustive max=" << to_string(ex.max_rect_weight);
    for (int q : {3, 4}) {
      const PlaneTables t(build_plane(q));
      const RectangleSweepReport r = sampled_rectangle_sweep(t, kSampledRectangles, kSweepSeed);
      c.require(r.ok(), "q=" + std::to_string(q) + " sampled sweep fails");
      c.require(r.rectangles_checked == kSampledRectangles, "q=" + std::to_string(q) + " sample count");
      RectangleSweepReport adv;
      adv.q = q;
      adv.n = t.n();
      adv.method = "adversarial";
      const auto rects = adversarial_rectangles(t);
      check_rectangles(t, rects, adv);
      c.require(adv.ok(), "q=" + std::to_string(q) + " adversarial family fails");
      info << "; q=" << q << " sampled max=" << to_string(r.max_rect_weight)
           << " adversarial max=" << to_string(adv.max_rect_weight) << " (" << rects.size() << " rects)";
    }
  });
  c.require(s < kRectangleLimit, "too slow");
  if (c.ok) c.detail = info.str();
  return c;
}

Check identities() {
  Check c;
  BinomialSweep sweep;
  const double s = timed([&] { sweep = sweep_binomial_identities(kIdentityMax); });
  c.require(sweep.ok(), sweep.failures.empty() ? "" : sweep.failures.front());
  c.require(sweep.hockey_stick > 0 && sweep.shifted_convolution > 0 && sweep.inverse_binomial_sum > 0,
            "an identity family was not exercised");
  c.require(s < kIdentityLimit, "too slow");
  if (c.ok) {
    c.detail = std::to_string(sweep.hockey_stick + sweep.shifted_convolution + sweep.inverse_binomial_sum) +
               " identity checks, parameters <= " + std::to_string(kIdentityMax);
  }
  return c;
}

Check trees() {
  Check c;
  int worst = 0;
  const double s = timed([&] {
    for (int k = 1; k <= kTreeMax; ++k) {
      const LabeledTree t = build_tree(k);
      const TreeReport r = tree_properties_check(t);
      c.require(r.ok(), "k=" + std::to_string(k) + (r.failures.empty() ? "" : ": " + r.failures.front()));
      c.require(r.max_multiplicity <= ceil_log2(k) + 1, "label multiplicity at k=" + std::to_string(k));
      const long long v = tree_vertex_count(k);
      c.require(t.size() == v, "vertex count at k=" + std::to_string(k));
      c.require(static_cast<double>(v) <= 2.0 * k * (std::log2(k) + 1) + 2, "V(k) bound at k=" + std::to_string(k));
      worst = std::max(worst, r.max_multiplicity);
    }
  });
  c.require(s < kTreeLimit, "too slow");
  if (c.ok) c.detail = "k = 1.." + std::to_string(kTreeMax) + ", max label multiplicity " + std::to_string(worst);
  return c;
}

Check covers() {
  Check c;
  std::ostringstream info;
  const double s = timed([&] {
    const std::vector<int> qs{2, 3, 4, 5, 7, 8, 9};
    for (const CoverSizeRow& row : cover_size_report(qs)) {
      const std::size_t expected = static_cast<std::size_t>((row.q + 1) * row.n) * ((std::size_t{1} << row.q) - 1);
      c.require(row.coverage.entries == expected, "q=" + std::to_string(row.q) + " entry count");
      c.require(row.coverage.complete(), "q=" + std::to_string(row.q) + " leaves special entries uncovered");
      c.require(row.all_centered, "q=" + std::to_string(row.q) + " has a non-centered rectangle");
      c.require(row.ratio <= kCoverRatioBound, "q=" + std::to_string(row.q) + " ratio " + std::to_string(row.ratio));
      std::ostringstream r;
      r.precision(3);
      r << " q=" << row.q << ':' << row.merged << '/' << row.ratio;
      info << r.str();
    }
  });
  c.require(s < kCoverLimit, "too slow");
  if (c.ok) c.detail = "full coverage, size/ratio" + info.str();
  return c;
}

Check stab_extensions() {
  Check c;
  std::vector<std::pair<std::string, BipartiteGraph>> graphs{
      {"K2", path_graph(2)},           {"P4", path_graph(4)}, {"C4", even_cycle(4)},
      {"C6", even_cycle(6)},           {"K33", complete_bipartite(3, 3)},
      {"grid 3x3", grid_graph(3, 3)}};
  const double s = timed([&] {
    for (const auto& [name, g] : graphs) {
      const EdgeExtension ef = edge_polytope_union_ef(g, greedy_biclique_cover(g));
      const StabExtension stab = martin_dual_ef(ef, g);
      const StabVerifyReport r = verify_stab_ef(g, ef, stab);
      c.require(r.ok(), name + ": containment fails");
      c.require(extension_size(g, ef, stab).accounting_ok, name + ": size accounting fails");
    }
  });
  c.require(s < kStabLimit, "too slow");
  if (c.ok) {
    c.detail = "both containments exact on K2, P4, C4, C6, K33, grid 3x3; asymptotic constant not reproduced";
  }
  return c;
}

Check bound_chain() {
  Check c;
  std::ostringstream printed;
  const double s = timed([&] {
    try {
      const LowerBoundReport c4 = lower_bound_from_matrix("C4", even_cycle(4));
      c4.print(printed);
      c.require(c4.bound == 4 && c4.consistent, "C4 chain wrong");
      const PlaneTables t(build_plane(2));
      const LowerBoundReport fano = lower_bound_from_weighting(t, exhaustive_rectangle_sweep(t));
      fano.print(printed);
      c.require(fano.bound == Rational(21, 2) && fano.consistent, "q=2 weighting bound wrong");
    } catch (const std::logic_error& e) {
      c.require(false, e.what());
    }
  });
  const std::string text = printed.str();
  c.require(text.find("xc(STAB(C4)) >= rc(M) = 4 >= fool(M) = 4") != std::string::npos, "C4 chain not printed");
  c.require(text.find("total special weight = 21/2") != std::string::npos, "weighting bound not printed");
  c.require(s < kChainLimit, "too slow");
  if (c.ok) c.detail = "C4: xc >= rc = fool = 4; I(2): xc >= 21/2; both within n <= xc <= n+m";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::function<Check()>> criteria{plane_construction, cubic_fooling, even_cycles,
                                                     total_weights,      rectangle_weights, identities,
                                                     trees,              covers,            stab_extensions,
                                                     bound_chain};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    double s = 0;
    try {
      s = timed([&] { c = criteria[i](); });
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    failures += !c.ok;
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << c.detail << " ("
              << static_cast<long>(s * 1000) << " ms)" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
