#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stabxc/ef_builder.hpp"
#include "stabxc/fooling.hpp"
#include "stabxc/galois.hpp"
#include "stabxc/lower_bound.hpp"
#include "stabxc/slack.hpp"
#include "stabxc/special_weights.hpp"
#include "stabxc/tree_cover.hpp"

namespace stabxc::cli {

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"plane", "fooling", "lowerbound", "cover", "tree", "upperbound", "rc"};
  return names;
}

std::span<const ClaimRoute> claim_routes() {
  static const std::vector<ClaimRoute> routes{
      {"projective plane incidence graphs are (q+1)-regular and C4-free", "plane"},
      {"cubic C4-free bipartite graphs have tight fooling sets", "fooling"},
      {"tight fooling sets survive taking subgraphs", "fooling"},
      {"even cycles have rc = fool = number of edges", "rc"},
      {"total special weight equals n * H_q", "lowerbound"},
      {"every rectangle has special weight at most 1", "lowerbound"},
      {"per-line weight and line-count bounds", "lowerbound"},
      {"binomial identities behind the weight bound", "lowerbound"},
      {"certified chain xc >= rc >= fool", "lowerbound"},
      {"tree size, leaf count, path labels and label multiplicity", "tree"},
      {"per-line centered covers reach every special entry", "cover"},
      {"merged cover keeps coverage with O(n log n) rectangles", "cover"},
      {"stable-set extension from biclique covers and duality", "upperbound"},
  };
  return routes;
}

namespace {

std::pair<int, int> parse_pair(const std::string& text, const std::string& spec) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw UsageError("expected <a>x<b> in graph spec " + spec);
  try {
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad numbers in graph spec " + spec);
  }
}

int parse_int(const std::string& text, const std::string& spec) {
  try {
    return std::stoi(text);
  } catch (const std::exception&) {
    throw UsageError("bad number in graph spec " + spec);
  }
}

IncidenceGraph plane_or_usage(int q) {
  try {
    return build_plane(q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int need_q(const RunConfig& c) {
  if (!c.q) throw UsageError(c.subcommand + " needs --q");
  return *c.q;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int finish(std::ostream& out, bool ok) {
  out << "status: " << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kOk : kVerificationFailed;
}

int cmd_plane(const RunConfig& c, std::ostream& out) {
  const int q = need_q(c);
  const IncidenceGraph plane = plane_or_usage(q);
  const PlaneAxiomReport rep = verify_plane_axioms(plane);
  out << "plane q=" << q << " n=" << plane.n() << " vertices=" << plane.graph.num_vertices()
      << " edges=" << plane.graph.num_edges() << '\n';
  out << "regular: " << yes_no(rep.regular) << '\n';
  out << "counts: " << yes_no(rep.counts) << '\n';
  out << "c4-free: " << yes_no(rep.c4_free) << '\n';
  out << "unique join: " << yes_no(rep.unique_join) << '\n';
  out << "girth: " << (rep.girth ? std::to_string(*rep.girth) : std::string("not computed")) << '\n';
  for (const auto& f : rep.failures) out << "failure: " << f << '\n';
  if (!c.out.empty()) {
    std::ostringstream os;
    write_graph(os, plane.graph);
    write_file(c.out, os.str());
  }
  return finish(out, rep.ok());
}

BipartiteGraph graph_from_config(const RunConfig& c) {
  if (!c.graph.empty()) return load_graph(c.graph);
  if (c.q) return plane_or_usage(*c.q).graph;
  throw UsageError(c.subcommand + " needs --graph or --q");
}

int cmd_fooling(const RunConfig& c, std::ostream& out) {
  const BipartiteGraph g = graph_from_config(c);
  CubicFoolingConstruction built;
  try {
    built = build_cubic_fooling_set(g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const FoolingVerdict verdict = verify_fooling_set(g, built.fooling);
  std::map<CubicProofCase, std::size_t> cases;
  for (int e = 0; e < g.num_edges(); ++e) {
    for (int f = e + 1; f < g.num_edges(); ++f) ++cases[resolve_pair(g, built, e, f).proof_case];
  }
  out << "fooling set: " << built.fooling.size() << " entries for " << g.num_edges() << " edges\n";
  out << "verified: " << yes_no(verdict.ok) << (verdict.ok ? "" : " (" + verdict.reason + ")") << '\n';
  out << "pairs separated via color-1 entry: " << cases[CubicProofCase::color1] << '\n';
  out << "pairs separated via color-3 entry: " << cases[CubicProofCase::color3] << '\n';
  out << "pairs separated with both colored 2: " << cases[CubicProofCase::both_color2] << '\n';

  // Dropping the last edge keeps the restricted set tight.
  bool closure_ok = true;
  if (g.num_edges() > 1) {
    Subgraph h{VertexSet(g.num_vertices()), {}};
    h.vertices.set();
    h.edges.assign(g.edges().begin(), g.edges().end() - 1);
    closure_ok = subgraph_closure_check(g, built.fooling, h).ok;
    out << "restriction to G minus one edge: " << yes_no(closure_ok) << '\n';
  }
  if (!c.out.empty()) {
    std::ostringstream os;
    write_fooling_set(os, built.fooling);
    write_file(c.out, os.str());
  }
  const bool tight = static_cast<int>(built.fooling.size()) == g.num_edges();
  return finish(out, verdict.ok && tight && closure_ok);
}

void print_sweep(std::ostream& out, const RectangleSweepReport& r) {
  out << "sweep " << r.method << ": " << r.rectangles_checked << " rectangles, max weight "
      << to_string(r.max_rect_weight) << ", tight " << r.tight_rectangles << ", per-line checks on "
      << r.multi_line_checked << ", single-line checks " << r.single_line_checked << ", violations "
      << r.violations.size() << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(r.violations.size(), 5); ++i) {
    out << "violation: " << r.violations[i] << '\n';
  }
}

int cmd_lowerbound_graph(const RunConfig& c, std::ostream& out) {
  const BipartiteGraph g = load_graph(c.graph);
  LowerBoundReport report;
  try {
    if (g.num_vertices() <= 12) {
      report = lower_bound_from_matrix(c.graph, g);
    } else {
      report = lower_bound_from_fooling(c.graph, g, cubic_fooling_set(g));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  report.print(out);
  return finish(out, report.consistent);
}

int cmd_lowerbound(const RunConfig& c, std::ostream& out) {
  if (!c.graph.empty()) return cmd_lowerbound_graph(c, out);
  const int q = need_q(c);
  if (q > 16) throw UsageError("lowerbound needs q <= 16");
  if (c.level != "exhaustive" && c.level != "sampled") throw UsageError("--level must be exhaustive or sampled");
  const PlaneTables t(plane_or_usage(q));
  const TotalWeight tw = total_weight(t);
  out << "plane q=" << q << " n=" << t.n() << '\n';
  out << "special entries: " << tw.entries << '\n';
  out << "total weight: " << to_string(tw.enumerated) << " (closed form " << to_string(tw.closed_form) << ")\n";
  out << "total weight / (n ln n): " << std::fixed << std::setprecision(6)
      << boost::multiprecision::mpq_rational(tw.enumerated).convert_to<double>() / (t.n() * std::log(t.n()))
      << std::defaultfloat << '\n';

  const BinomialSweep identities = sweep_binomial_identities(16);
  out << "binomial identities: " << identities.hockey_stick + identities.shifted_convolution +
                                        identities.inverse_binomial_sum
      << " checked, failures " << identities.failures.size() << '\n';

  std::vector<RectangleSweepReport> rows;
  bool ok = identities.ok();
  if (c.level == "exhaustive") {
    if (t.n() > 10) throw UsageError("exhaustive sweep needs q = 2");
    rows.push_back(exhaustive_rectangle_sweep(t));
    print_sweep(out, rows.back());
    ok = ok && rows.back().ok();
    if (rows.back().ok()) lower_bound_from_weighting(t, rows.back()).print(out);
  } else {
    rows.push_back(sampled_rectangle_sweep(t, c.samples, c.seed));
    out << "seed: " << c.seed << '\n';
    print_sweep(out, rows.back());
    RectangleSweepReport adv;
    adv.q = q;
    adv.n = t.n();
    adv.total_weight = tw.enumerated;
    adv.method = "adversarial";
    check_rectangles(t, adversarial_rectangles(t), adv);
    rows.push_back(adv);
    print_sweep(out, rows.back());
    ok = ok && rows[0].ok() && rows[1].ok();
  }
  out << "max rectangle weight: " << to_string(std::max(rows.front().max_rect_weight, rows.back().max_rect_weight))
      << '\n';
  if (!c.out.empty()) {
    std::ostringstream os;
    write_weight_report_tsv(os, rows);
    write_file(c.out, os.str());
  }
  return finish(out, ok);
}

int cmd_cover(const RunConfig& c, std::ostream& out) {
  const int q = need_q(c);
  if (q > 16) throw UsageError("cover needs q <= 16");
  const PlaneTables t(plane_or_usage(q));
  const auto per_line = all_line_covers(t);
  const auto merged = merge_covers(t, per_line);
  std::size_t unmerged = 0;
  for (const auto& l : per_line) unmerged += l.size();
  const std::size_t bound = static_cast<std::size_t>(ceil_log2(q + 1) + 1) * t.n();
  const double nlogn = t.n() * std::log2(static_cast<double>(t.n()));
  out << "plane q=" << q << " n=" << t.n() << '\n';
  out << "per-line rectangles: " << unmerged << '\n';
  out << "merged rectangles: " << merged.size() << " (bound " << bound << ")\n";
  out << "merged / (n log2 n): " << std::fixed << std::setprecision(4) << merged.size() / nlogn << std::defaultfloat
      << '\n';
  bool ok = merged.size() <= bound && merged.size() / nlogn <= kCoverRatioBound;
  if (c.verify) {
    const bool centered = std::all_of(merged.begin(), merged.end(),
                                      [&](const CenteredRectangle& r) { return is_valid_centered(t, r); });
    const SpecialCoverReport cov = verify_special_cover(t, merged);
    out << "all rectangles centered and valid: " << yes_no(centered) << '\n';
    out << cov.covered << "/" << cov.entries << " special entries covered\n";
    ok = ok && centered && cov.complete();
    if (q <= 5) {
      const MergeNoLossReport nl = merge_no_loss_check(t, per_line, merged);
      out << "merge lost entries: " << nl.lost << '\n';
      ok = ok && nl.ok();
    }
  }
  if (!c.out.empty()) {
    std::ostringstream os;
    write_cover(os, merged);
    write_file(c.out, os.str());
  }
  return finish(out, ok);
}

int cmd_tree(const RunConfig& c, std::ostream& out) {
  if (!c.k) throw UsageError("tree needs --k");
  if (*c.k < 1 || *c.k > 1 << 16) throw UsageError("--k must be in 1..65536");
  const LabeledTree tree = build_tree(*c.k);
  const TreeReport rep = tree_properties_check(tree);
  out << "tree k=" << tree.k << " vertices=" << tree.size() << " recurrence=" << tree_vertex_count(tree.k)
      << " leaves=" << tree.leaves().size() << '\n';
  out << "max label multiplicity: " << rep.max_multiplicity << " (bound " << ceil_log2(tree.k) + 1 << ")\n";
  if (tree.k <= 8) {
    for (int leaf : tree.leaves()) {
      out << "path:";
      for (int v : tree.path_from_root(leaf)) out << ' ' << tree.label[v];
      out << '\n';
    }
  }
  for (const auto& f : rep.failures) out << "failure: " << f << '\n';
  if (!c.out.empty()) {
    std::ostringstream os;
    for (int v = 0; v < tree.size(); ++v) os << v << ' ' << tree.parent[v] << ' ' << tree.label[v] << '\n';
    write_file(c.out, os.str());
  }
  return finish(out, rep.ok());
}

int cmd_upperbound(const RunConfig& c, std::ostream& out) {
  if (c.graph.empty()) throw UsageError("upperbound needs --graph");
  const BipartiteGraph g = load_graph(c.graph);
  if (g.has_isolated_vertices()) throw UsageError("graph has isolated vertices");
  const auto cover = greedy_biclique_cover(g);
  const EdgeExtension edge_ef = edge_polytope_union_ef(g, cover);
  const StabExtension stab = martin_dual_ef(edge_ef, g);
  const ExtensionSize size = extension_size(g, edge_ef, stab);
  out << "graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
  out << "bicliques: " << size.bicliques << ", total weight " << size.total_weight << '\n';
  out << "edge extension inequalities: " << size.edge_inequalities << '\n';
  out << "stable-set extension inequalities: " << size.stab_inequalities << '\n';
  out << "size accounting: " << yes_no(size.accounting_ok) << '\n';
  bool ok = size.accounting_ok;
  if (c.verify) {
    if (g.num_vertices() > kMaxStabVerifyVertices) throw UsageError("--verify needs at most 12 vertices");
    const StabVerifyReport rep = verify_stab_ef(g, edge_ef, stab);
    out << "stable sets lifted: " << rep.lifts_ok << "/" << rep.stable_sets << '\n';
    out << "facets respected: " << rep.facets_ok << "/" << rep.facets << '\n';
    out << "edges attaining 1: " << rep.edges_attaining_one << "/" << g.num_edges() << '\n';
    for (const auto& f : rep.failures) out << "failure: " << f << '\n';
    ok = ok && rep.ok();
  }
  if (!c.emit_lp.empty()) {
    std::vector<Rational> objective(stab.system.num_vars());
    for (int v = 0; v < g.num_vertices(); ++v) objective[v] = 1;
    std::ostringstream os;
    write_lp(os, stab.system, objective);
    write_file(c.emit_lp, os.str());
  }
  return finish(out, ok);
}

int cmd_rc(const RunConfig& c, std::ostream& out) {
  if (c.graph.empty()) throw UsageError("rc needs --graph");
  const BipartiteGraph g = load_graph(c.graph);
  if (g.num_vertices() > kMaxEnumerationVertices) throw UsageError("graph too large for explicit enumeration");
  const BinaryMatrix m = edge_stable_matrix(g);
  FoolingResult fool;
  CoverResult rc;
  try {
    fool = max_fooling_bruteforce(m);
    rc = min_cover_bruteforce(m);
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  const bool fool_ok = is_fooling_set(m, fool.entries);
  const bool rc_ok = verify_matrix_cover(m, rc.cover).complete();
  out << "matrix: " << m.rows() << " x " << m.cols() << ", support " << m.support().size() << '\n';
  out << "fool: " << fool.size << " (verified " << yes_no(fool_ok) << ")\n";
  out << "rc: " << rc.size << " (verified " << yes_no(rc_ok) << ")\n";
  out << "edges: " << g.num_edges() << '\n';
  if (!c.out.empty()) {
    std::ostringstream os;
    write_matrix(os, m);
    write_file(c.out, os.str());
  }
  return finish(out, fool_ok && rc_ok && fool.size <= rc.size);
}

}  // namespace

BipartiteGraph load_graph(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos && !std::filesystem::exists(spec)) {
    const std::string kind = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    try {
      if (kind == "cycle") return even_cycle(parse_int(args, spec));
      if (kind == "path") return path_graph(parse_int(args, spec));
      if (kind == "plane") return plane_or_usage(parse_int(args, spec)).graph;
      const auto [a, b] = parse_pair(args, spec);
      if (kind == "complete") return complete_bipartite(a, b);
      if (kind == "grid") return grid_graph(a, b);
      if (kind == "torus") return hexagonal_torus(a, b);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    throw UsageError("unknown graph generator " + kind);
  }
  std::ifstream f(spec);
  if (!f) throw UsageError("cannot read graph file " + spec);
  try {
    return read_graph(f);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& s = config.subcommand;
    if (s == "plane") return cmd_plane(config, out);
    if (s == "fooling") return cmd_fooling(config, out);
    if (s == "lowerbound") return cmd_lowerbound(config, out);
    if (s == "cover") return cmd_cover(config, out);
    if (s == "tree") return cmd_tree(config, out);
    if (s == "upperbound") return cmd_upperbound(config, out);
    if (s == "rc") return cmd_rc(config, out);
    throw UsageError("unknown subcommand " + s);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "verification error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extension complexity tools for stable-set polytopes of bipartite graphs", "stabxc"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", config.out, "Write the main artifact to this file");
  };
  auto* plane = app.add_subcommand("plane", "Build PG(2,q) and check its incidence graph");
  plane->add_option("--q", config.q, "Prime power q <= 64")->required();
  add_common(plane);

  auto* fooling = app.add_subcommand("fooling", "Tight fooling set of a cubic C4-free bipartite graph");
  fooling->add_option("--q", config.q, "Use the incidence graph of PG(2,q)");
  fooling->add_option("--graph", config.graph, "Graph file or generator spec");
  add_common(fooling);

  auto* lower = app.add_subcommand("lowerbound", "Special-entry weighting or exact bound chain");
  lower->add_option("--q", config.q, "Prime power q <= 16");
  lower->add_option("--graph", config.graph, "Tiny graph: brute-force rc and fool");
  lower->add_option("--level", config.level, "exhaustive (q=2) or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  lower->add_option("--samples", config.samples, "Random rectangles for the sampled sweep");
  lower->add_option("--seed", config.seed, "Seed for the sampled sweep");
  add_common(lower);

  auto* cover = app.add_subcommand("cover", "Tree-based cover of the special entries");
  cover->add_option("--q", config.q, "Prime power q <= 16")->required();
  cover->add_flag("--verify", config.verify, "Check coverage of every special entry");
  add_common(cover);

  auto* tree = app.add_subcommand("tree", "Build T(k) and check its properties");
  tree->add_option("--k", config.k, "Number of leaves")->required();
  add_common(tree);

  auto* upper = app.add_subcommand("upperbound", "Extended formulation from a biclique cover");
  upper->add_option("--graph", config.graph, "Graph file or generator spec")->required();
  upper->add_option("--emit-lp", config.emit_lp, "Write the extension as LP text");
  upper->add_flag("--verify", config.verify, "Check both containments with exact LPs");

  auto* rc = app.add_subcommand("rc", "Exact rc and fool of the edge vs stable set matrix");
  rc->add_option("--graph", config.graph, "Graph file or generator spec")->required();
  add_common(rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

}  // namespace stabxc::cli
