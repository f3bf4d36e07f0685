#include "stabxc/ef_builder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stabxc {

bool is_biclique(const BipartiteGraph& g, const Biclique& b) {
  if (b.a_side.empty() || b.b_side.empty()) return false;
  for (int a : b.a_side) {
    for (int v : b.b_side) {
      if (!g.adjacent(a, v)) return false;
    }
  }
  return true;
}

bool is_biclique_cover(const BipartiteGraph& g, const std::vector<Biclique>& cover) {
  std::vector<bool> hit(g.num_edges(), false);
  for (const auto& b : cover) {
    if (!is_biclique(g, b)) return false;
    for (int a : b.a_side) {
      for (int v : b.b_side) hit[g.edge_index(a, v)] = true;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

namespace {

std::vector<int> common_neighbors(const BipartiteGraph& g, const std::vector<int>& vs) {
  std::vector<int> out(g.neighbors(vs.front()).begin(), g.neighbors(vs.front()).end());
  for (std::size_t i = 1; i < vs.size(); ++i) {
    const auto& nb = g.neighbors(vs[i]);
    std::vector<int> keep;
    std::set_intersection(out.begin(), out.end(), nb.begin(), nb.end(), std::back_inserter(keep));
    out = std::move(keep);
  }
  return out;
}

// Closure of a one-sided seed: the seed's common neighbors, then all
// vertices adjacent to every one of those.
std::optional<Biclique> closure(const BipartiteGraph& g, const std::vector<int>& seed) {
  const auto other = common_neighbors(g, seed);
  if (other.empty()) return std::nullopt;
  const auto same = common_neighbors(g, other);
  if (g.in_a(seed.front())) return Biclique{same, other};
  return Biclique{other, same};
}

}  // namespace

std::vector<Biclique> greedy_biclique_cover(const BipartiteGraph& g) {
  if (g.has_isolated_vertices()) throw std::invalid_argument("graph has isolated vertices");
  const int nv = g.num_vertices();

  std::vector<Biclique> pool;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  auto offer = [&](Biclique b) {
    std::sort(b.a_side.begin(), b.a_side.end());
    std::sort(b.b_side.begin(), b.b_side.end());
    if (seen.insert({b.a_side, b.b_side}).second) pool.push_back(std::move(b));
  };
  for (int v = 0; v < nv; ++v) {
    const auto& nb = g.neighbors(v);
    std::vector<int> self{v};
    std::vector<int> others(nb.begin(), nb.end());
    offer(g.in_a(v) ? Biclique{self, others} : Biclique{others, self});
  }
  for (int v = 0; v < nv; ++v) {
    if (auto b = closure(g, {v})) offer(*b);
  }
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      if (g.in_a(u) != g.in_a(v)) continue;
      if (auto b = closure(g, {u, v})) offer(*b);
    }
  }

  std::vector<bool> covered(g.num_edges(), false);
  int remaining = g.num_edges();
  std::vector<Biclique> cover;
  while (remaining > 0) {
    int best = -1;
    long long best_new = 0;
    long long best_weight = 1;
    for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
      long long fresh = 0;
      for (int a : pool[i].a_side) {
        for (int b : pool[i].b_side) fresh += covered[g.edge_index(a, b)] ? 0 : 1;
      }
      const long long w = pool[i].weight();
      if (fresh > 0 && (best < 0 || fresh * best_weight > best_new * w)) {
        best = i;
        best_new = fresh;
        best_weight = w;
      }
    }
    const Biclique& pick = pool[best];
    for (int a : pick.a_side) {
      for (int b : pick.b_side) {
        const int e = g.edge_index(a, b);
        if (!covered[e]) {
          covered[e] = true;
          --remaining;
        }
      }
    }
    cover.push_back(pick);
  }
  return cover;
}

int total_weight(const std::vector<Biclique>& cover) {
  int w = 0;
  for (const auto& b : cover) w += b.weight();
  return w;
}

EdgeExtension edge_polytope_union_ef(const BipartiteGraph& g, const std::vector<Biclique>& cover) {
  if (!is_biclique_cover(g, cover)) throw std::invalid_argument("invalid biclique cover");
  const int nv = g.num_vertices();
  EdgeExtension ef;
  ef.cover = cover;
  LinearSystem& s = ef.system;
  for (int v = 0; v < nv; ++v) s.original.push_back(s.add_var("y" + std::to_string(v)));

  auto add_ineq = [&](LinearRow row) {
    s.inequalities.push_back(std::move(row));
    return static_cast<int>(s.inequalities.size()) - 1;
  };
  auto add_eq = [&](LinearRow row) {
    s.equations.push_back(std::move(row));
    return static_cast<int>(s.equations.size()) - 1;
  };

  for (std::size_t i = 0; i < cover.size(); ++i) {
    const std::string tag = std::to_string(i);
    const int lam = s.add_var("lambda" + tag);
    ef.lambda.push_back(lam);
    ef.lambda_sign_row.push_back(add_ineq({{{lam, -1}}, 0}));
    std::vector<int> vars(nv, -1), signs(nv, -1);
    auto side_row = [&](const std::vector<int>& side) {
      LinearRow row{{}, 0};
      for (int v : side) {
        vars[v] = s.add_var("y" + tag + "_" + std::to_string(v));
        signs[v] = add_ineq({{{vars[v], -1}}, 0});
        row.terms.push_back({vars[v], 1});
      }
      row.terms.push_back({lam, -1});
      return add_eq(std::move(row));
    };
    ef.a_row.push_back(side_row(cover[i].a_side));
    ef.b_row.push_back(side_row(cover[i].b_side));
    ef.block_var.push_back(std::move(vars));
    ef.block_sign_row.push_back(std::move(signs));
  }
  LinearRow simplex{{}, 1};
  for (int lam : ef.lambda) simplex.terms.push_back({lam, 1});
  ef.simplex_row = add_eq(std::move(simplex));
  for (int v = 0; v < nv; ++v) {
    LinearRow link{{{v, 1}}, 0};
    for (const auto& vars : ef.block_var) {
      if (vars[v] >= 0) link.terms.push_back({vars[v], -1});
    }
    ef.link_row.push_back(add_eq(std::move(link)));
  }
  return ef;
}

std::vector<Rational> edge_lift(const BipartiteGraph& g, const EdgeExtension& ef, int edge) {
  const Edge& e = g.edge(edge);
  for (std::size_t i = 0; i < ef.cover.size(); ++i) {
    const auto& vars = ef.block_var[i];
    const auto& a = ef.cover[i].a_side;
    const auto& b = ef.cover[i].b_side;
    if (std::find(a.begin(), a.end(), e.a) == a.end() || std::find(b.begin(), b.end(), e.b) == b.end()) continue;
    std::vector<Rational> w(ef.system.num_vars());
    w[e.a] = 1;
    w[e.b] = 1;
    w[ef.lambda[i]] = 1;
    w[vars[e.a]] = 1;
    w[vars[e.b]] = 1;
    return w;
  }
  throw std::invalid_argument("edge not covered by the extension's bicliques");
}

StabExtension martin_dual_ef(const EdgeExtension& edge_ef, const BipartiteGraph& g) {
  const LinearSystem& src = edge_ef.system;
  if (!structurally_bounded(src)) throw std::invalid_argument("extension must be bounded");
  const int n = g.num_vertices();
  if (static_cast<int>(src.original.size()) != n) throw std::invalid_argument("extension dimension mismatch");

  StabExtension out;
  out.num_vertices = n;
  LinearSystem& s = out.system;
  for (int v = 0; v < n; ++v) s.original.push_back(s.add_var("x" + std::to_string(v)));
  out.first_ineq_multiplier = s.num_vars();
  for (std::size_t i = 0; i < src.inequalities.size(); ++i) s.add_var("mu" + std::to_string(i));
  out.first_eq_multiplier = s.num_vars();
  for (std::size_t i = 0; i < src.equations.size(); ++i) s.add_var("nu" + std::to_string(i));

  // Stationarity: column j of [A; E]^T times (mu, nu) equals c_j, where c
  // is x on the original coordinates and zero elsewhere.
  std::vector<LinearRow> stationarity(src.num_vars(), LinearRow{{}, 0});
  for (std::size_t i = 0; i < src.inequalities.size(); ++i) {
    for (const auto& t : src.inequalities[i].terms) {
      stationarity[t.var].terms.push_back({out.first_ineq_multiplier + static_cast<int>(i), t.coef});
    }
  }
  for (std::size_t i = 0; i < src.equations.size(); ++i) {
    for (const auto& t : src.equations[i].terms) {
      stationarity[t.var].terms.push_back({out.first_eq_multiplier + static_cast<int>(i), t.coef});
    }
  }
  for (int v = 0; v < n; ++v) stationarity[src.original[v]].terms.push_back({v, -1});
  s.equations = std::move(stationarity);

  for (std::size_t i = 0; i < src.inequalities.size(); ++i) {
    s.inequalities.push_back({{{out.first_ineq_multiplier + static_cast<int>(i), -1}}, 0});
  }
  LinearRow dual_objective{{}, 1};
  for (std::size_t i = 0; i < src.inequalities.size(); ++i) {
    if (src.inequalities[i].rhs != 0) {
      dual_objective.terms.push_back({out.first_ineq_multiplier + static_cast<int>(i), src.inequalities[i].rhs});
    }
  }
  for (std::size_t i = 0; i < src.equations.size(); ++i) {
    if (src.equations[i].rhs != 0) {
      dual_objective.terms.push_back({out.first_eq_multiplier + static_cast<int>(i), src.equations[i].rhs});
    }
  }
  out.objective_row = static_cast<int>(s.inequalities.size());
  s.inequalities.push_back(std::move(dual_objective));
  for (int v = 0; v < n; ++v) s.inequalities.push_back({{{v, -1}}, 0});
  return out;
}

std::vector<Rational> stable_set_lift(const BipartiteGraph& g, const EdgeExtension& edge_ef,
                                      const StabExtension& stab, const StableSet& s) {
  if (!is_stable(g, s)) throw std::invalid_argument("column not a stable set");
  const int n = g.num_vertices();
  std::vector<Rational> w(stab.system.num_vars());
  auto x = [&](int v) { return Rational(s.test(v) ? 1 : 0); };
  auto mu = [&](int row) -> Rational& { return w[stab.first_ineq_multiplier + row]; };
  auto nu = [&](int row) -> Rational& { return w[stab.first_eq_multiplier + row]; };

  for (int v = 0; v < n; ++v) {
    w[v] = x(v);
    nu(edge_ef.link_row[v]) = x(v);
  }
  const Rational sigma = 1;
  nu(edge_ef.simplex_row) = sigma;
  for (std::size_t i = 0; i < edge_ef.cover.size(); ++i) {
    auto side_max = [&](const std::vector<int>& side) {
      Rational m = 0;
      for (int v : side) m = std::max(m, x(v));
      return m;
    };
    const Rational alpha = side_max(edge_ef.cover[i].a_side);
    const Rational beta = side_max(edge_ef.cover[i].b_side);
    nu(edge_ef.a_row[i]) = alpha;
    nu(edge_ef.b_row[i]) = beta;
    mu(edge_ef.lambda_sign_row[i]) = sigma - alpha - beta;
    for (int v : edge_ef.cover[i].a_side) mu(edge_ef.block_sign_row[i][v]) = alpha - x(v);
    for (int v : edge_ef.cover[i].b_side) mu(edge_ef.block_sign_row[i][v]) = beta - x(v);
  }
  return w;
}

ExtensionSize extension_size(const BipartiteGraph& g, const EdgeExtension& edge_ef, const StabExtension& stab) {
  ExtensionSize sz;
  sz.bicliques = edge_ef.cover.size();
  sz.total_weight = static_cast<std::size_t>(total_weight(edge_ef.cover));
  sz.edge_inequalities = edge_ef.system.inequalities.size();
  sz.stab_inequalities = stab.system.inequalities.size();
  sz.accounting_ok = sz.edge_inequalities == sz.total_weight + sz.bicliques &&
                     sz.stab_inequalities == sz.edge_inequalities + 1 + static_cast<std::size_t>(g.num_vertices());
  return sz;
}

StabVerifyReport verify_stab_ef(const BipartiteGraph& g, const EdgeExtension& edge_ef, const StabExtension& stab) {
  const int n = g.num_vertices();
  if (n > kMaxStabVerifyVertices) throw std::length_error("graph too large for extension verification");
  StabVerifyReport rep;

  for (const auto& s : enumerate_stable_sets(g)) {
    ++rep.stable_sets;
    const auto lift = stable_set_lift(g, edge_ef, stab, s);
    const auto bad = violated_rows(stab.system, lift);
    if (bad.empty()) {
      ++rep.lifts_ok;
    } else {
      std::string members_text;
      for (int v : members(s)) members_text += " " + std::to_string(v);
      rep.failures.push_back("lift of stable set {" + members_text + " } violates " + bad.front());
    }
  }

  const int nv = stab.system.num_vars();
  auto outer = [&](std::vector<Rational> objective, const Rational& bound, const std::string& what) {
    ++rep.facets;
    const LpResult r = exact_lp(stab.system, objective);
    if (r.status != LpStatus::optimal) {
      rep.failures.push_back(what + ": LP not optimal");
      return Rational(-1);
    }
    if (r.value <= bound) {
      ++rep.facets_ok;
    } else {
      rep.failures.push_back(what + ": LP maximum " + to_string(r.value) + " exceeds " + to_string(bound));
    }
    return r.value;
  };
  for (const Edge& e : g.edges()) {
    std::vector<Rational> c(nv);
    c[e.a] = 1;
    c[e.b] = 1;
    const Rational best = outer(std::move(c), 1, "edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
    if (best == 1) ++rep.edges_attaining_one;
  }
  for (int v = 0; v < n; ++v) {
    std::vector<Rational> c(nv);
    c[v] = -1;
    outer(std::move(c), 0, "nonnegativity of x" + std::to_string(v));
  }
  return rep;
}

}  // namespace stabxc
