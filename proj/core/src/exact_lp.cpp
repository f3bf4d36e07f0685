#include "stabxc/exact_lp.hpp"

#include <ostream>
#include <stdexcept>

namespace stabxc {

int LinearSystem::add_var(std::string name) {
  names.push_back(std::move(name));
  return num_vars() - 1;
}

namespace {

Rational evaluate(const LinearRow& row, const std::vector<Rational>& point) {
  Rational s;
  for (const auto& t : row.terms) s += t.coef * point[t.var];
  return s;
}

// Single-variable sign row -w <= 0.
std::optional<int> sign_row_var(const LinearRow& row) {
  if (row.terms.size() == 1 && row.terms[0].coef < 0 && row.rhs == 0) return row.terms[0].var;
  return std::nullopt;
}

}  // namespace

std::vector<std::string> violated_rows(const LinearSystem& system, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != system.num_vars()) throw std::invalid_argument("point has wrong dimension");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    if (evaluate(system.inequalities[i], point) > system.inequalities[i].rhs) out.push_back("i" + std::to_string(i));
  }
  for (std::size_t i = 0; i < system.equations.size(); ++i) {
    if (evaluate(system.equations[i], point) != system.equations[i].rhs) out.push_back("e" + std::to_string(i));
  }
  return out;
}

bool structurally_bounded(const LinearSystem& system) {
  const int nv = system.num_vars();
  std::vector<std::optional<Rational>> lo(nv), hi(nv);

  // Bound on sum_{j != skip} a_j w_j from above (upper = true) or below.
  auto partial = [&](const LinearRow& row, std::size_t skip, bool upper) -> std::optional<Rational> {
    Rational s;
    for (std::size_t j = 0; j < row.terms.size(); ++j) {
      if (j == skip) continue;
      const auto& t = row.terms[j];
      const bool use_hi = (t.coef > 0) == upper;
      const auto& b = use_hi ? hi[t.var] : lo[t.var];
      if (!b) return std::nullopt;
      s += t.coef * *b;
    }
    return s;
  };
  // From a_k w_k <= r (or >= r) record the implied bound if absent.
  auto imply = [&](const LinearTerm& t, const Rational& r, bool at_most) {
    const bool gives_hi = (t.coef > 0) == at_most;
    auto& slot = gives_hi ? hi[t.var] : lo[t.var];
    if (slot) return false;
    slot = r / t.coef;
    return true;
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& row : system.inequalities) {
      for (std::size_t k = 0; k < row.terms.size(); ++k) {
        if (row.terms[k].coef == 0) continue;
        if (auto low = partial(row, k, false)) changed |= imply(row.terms[k], row.rhs - *low, true);
      }
    }
    for (const auto& row : system.equations) {
      for (std::size_t k = 0; k < row.terms.size(); ++k) {
        if (row.terms[k].coef == 0) continue;
        if (auto low = partial(row, k, false)) changed |= imply(row.terms[k], row.rhs - *low, true);
        if (auto up = partial(row, k, true)) changed |= imply(row.terms[k], row.rhs - *up, false);
      }
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (!lo[v] || !hi[v]) return false;
  }
  return true;
}

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), n_(cols), a_(rows, std::vector<Rational>(cols + 1)), basis_(rows, -1) {}

  Rational& at(int i, int j) { return a_[i][j]; }
  Rational& rhs(int i) { return a_[i][n_]; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  std::vector<int>& basis() { return basis_; }

  // Sets the objective to maximize and prices out the basis.
  void set_objective(const std::vector<Rational>& c) {
    z_.assign(n_ + 1, Rational(0));
    for (int j = 0; j < n_; ++j) z_[j] = -c[j];
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= n_; ++j) z_[j] += cb * a_[i][j];
    }
  }

  Rational value() const { return z_[n_]; }

  void pivot(int r, int c) {
    const Rational p = a_[r][c];
    for (int j = 0; j <= n_; ++j) a_[r][j] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (int j = 0; j <= n_; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
    }
    if (z_[c] != 0) {
      const Rational f = z_[c];
      for (int j = 0; j <= n_; ++j) {
        if (a_[r][j] != 0) z_[j] -= f * a_[r][j];
      }
    }
    basis_[r] = c;
  }

  // Bland's rule over columns < allowed. Returns false when unbounded.
  bool optimize(int allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (z_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (a_[i][enter] <= 0) continue;
        const Rational ratio = a_[i][n_] / a_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(int r) {
    a_.erase(a_.begin() + r);
    basis_.erase(basis_.begin() + r);
    --m_;
  }

 private:
  int m_;
  int n_;
  std::vector<std::vector<Rational>> a_;
  std::vector<int> basis_;
  std::vector<Rational> z_;
};

}  // namespace

LpResult exact_lp(const LinearSystem& system, const std::vector<Rational>& objective) {
  const int nv = system.num_vars();
  if (static_cast<int>(objective.size()) != nv) throw std::invalid_argument("objective has wrong dimension");
  if (nv > kMaxLpVariables ||
      static_cast<int>(system.inequalities.size() + system.equations.size()) > kMaxLpRows) {
    throw std::length_error("LP too large");
  }

  std::vector<bool> nonneg(nv, false);
  std::vector<const LinearRow*> ineq;
  for (const auto& row : system.inequalities) {
    if (auto v = sign_row_var(row)) {
      nonneg[*v] = true;
    } else {
      ineq.push_back(&row);
    }
  }

  // Columns: w+ for every variable, w- for free ones, slacks, artificials.
  std::vector<int> pos(nv), neg(nv, -1);
  int cols = 0;
  for (int v = 0; v < nv; ++v) {
    pos[v] = cols++;
    if (!nonneg[v]) neg[v] = cols++;
  }
  const int first_slack = cols;
  cols += static_cast<int>(ineq.size());
  const int rows = static_cast<int>(ineq.size() + system.equations.size());
  const int first_art = cols;
  cols += rows;

  Tableau tab(rows, cols);
  auto load = [&](int i, const LinearRow& row, int slack) {
    const bool flip = row.rhs < 0;
    const Rational sgn = flip ? -1 : 1;
    for (const auto& t : row.terms) {
      tab.at(i, pos[t.var]) += sgn * t.coef;
      if (neg[t.var] >= 0) tab.at(i, neg[t.var]) -= sgn * t.coef;
    }
    if (slack >= 0) tab.at(i, slack) = sgn;
    tab.rhs(i) = sgn * row.rhs;
    tab.at(i, first_art + i) = 1;
    tab.basis()[i] = first_art + i;
  };
  for (int i = 0; i < static_cast<int>(ineq.size()); ++i) load(i, *ineq[i], first_slack + i);
  for (std::size_t k = 0; k < system.equations.size(); ++k) {
    load(static_cast<int>(ineq.size() + k), system.equations[k], -1);
  }

  std::vector<Rational> phase1(cols);
  for (int j = first_art; j < cols; ++j) phase1[j] = -1;
  tab.set_objective(phase1);
  tab.optimize(cols);
  LpResult result;
  if (tab.value() < 0) return result;

  // Drive zero-level artificials out; rows where that fails are redundant.
  for (int i = tab.rows() - 1; i >= 0; --i) {
    if (tab.basis()[i] < first_art) continue;
    int enter = -1;
    for (int j = 0; j < first_art; ++j) {
      if (tab.at(i, j) != 0) {
        enter = j;
        break;
      }
    }
    if (enter >= 0) {
      tab.pivot(i, enter);
    } else {
      tab.drop_row(i);
    }
  }

  std::vector<Rational> phase2(cols);
  for (int v = 0; v < nv; ++v) {
    phase2[pos[v]] = objective[v];
    if (neg[v] >= 0) phase2[neg[v]] = -objective[v];
  }
  tab.set_objective(phase2);
  if (!tab.optimize(first_art)) {
    result.status = LpStatus::unbounded;
    return result;
  }

  std::vector<Rational> col_value(cols);
  for (int i = 0; i < tab.rows(); ++i) col_value[tab.basis()[i]] = tab.rhs(i);
  result.solution.assign(nv, Rational(0));
  for (int v = 0; v < nv; ++v) {
    result.solution[v] = col_value[pos[v]] - (neg[v] >= 0 ? col_value[neg[v]] : Rational(0));
  }
  result.status = LpStatus::optimal;
  result.value = tab.value();

  Rational check;
  for (int v = 0; v < nv; ++v) check += objective[v] * result.solution[v];
  if (check != result.value || !violated_rows(system, result.solution).empty()) {
    throw std::logic_error("LP certificate failed re-check");
  }
  return result;
}

namespace {

void write_terms(std::ostream& out, const LinearSystem& system, const std::vector<LinearTerm>& terms) {
  if (terms.empty()) {
    out << " 0 " << system.names.front();
    return;
  }
  for (const auto& t : terms) {
    out << (t.coef < 0 ? " - " : " + ") << to_string(abs(t.coef)) << ' ' << system.names[t.var];
  }
}

}  // namespace

void write_lp(std::ostream& out, const LinearSystem& system, const std::vector<Rational>& objective) {
  out << "Maximize\n obj:";
  std::vector<LinearTerm> obj;
  for (int v = 0; v < system.num_vars(); ++v) {
    if (v < static_cast<int>(objective.size()) && objective[v] != 0) obj.push_back({v, objective[v]});
  }
  write_terms(out, system, obj);
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    out << " i" << i << ':';
    write_terms(out, system, system.inequalities[i].terms);
    out << " <= " << to_string(system.inequalities[i].rhs) << '\n';
  }
  for (std::size_t i = 0; i < system.equations.size(); ++i) {
    out << " e" << i << ':';
    write_terms(out, system, system.equations[i].terms);
    out << " = " << to_string(system.equations[i].rhs) << '\n';
  }
  out << "Bounds\n";
  for (const auto& name : system.names) out << ' ' << name << " free\n";
  out << "End\n";
}

}  // namespace stabxc
