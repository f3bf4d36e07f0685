#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stabxc/rational.hpp"

namespace stabxc {

struct LinearTerm {
  int var = 0;
  Rational coef;
};

/// sum(terms) <= rhs for inequalities, sum(terms) == rhs for equations.
struct LinearRow {
  std::vector<LinearTerm> terms;
  Rational rhs;
};

/// Polyhedron { w : inequalities, equations } with a designated list of
/// original-space coordinates. All variables are free unless constrained.
struct LinearSystem {
  std::vector<std::string> names;
  std::vector<LinearRow> inequalities;
  std::vector<LinearRow> equations;
  std::vector<int> original;

  int num_vars() const { return static_cast<int>(names.size()); }
  int add_var(std::string name);
};

/// Rows of `system` violated by `point` (empty when feasible). Exact.
std::vector<std::string> violated_rows(const LinearSystem& system, const std::vector<Rational>& point);

/// Interval propagation over the rows; true when every variable ends with
/// both a lower and an upper bound. Bounds are only ever introduced, never
/// tightened, so the loop terminates.
bool structurally_bounded(const LinearSystem& system);

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> solution;  // all variables, when optimal
};

inline constexpr int kMaxLpVariables = 200;
inline constexpr int kMaxLpRows = 400;

/// Maximizes objective . w over the system with a two-phase dense tableau
/// simplex in exact arithmetic and Bland's least-index rule. Variables with
/// a sign row (-w <= 0) are treated as nonnegative, the rest are split. The
/// optimal solution is re-checked against every row.
/// Throws std::length_error("LP too large") past the guards and
/// std::logic_error if the certificate fails.
LpResult exact_lp(const LinearSystem& system, const std::vector<Rational>& objective);

/// LP text with fractional coefficients: a Maximize section, "Subject To"
/// rows named i<k> and e<k>, every variable declared free under Bounds.
void write_lp(std::ostream& out, const LinearSystem& system, const std::vector<Rational>& objective);

}  // namespace stabxc
