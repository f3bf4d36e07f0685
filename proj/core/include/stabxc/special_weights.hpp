#pragma once

#include <bitset>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabxc/galois.hpp"
#include "stabxc/rational.hpp"
#include "stabxc/slack.hpp"

namespace stabxc {

inline constexpr int kMaxPlaneTableN = 320;

/// Fixed-width set of points or lines, used in the hot loops.
using PlaneSet = std::bitset<kMaxPlaneTableN>;

/// Precomputed incidence data for a projective plane: sorted point lists,
/// pencils, positions of points on lines, and line intersections.
class PlaneTables {
 public:
  /// Throws std::invalid_argument when n exceeds kMaxPlaneTableN (q > 16).
  explicit PlaneTables(IncidenceGraph plane);

  int q() const { return plane_.q; }
  int n() const { return plane_.n(); }
  const IncidenceGraph& plane() const { return plane_; }

  /// N(line) in ascending order; p_1..p_{q+1} of the line are these.
  std::span<const int> points_on(int line) const { return points_on_[line]; }
  std::span<const int> lines_through(int point) const { return lines_through_[point]; }

  /// Index of point within points_on(line), or -1.
  int position(int point, int line) const { return position_[point * n() + line]; }
  /// Common point of two distinct lines.
  int meet(int line1, int line2) const { return meet_[line1 * n() + line2]; }

  const PlaneSet& pencil(int point) const { return pencil_[point]; }

 private:
  IncidenceGraph plane_;
  std::vector<std::vector<int>> points_on_;
  std::vector<std::vector<int>> lines_through_;
  std::vector<int> position_;
  std::vector<int> meet_;
  std::vector<PlaneSet> pencil_;
};

/// Special entry (p l, S(X)): p on l, X a nonempty subset of N(l) \ {p}
/// stored as a bit mask over the positions of points_on(l), and
/// S(X) = X + (lines not meeting X).
struct SpecialEntry {
  int point = 0;
  int line = 0;
  std::uint32_t subset = 0;

  friend bool operator==(const SpecialEntry&, const SpecialEntry&) = default;
};

/// Points of X, ascending.
std::vector<int> subset_points(const PlaneTables& t, const SpecialEntry& se);

/// All special entries: edges by (point, line), then subset masks ascending.
/// Yields |E| * (2^q - 1) entries.
std::vector<SpecialEntry> enumerate_special_entries(const PlaneTables& t);

/// True when the entry satisfies its structural invariants: p on l, X
/// nonempty, p not in X, and S(X) stable and disjoint from {p, l}.
bool is_valid_special_entry(const PlaneTables& t, const SpecialEntry& se);

/// S(X) as a set of global vertices of the incidence graph (2n bits).
StableSet special_column(const PlaneTables& t, const SpecialEntry& se);

/// 1 / (k * C(q, k) * (q + 1)) for |X| = k.
/// Throws std::invalid_argument("invalid special entry") unless 1 <= k <= q.
Rational entry_weight(int subset_size, int q);
Rational entry_weight(const SpecialEntry& se, int q);

struct TotalWeight {
  Rational enumerated;
  Rational closed_form;  // n * H_q
  std::size_t entries = 0;
};

/// Sum of all special-entry weights by direct enumeration, compared with
/// n * (1 + 1/2 + ... + 1/q). Throws std::logic_error on mismatch and
/// std::invalid_argument outside 2 <= q <= 16.
TotalWeight total_weight(int q);
TotalWeight total_weight(const PlaneTables& t);

/// Rectangle (P_R, L_R) over local point and line indices.
MaximalRectangle make_plane_rectangle(const PlaneTables& t, std::span<const int> points,
                                      std::span<const int> lines);

/// The four coverage conditions: X misses P_R, L_R within N(X), p in P_R,
/// l in L_R.
bool covered_by(const PlaneTables& t, const SpecialEntry& se, const MaximalRectangle& r);

/// Coverage from first principles: row (p, l) inside P_R x L_R and column
/// S(X) disjoint from P_R + L_R.
bool contains_special_entry(const PlaneTables& t, const SpecialEntry& se, const MaximalRectangle& r);

/// Exact weight of the special entries inside r, enumerating l in L_R,
/// p in P_R on l, and X within N(l) \ {p}. On each line every other line of
/// L_R forces its intersection point into X, which is how coverage is tested.
Rational rect_weight(const PlaneTables& t, const MaximalRectangle& r);

/// Same quantity by scanning every special entry with covered_by. Slow;
/// used to cross-check rect_weight.
Rational rect_weight_reference(const PlaneTables& t, const MaximalRectangle& r);

/// Weight of a rectangle with L_R = {l} and t points of l in P_R, from the
/// closed form (1 / C(q+1, t)) * sum_{k=1}^{q+1-t} C(q-k, t-1) / k.
Rational single_line_weight_closed_form(int q, int t);

/// Minimum |X| over special entries on `line` covered by r.
/// Throws std::invalid_argument("line not active in rectangle").
int k_min(const PlaneTables& t, int line, const MaximalRectangle& r);

struct LineClaimRecord {
  int line = 0;
  int k = 0;                // minimum |X| on the line
  Rational weight;          // w(line): covered special entries on the line
  Rational weight_bound;    // 1 / ((q + 1) k)
  bool weight_ok = false;   // weight <= weight_bound
  bool size_ok = false;     // |L_R| <= (q + 1) k
  bool inclusion_ok = false;  // a minimum X is inside every covered Y
  bool weight_tight = false;
};

struct LineBoundsReport {
  std::vector<LineClaimRecord> lines;  // active lines only
  Rational total;                      // sum of line weights
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Per-line weight and size bounds for rectangles with |L_R| >= 2, each
/// evaluated exactly with covered_by. Throws std::invalid_argument when
/// |L_R| < 2.
LineBoundsReport verify_line_bounds(const PlaneTables& t, const MaximalRectangle& r);

enum class BinomialIdentity {
  hockey_stick,          // sum_{j=c}^{h} C(j, c) = C(h+1, c+1)
  shifted_convolution,   // sum_{j=0}^{h} C(x+j, j) C(h+y-j, h-j) = C(x+y+h+1, h)
  inverse_binomial_sum,  // t sum_k (1/k) C(q+1-t-c, k-c) / C(q, k) = 1 / C(t+c-1, t) <= 1/c
};

/// Evaluates both sides exactly. Parameters: {h, c}, {x, y, h} or
/// {q, c, t}. Throws std::invalid_argument outside the admissible range.
bool binomial_identity_check(BinomialIdentity which, std::span<const int> params);

struct BinomialSweep {
  std::size_t hockey_stick = 0;
  std::size_t shifted_convolution = 0;
  std::size_t inverse_binomial_sum = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Every admissible parameter tuple with all parameters (and q) <= max_param.
BinomialSweep sweep_binomial_identities(int max_param);

struct RectangleSweepReport {
  int q = 0;
  int n = 0;
  Rational total_weight;
  Rational max_rect_weight;
  std::size_t rectangles_checked = 0;
  std::size_t multi_line_checked = 0;   // |L_R| >= 2, per-line claims evaluated
  std::size_t single_line_checked = 0;  // |L_R| == 1, compared with the closed form
  std::size_t tight_rectangles = 0;     // weight exactly 1
  std::size_t tight_lines = 0;          // per-line weight bound attained
  std::string method;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty() && max_rect_weight <= 1; }
};

/// Checks one batch of rectangles: weight <= 1 with two independent weight
/// computations agreeing, the per-line claims when |L_R| >= 2, and the
/// closed form when |L_R| == 1. Results accumulate into report.
void check_rectangles(const PlaneTables& t, std::span<const MaximalRectangle> rects,
                      RectangleSweepReport& report);

/// All 2^n * 2^n pairs (P_R, L_R). Throws std::invalid_argument for n > 10.
RectangleSweepReport exhaustive_rectangle_sweep(const PlaneTables& t);

/// Uniformly random (P_R, L_R): every point and line included independently
/// with probability 1/2, bits drawn from mt19937_64(seed).
RectangleSweepReport sampled_rectangle_sweep(const PlaneTables& t, std::size_t samples,
                                             std::uint64_t seed);

/// Structured families where the bounds are tight or nearly so:
/// single-line rectangles at every t, pencil rectangles L_R inside N(c),
/// every boxed rectangle (c, l, Y), and L_R = N(X) for X on a line.
std::vector<MaximalRectangle> adversarial_rectangles(const PlaneTables& t);

/// TSV with header q, n, total_weight, max_rect_weight_observed,
/// rectangles_checked, method.
void write_weight_report_tsv(std::ostream& out, std::span<const RectangleSweepReport> rows);

}  // namespace stabxc
