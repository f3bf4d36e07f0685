#include "stabxc/special_weights.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stabxc {

PlaneTables::PlaneTables(IncidenceGraph plane) : plane_(std::move(plane)) {
  const int nn = n();
  if (nn > kMaxPlaneTableN) throw std::invalid_argument("plane too large for special-entry tables");
  points_on_.resize(nn);
  lines_through_.resize(nn);
  position_.assign(static_cast<std::size_t>(nn) * nn, -1);
  meet_.assign(static_cast<std::size_t>(nn) * nn, -1);
  pencil_.assign(nn, PlaneSet{});
  for (int l = 0; l < nn; ++l) {
    points_on_[l] = plane_.points_on(l);
    for (int pos = 0; pos < static_cast<int>(points_on_[l].size()); ++pos) {
      const int p = points_on_[l][pos];
      position_[p * nn + l] = pos;
      lines_through_[p].push_back(l);
      pencil_[p].set(l);
    }
  }
  for (int p = 0; p < nn; ++p) {
    const auto& ls = lines_through_[p];
    for (int l1 : ls) {
      for (int l2 : ls) {
        if (l1 != l2) meet_[l1 * nn + l2] = p;
      }
    }
  }
}

namespace {

std::uint32_t full_mask(int q) { return (std::uint32_t{1} << (q + 1)) - 1; }

PlaneSet to_plane_set(const VertexSet& s) {
  PlaneSet out;
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.set(i);
  return out;
}

// Rectangle converted once into fixed-width sets.
struct PlaneRect {
  PlaneSet points;
  PlaneSet lines;
  std::vector<int> line_list;
};

PlaneRect to_plane_rect(const MaximalRectangle& r) {
  return {to_plane_set(r.a_side), to_plane_set(r.b_side), members(r.b_side)};
}

PlaneSet union_of_pencils(const PlaneTables& t, int line, std::uint32_t subset) {
  PlaneSet out;
  const auto pts = t.points_on(line);
  for (std::uint32_t m = subset; m; m &= m - 1) out |= t.pencil(pts[std::countr_zero(m)]);
  return out;
}

bool covered_fast(const PlaneTables& t, int point, int line, std::uint32_t subset, const PlaneRect& r) {
  if (!r.points.test(point) || !r.lines.test(line)) return false;
  const auto pts = t.points_on(line);
  for (std::uint32_t m = subset; m; m &= m - 1) {
    if (r.points.test(pts[std::countr_zero(m)])) return false;
  }
  return (r.lines & ~union_of_pencils(t, line, subset)).none();
}

std::vector<Rational> weights_by_size(int q) {
  std::vector<Rational> w(q + 1);
  for (int k = 1; k <= q; ++k) w[k] = entry_weight(k, q);
  return w;
}

std::string describe(const MaximalRectangle& r) {
  std::ostringstream os;
  os << "P_R={";
  for (int v : members(r.a_side)) os << ' ' << v;
  os << " } L_R={";
  for (int v : members(r.b_side)) os << ' ' << v;
  os << " }";
  return os.str();
}

}  // namespace

std::vector<int> subset_points(const PlaneTables& t, const SpecialEntry& se) {
  std::vector<int> out;
  const auto pts = t.points_on(se.line);
  for (std::uint32_t m = se.subset; m; m &= m - 1) out.push_back(pts[std::countr_zero(m)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpecialEntry> enumerate_special_entries(const PlaneTables& t) {
  const int q = t.q();
  const std::uint32_t full = full_mask(q);
  std::vector<SpecialEntry> out;
  out.reserve(static_cast<std::size_t>(t.n()) * (q + 1) * ((std::size_t{1} << q) - 1));
  for (int p = 0; p < t.n(); ++p) {
    for (int l : t.lines_through(p)) {
      const std::uint32_t allowed = full & ~(std::uint32_t{1} << t.position(p, l));
      for (std::uint32_t x = 1; x <= full; ++x) {
        if ((x & allowed) == x) out.push_back({p, l, x});
      }
    }
  }
  return out;
}

StableSet special_column(const PlaneTables& t, const SpecialEntry& se) {
  const int n = t.n();
  StableSet col(2 * n);
  for (int x : subset_points(t, se)) col.set(x);
  const PlaneSet nx = union_of_pencils(t, se.line, se.subset);
  for (int l = 0; l < n; ++l) {
    if (!nx.test(l)) col.set(n + l);
  }
  return col;
}

bool is_valid_special_entry(const PlaneTables& t, const SpecialEntry& se) {
  const int n = t.n();
  if (se.point < 0 || se.point >= n || se.line < 0 || se.line >= n) return false;
  const int pos = t.position(se.point, se.line);
  if (pos < 0) return false;
  if (se.subset == 0 || (se.subset & ~full_mask(t.q())) != 0) return false;
  if (se.subset & (std::uint32_t{1} << pos)) return false;
  const StableSet col = special_column(t, se);
  return is_stable(t.plane().graph, col) && !col.test(se.point) && !col.test(n + se.line);
}

Rational entry_weight(int subset_size, int q) {
  if (subset_size < 1 || subset_size > q) throw std::invalid_argument("invalid special entry");
  return Rational(1, BigInt(subset_size) * binomial(q, subset_size) * (q + 1));
}

Rational entry_weight(const SpecialEntry& se, int q) {
  return entry_weight(std::popcount(se.subset), q);
}

TotalWeight total_weight(int q) {
  if (q < 2 || q > 16) throw std::invalid_argument("total_weight needs 2 <= q <= 16");
  return total_weight(PlaneTables(build_plane(q)));
}

TotalWeight total_weight(const PlaneTables& t) {
  const int q = t.q();
  if (q < 2 || q > 16) throw std::invalid_argument("total_weight needs 2 <= q <= 16");
  const std::uint32_t full = full_mask(q);
  // Tally subsets by size while walking every (p, l, X); weights applied at the end.
  std::vector<std::uint64_t> by_size(q + 2, 0);
  TotalWeight tw;
  for (int p = 0; p < t.n(); ++p) {
    for (int l : t.lines_through(p)) {
      const std::uint32_t allowed = full & ~(std::uint32_t{1} << t.position(p, l));
      for (std::uint32_t x = allowed; x; x = (x - 1) & allowed) {
        ++by_size[std::popcount(x)];
        ++tw.entries;
      }
    }
  }
  for (int k = 1; k <= q; ++k) tw.enumerated += Rational(BigInt(by_size[k])) * entry_weight(k, q);
  if (by_size[q + 1] != 0) throw std::logic_error("special entry with |X| = q + 1");
  tw.closed_form = Rational(t.n()) * harmonic(q);
  if (tw.enumerated != tw.closed_form) {
    throw std::logic_error("total weight mismatch: " + to_string(tw.enumerated) + " vs " +
                           to_string(tw.closed_form));
  }
  return tw;
}

MaximalRectangle make_plane_rectangle(const PlaneTables& t, std::span<const int> points,
                                      std::span<const int> lines) {
  MaximalRectangle r{VertexSet(t.n()), VertexSet(t.n())};
  for (int p : points) r.a_side.set(p);
  for (int l : lines) r.b_side.set(l);
  return r;
}

bool covered_by(const PlaneTables& t, const SpecialEntry& se, const MaximalRectangle& r) {
  return covered_fast(t, se.point, se.line, se.subset, to_plane_rect(r));
}

bool contains_special_entry(const PlaneTables& t, const SpecialEntry& se, const MaximalRectangle& r) {
  if (!r.a_side.test(se.point) || !r.b_side.test(se.line)) return false;
  const int n = t.n();
  const StableSet col = special_column(t, se);
  for (int v = 0; v < n; ++v) {
    if (col.test(v) && r.a_side.test(v)) return false;
    if (col.test(n + v) && r.b_side.test(v)) return false;
  }
  return true;
}

Rational rect_weight(const PlaneTables& t, const MaximalRectangle& r) {
  const int q = t.q();
  const std::uint32_t full = full_mask(q);
  const PlaneRect pr = to_plane_rect(r);
  std::vector<std::uint64_t> by_size(q + 2, 0);
  for (int l : pr.line_list) {
    const auto pts = t.points_on(l);
    std::uint32_t in_p = 0;
    for (int pos = 0; pos <= q; ++pos) {
      if (pr.points.test(pts[pos])) in_p |= std::uint32_t{1} << pos;
    }
    if (!in_p) continue;
    std::uint32_t forced = 0;
    for (int other : pr.line_list) {
      if (other != l) forced |= std::uint32_t{1} << t.position(t.meet(l, other), l);
    }
    if (forced & in_p) continue;
    const std::uint32_t rest = full & ~in_p & ~forced;
    const int t_count = std::popcount(in_p);
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t x = forced | sub;
      if (x) by_size[std::popcount(x)] += t_count;
      if (sub == 0) break;
    }
  }
  Rational total;
  for (int k = 1; k <= q; ++k) {
    if (by_size[k]) total += Rational(BigInt(by_size[k])) * entry_weight(k, q);
  }
  return total;
}

Rational rect_weight_reference(const PlaneTables& t, const MaximalRectangle& r) {
  const PlaneRect pr = to_plane_rect(r);
  Rational total;
  for (const auto& se : enumerate_special_entries(t)) {
    if (covered_fast(t, se.point, se.line, se.subset, pr)) total += entry_weight(se, t.q());
  }
  return total;
}

Rational single_line_weight_closed_form(int q, int t) {
  if (q < 1 || t < 1 || t > q + 1) throw std::invalid_argument("single-line weight needs 1 <= t <= q + 1");
  Rational sum;
  for (int k = 1; k <= q + 1 - t; ++k) sum += Rational(binomial(q - k, t - 1), BigInt(k));
  return sum / Rational(binomial(q + 1, t));
}

namespace {

struct LineScan {
  int k = 0;  // 0 when the line is inactive
  std::vector<std::uint64_t> by_size;
  std::vector<std::uint32_t> covered_subsets;
};

LineScan scan_line(const PlaneTables& t, int line, const PlaneRect& pr) {
  const int q = t.q();
  const std::uint32_t full = full_mask(q);
  LineScan s;
  s.by_size.assign(q + 2, 0);
  const auto pts = t.points_on(line);
  for (int pos = 0; pos <= q; ++pos) {
    const std::uint32_t allowed = full & ~(std::uint32_t{1} << pos);
    for (std::uint32_t x = allowed; x; x = (x - 1) & allowed) {
      if (!covered_fast(t, pts[pos], line, x, pr)) continue;
      const int size = std::popcount(x);
      ++s.by_size[size];
      s.covered_subsets.push_back(x);
      if (s.k == 0 || size < s.k) s.k = size;
    }
  }
  return s;
}

}  // namespace

int k_min(const PlaneTables& t, int line, const MaximalRectangle& r) {
  const LineScan s = scan_line(t, line, to_plane_rect(r));
  if (s.k == 0) throw std::invalid_argument("line not active in rectangle");
  return s.k;
}

LineBoundsReport verify_line_bounds(const PlaneTables& t, const MaximalRectangle& r) {
  const PlaneRect pr = to_plane_rect(r);
  const int lr = static_cast<int>(pr.line_list.size());
  if (lr < 2) throw std::invalid_argument("per-line claims need |L_R| >= 2");
  const int q = t.q();
  const auto w = weights_by_size(q);

  LineBoundsReport report;
  for (int l : pr.line_list) {
    const LineScan s = scan_line(t, l, pr);
    if (s.k == 0) continue;
    LineClaimRecord rec;
    rec.line = l;
    rec.k = s.k;
    for (int k = 1; k <= q; ++k) {
      if (s.by_size[k]) rec.weight += Rational(BigInt(s.by_size[k])) * w[k];
    }
    rec.weight_bound = Rational(1, (q + 1) * s.k);
    rec.weight_ok = rec.weight <= rec.weight_bound;
    rec.weight_tight = rec.weight == rec.weight_bound;
    rec.size_ok = lr <= (q + 1) * s.k;
    for (std::uint32_t x : s.covered_subsets) {
      if (std::popcount(x) != s.k) continue;
      const bool inside_all = std::all_of(s.covered_subsets.begin(), s.covered_subsets.end(),
                                          [x](std::uint32_t y) { return (x & y) == x; });
      if (inside_all) {
        rec.inclusion_ok = true;
        break;
      }
    }
    if (!rec.weight_ok) {
      report.violations.push_back("line " + std::to_string(l) + ": weight " + to_string(rec.weight) +
                                  " exceeds " + to_string(rec.weight_bound));
    }
    if (!rec.size_ok) {
      report.violations.push_back("line " + std::to_string(l) + ": |L_R| = " + std::to_string(lr) +
                                  " exceeds (q+1)k = " + std::to_string((q + 1) * s.k));
    }
    if (!rec.inclusion_ok) {
      report.violations.push_back("line " + std::to_string(l) + ": no minimum X inside every covered Y");
    }
    report.total += rec.weight;
    report.lines.push_back(std::move(rec));
  }
  return report;
}

bool binomial_identity_check(BinomialIdentity which, std::span<const int> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) throw std::invalid_argument("wrong number of identity parameters");
  };
  switch (which) {
    case BinomialIdentity::hockey_stick: {
      need(2);
      const int h = params[0], c = params[1];
      if (!(h >= c && c >= 0)) throw std::invalid_argument("hockey_stick needs h >= c >= 0");
      BigInt lhs = 0;
      for (int j = c; j <= h; ++j) lhs += binomial(j, c);
      return lhs == binomial(h + 1, c + 1);
    }
    case BinomialIdentity::shifted_convolution: {
      need(3);
      const int x = params[0], y = params[1], h = params[2];
      if (x < 1 || y < 1 || h < 1) throw std::invalid_argument("shifted_convolution needs x, y, h >= 1");
      BigInt lhs = 0;
      for (int j = 0; j <= h; ++j) lhs += binomial(x + j, j) * binomial(h + y - j, h - j);
      return lhs == binomial(x + y + h + 1, h);
    }
    case BinomialIdentity::inverse_binomial_sum: {
      need(3);
      const int q = params[0], c = params[1], t = params[2];
      if (q < 1 || c < 1 || t < 1 || c + t > q + 1) {
        throw std::invalid_argument("inverse_binomial_sum needs q, c, t >= 1 and c + t <= q + 1");
      }
      Rational lhs;
      for (int k = c; k <= q + 1 - t; ++k) {
        lhs += Rational(binomial(q + 1 - t - c, k - c), BigInt(k) * binomial(q, k));
      }
      lhs *= t;
      const Rational rhs(BigInt(1), binomial(t + c - 1, t));
      return lhs == rhs && rhs <= Rational(1, c);
    }
  }
  return false;
}

BinomialSweep sweep_binomial_identities(int max_param) {
  BinomialSweep sweep;
  auto record = [&](BinomialIdentity which, std::vector<int> params, std::size_t& counter, const char* name) {
    ++counter;
    if (!binomial_identity_check(which, params)) {
      std::string msg = name;
      for (int v : params) msg += " " + std::to_string(v);
      sweep.failures.push_back(msg);
    }
  };
  for (int h = 0; h <= max_param; ++h) {
    for (int c = 0; c <= h; ++c) record(BinomialIdentity::hockey_stick, {h, c}, sweep.hockey_stick, "hockey_stick");
  }
  for (int x = 1; x <= max_param; ++x) {
    for (int y = 1; y <= max_param; ++y) {
      for (int h = 1; h <= max_param; ++h) {
        record(BinomialIdentity::shifted_convolution, {x, y, h}, sweep.shifted_convolution, "shifted_convolution");
      }
    }
  }
  for (int q = 1; q <= max_param; ++q) {
    for (int c = 1; c <= q; ++c) {
      for (int t = 1; c + t <= q + 1; ++t) {
        record(BinomialIdentity::inverse_binomial_sum, {q, c, t}, sweep.inverse_binomial_sum, "inverse_binomial_sum");
      }
    }
  }
  return sweep;
}

void check_rectangles(const PlaneTables& t, std::span<const MaximalRectangle> rects,
                      RectangleSweepReport& report) {
  const int q = t.q();
  report.q = q;
  report.n = t.n();
  for (const auto& r : rects) {
    ++report.rectangles_checked;
    const Rational w = rect_weight(t, r);
    if (w > report.max_rect_weight) report.max_rect_weight = w;
    if (w == 1) ++report.tight_rectangles;
    if (w > 1) report.violations.push_back("weight " + to_string(w) + " > 1 at " + describe(r));

    const auto lines = r.b_side.count();
    if (lines >= 2) {
      ++report.multi_line_checked;
      const LineBoundsReport claims = verify_line_bounds(t, r);
      for (const auto& rec : claims.lines) report.tight_lines += rec.weight_tight ? 1 : 0;
      for (const auto& v : claims.violations) report.violations.push_back(v + " at " + describe(r));
      if (claims.total != w) {
        report.violations.push_back("weight routes disagree (" + to_string(w) + " vs " + to_string(claims.total) +
                                    ") at " + describe(r));
      }
    } else if (lines == 1) {
      ++report.single_line_checked;
      const int l = static_cast<int>(r.b_side.find_first());
      int on_line = 0;
      for (int p : t.points_on(l)) on_line += r.a_side.test(p) ? 1 : 0;
      if (on_line > 0) {
        const Rational expected = single_line_weight_closed_form(q, on_line);
        if (expected != w) {
          report.violations.push_back("single-line weight " + to_string(w) + " differs from closed form " +
                                      to_string(expected) + " at " + describe(r));
        }
      } else if (w != 0) {
        report.violations.push_back("nonzero weight without rows at " + describe(r));
      }
    }
  }
}

namespace {

RectangleSweepReport new_report(const PlaneTables& t, std::string method) {
  RectangleSweepReport report;
  report.q = t.q();
  report.n = t.n();
  report.total_weight = total_weight(t).enumerated;
  report.method = std::move(method);
  return report;
}

}  // namespace

RectangleSweepReport exhaustive_rectangle_sweep(const PlaneTables& t) {
  const int n = t.n();
  if (n > 10) throw std::invalid_argument("exhaustive sweep needs n <= 10");
  RectangleSweepReport report = new_report(t, "exhaustive");
  std::vector<MaximalRectangle> batch;
  batch.reserve(std::size_t{1} << n);
  for (unsigned long pm = 0; pm < (1UL << n); ++pm) {
    batch.clear();
    for (unsigned long lm = 0; lm < (1UL << n); ++lm) {
      batch.push_back({VertexSet(n, pm), VertexSet(n, lm)});
    }
    check_rectangles(t, batch, report);
  }
  return report;
}

RectangleSweepReport sampled_rectangle_sweep(const PlaneTables& t, std::size_t samples, std::uint64_t seed) {
  const int n = t.n();
  RectangleSweepReport report = new_report(t, "sampled");
  std::mt19937_64 rng(seed);
  auto random_set = [&] {
    VertexSet s(n);
    for (int base = 0; base < n; base += 64) {
      const std::uint64_t bits = rng();
      for (int i = 0; i < 64 && base + i < n; ++i) {
        if ((bits >> i) & 1U) s.set(base + i);
      }
    }
    return s;
  };
  constexpr std::size_t kBatch = 4096;
  std::vector<MaximalRectangle> batch;
  batch.reserve(kBatch);
  for (std::size_t done = 0; done < samples;) {
    batch.clear();
    for (; batch.size() < kBatch && done < samples; ++done) {
      VertexSet pts = random_set();
      VertexSet lns = random_set();
      batch.push_back({std::move(pts), std::move(lns)});
    }
    check_rectangles(t, batch, report);
  }
  return report;
}

std::vector<MaximalRectangle> adversarial_rectangles(const PlaneTables& t) {
  const int n = t.n();
  const int q = t.q();
  std::vector<MaximalRectangle> out;
  auto add = [&](const std::vector<int>& pts, const std::vector<int>& lns) {
    out.push_back(make_plane_rectangle(t, pts, lns));
  };

  // One line, first t points of it.
  for (int l = 0; l < n; ++l) {
    const auto pts = t.points_on(l);
    for (int k = 1; k <= q + 1; ++k) add({pts.begin(), pts.begin() + k}, {l});
  }

  // Pencils through c: first s lines, against all other points and against one line's points.
  for (int c = 0; c < n; ++c) {
    const auto ls = t.lines_through(c);
    std::vector<int> others;
    for (int p = 0; p < n; ++p) {
      if (p != c) others.push_back(p);
    }
    std::vector<int> first_line_rest;
    for (int p : t.points_on(ls[0])) {
      if (p != c) first_line_rest.push_back(p);
    }
    for (int s = 2; s <= q + 1; ++s) {
      const std::vector<int> lines(ls.begin(), ls.begin() + s);
      add(others, lines);
      add(first_line_rest, lines);
    }
  }

  // Boxed rectangles: center c on l, Y within N(l) containing c; rows are
  // N(l) \ Y against the pencil of c.
  for (int l = 0; l < n; ++l) {
    const auto pts = t.points_on(l);
    const std::uint32_t full = full_mask(q);
    for (int cpos = 0; cpos <= q; ++cpos) {
      const std::uint32_t cbit = std::uint32_t{1} << cpos;
      for (std::uint32_t y = cbit; y <= full; ++y) {
        if (!(y & cbit) || y == full) continue;
        std::vector<int> rows;
        for (int pos = 0; pos <= q; ++pos) {
          if (!(y & (std::uint32_t{1} << pos))) rows.push_back(pts[pos]);
        }
        const auto pencil = t.lines_through(pts[cpos]);
        add(rows, {pencil.begin(), pencil.end()});
      }
    }
  }

  // L_R = N(X) for X on a line with |X| >= 2, P_R everything else.
  for (int l = 0; l < n; ++l) {
    const auto pts = t.points_on(l);
    for (std::uint32_t x = 1; x < full_mask(q); ++x) {
      if (std::popcount(x) < 2) continue;
      PlaneSet nx = union_of_pencils(t, l, x);
      std::vector<int> lines;
      for (int m = 0; m < n; ++m) {
        if (nx.test(m)) lines.push_back(m);
      }
      std::vector<int> rows;
      for (int p = 0; p < n; ++p) {
        bool in_x = false;
        for (std::uint32_t b = x; b; b &= b - 1) in_x = in_x || pts[std::countr_zero(b)] == p;
        if (!in_x) rows.push_back(p);
      }
      add(rows, lines);
    }
  }
  return out;
}

void write_weight_report_tsv(std::ostream& out, std::span<const RectangleSweepReport> rows) {
  out << "q\tn\ttotal_weight\tmax_rect_weight_observed\trectangles_checked\tmethod\n";
  for (const auto& r : rows) {
    out << r.q << '\t' << r.n << '\t' << to_string(r.total_weight) << '\t' << to_string(r.max_rect_weight) << '\t'
        << r.rectangles_checked << '\t' << r.method << '\n';
  }
}

}  // namespace stabxc
