#include "tomo/bounds.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace tomo::bounds {

namespace {

void check_alpha(int alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
}

void check_overlap(int overlap) {
  if (overlap < 0) throw std::invalid_argument("overlap must be >= 0");
}

void check_span(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("row and column spans must be >= 1");
  }
}

long long harmonic_sum(int n) {
  long long sum = 0;
  for (int i = 1; i <= n; ++i) sum += n / i;
  return sum;
}

}  // namespace

long long harmonic_size_bound(int alpha) {
  check_alpha(alpha);
  return harmonic_sum(alpha);
}

double log_size_bound(int alpha) {
  check_alpha(alpha);
  return alpha * (1.0 + std::log(static_cast<double>(alpha)));
}

long long general_harmonic_size_bound(int alpha, int overlap) {
  check_alpha(alpha);
  check_overlap(overlap);
  return harmonic_sum(alpha + overlap);
}

double general_log_size_bound(int alpha, int overlap) {
  check_alpha(alpha);
  check_overlap(overlap);
  const double n = alpha + overlap;
  return n * (1.0 + std::log(n));
}

double half_diff_squared_bound(int alpha, int rows, int cols) {
  check_alpha(alpha);
  check_span(rows, cols);
  const double s = rows + cols;
  return alpha / 4.0 * s * (s + alpha - 1);
}

double size_lower_bound(int alpha, int rows, int cols) {
  check_alpha(alpha);
  check_span(rows, cols);
  const double s = rows + cols;
  return s * s / (4.0 * (alpha + 1));
}

double sqrt_size_bound(int alpha, int overlap) {
  check_alpha(alpha);
  check_overlap(overlap);
  const double a = alpha;
  const double p = overlap;
  const double beta = std::sqrt(a) * (a + 1);
  const double root = std::sqrt(beta * (a - 1) + 4 * (a + 1) * p + beta * beta);
  const double x = beta + root + (a - 1) / 2;
  return p + std::sqrt(a / 4 * x * x - (a - 1) * (a - 1) * a / 16);
}

double alpers_size_bound(int alpha, int overlap) {
  check_alpha(alpha);
  check_overlap(overlap);
  const double a = alpha;
  const double p = overlap;
  return p + (a + 1) * (a - 0.5) +
         (a + 1) * std::sqrt(2 * p + (2 * a - 1) * (2 * a - 1) / 4);
}

SymmetricDiffBounds symmetric_diff_bounds(int alpha, int overlap) {
  check_alpha(alpha);
  check_overlap(overlap);
  const double a = alpha;
  const double p = overlap;
  const double beta = std::sqrt(a) * (a + 1);
  const double root = std::sqrt(beta * (a - 1) + 4 * (a + 1) * p + beta * beta);
  const double x = beta + root + (a - 1) / 2;
  return SymmetricDiffBounds{
      2 * a + 2 * (a + p) * std::log(a + p),
      std::sqrt(a * x * x - (a - 1) * (a - 1) * a / 4),
  };
}

namespace {

constexpr double kRelTol = 1e-9;

BoundEntry entry(const char* name, const char* quantity, double measured,
                 double limit, bool integral, Direction dir,
                 const char* note = "") {
  BoundEntry e;
  e.name = name;
  e.quantity = quantity;
  e.measured = measured;
  e.limit = limit;
  e.integral = integral;
  e.direction = dir;
  e.note = note;
  const double tol = integral ? 0.0 : kRelTol * std::max(1.0, std::abs(limit));
  if (dir == Direction::kUpper) {
    e.holds = measured <= limit + tol;
    e.slack = limit - measured;
  } else {
    e.holds = measured >= limit - tol;
    e.slack = measured - limit;
  }
  return e;
}

// The size lower bound is stated for instances where every occupied row and
// column of the original meets the symmetric difference.
bool pruning_hypothesis_holds(const InstancePair& pair) {
  const PointSet diff =
      symmetric_difference(pair.original(), pair.reconstruction());
  std::set<int> diff_rows, diff_cols;
  for (const auto& p : diff) {
    diff_rows.insert(p.row);
    diff_cols.insert(p.col);
  }
  for (const auto& p : pair.original()) {
    if (diff_rows.count(p.row) == 0 || diff_cols.count(p.col) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool BoundReport::all_hold() const {
  for (const auto& e : entries) {
    if (!e.advisory() && !e.holds) return false;
  }
  return true;
}

BoundReport report(const InstancePair& pair) {
  const Metrics& m = pair.metrics();
  BoundReport rep;
  if (m.alpha == 0) return rep;  // identical projections, nothing to bound

  if (m.size1 == m.size2) {
    const double size1 = m.size1;
    if (m.overlap == 0) {
      rep.entries.push_back(entry("harmonic", "|F1|", size1,
                                  static_cast<double>(harmonic_size_bound(m.alpha)),
                                  true, Direction::kUpper));
      rep.entries.push_back(entry("disjoint-log", "|F1|", size1,
                                  log_size_bound(m.alpha), false,
                                  Direction::kUpper));
    }
    rep.entries.push_back(
        entry("general-harmonic", "|F1|", size1,
              static_cast<double>(general_harmonic_size_bound(m.alpha, m.overlap)),
              true, Direction::kUpper));
    rep.entries.push_back(entry("general-log", "|F1|", size1,
                                general_log_size_bound(m.alpha, m.overlap),
                                false, Direction::kUpper));
    const double u = m.half_diff();
    rep.entries.push_back(
        entry("half-diff-squared", "u^2", u * u,
              half_diff_squared_bound(m.alpha, m.occupied_rows, m.occupied_cols),
              false, Direction::kUpper));
    rep.entries.push_back(
        entry("size-lower", "|F1|", size1,
              size_lower_bound(m.alpha, m.occupied_rows, m.occupied_cols),
              false, Direction::kLower,
              pruning_hypothesis_holds(pair) ? "" : "conditional"));
    rep.entries.push_back(entry("sqrt", "|F1|", size1,
                                sqrt_size_bound(m.alpha, m.overlap), false,
                                Direction::kUpper));
    rep.entries.push_back(entry("alpers-comparison", "|F1|", size1,
                                alpers_size_bound(m.alpha, m.overlap), false,
                                Direction::kUpper));
    if (m.alpha == 1) {
      // Two historically stated forms of the alpha = 1 overlap bound; kept
      // side by side for comparison, neither asserted.
      rep.entries.push_back(entry(
          "alpha1-overlap", "p", m.overlap,
          size1 + 0.5 - std::sqrt(2 * size1 + 0.25), false, Direction::kLower,
          "informational"));
      rep.entries.push_back(entry("alpha1-overlap-reduced", "p", m.overlap,
                                  size1 - std::sqrt(2 * size1), false,
                                  Direction::kLower, "informational"));
    }
  }

  const SymmetricDiffBounds sym = symmetric_diff_bounds(m.alpha, m.overlap);
  rep.entries.push_back(entry("symmetric-log", "|diff|", m.sym_diff,
                              sym.log_form, false, Direction::kUpper));
  rep.entries.push_back(entry("symmetric-sqrt", "|diff|", m.sym_diff,
                              sym.sqrt_form, false, Direction::kUpper));
  return rep;
}

}  // namespace tomo::bounds
