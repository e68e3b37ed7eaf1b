#include "tomo/staircase.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "tomo/errors.hpp"

namespace tomo {

int tau(const PointSet& original_only, const PointSet& reconstruction_only) {
  std::map<int, int> rho, sigma;
  for (const auto& p : original_only) {
    ++rho[p.row];
    ++sigma[p.col];
  }
  for (const auto& p : reconstruction_only) {
    --rho[p.row];
    --sigma[p.col];
  }
  int t = 0;
  for (const auto& [i, v] : rho) t += std::abs(v);
  for (const auto& [j, v] : sigma) t += std::abs(v);
  return t;
}

namespace {

struct ColRowLess {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const {
    if (a.col != b.col) return a.col < b.col;
    return a.row < b.row;
  }
};

// One side's not-yet-used points, indexed for row scans and column scans.
class UnusedIndex {
 public:
  explicit UnusedIndex(const PointSet& pts)
      : by_row_(pts.begin(), pts.end()), by_col_(pts.begin(), pts.end()) {}

  bool empty() const { return by_row_.empty(); }

  std::optional<LatticePoint> first() const {
    if (by_row_.empty()) return std::nullopt;
    return *by_row_.begin();
  }

  // In the triangular layout every candidate lies on the stated side of p,
  // so "nearest" is a one-sided neighbour query.
  std::optional<LatticePoint> nearest_right(LatticePoint p) const {
    auto it = by_row_.upper_bound(p);
    if (it != by_row_.end() && it->row == p.row) return *it;
    return std::nullopt;
  }

  std::optional<LatticePoint> nearest_left(LatticePoint p) const {
    auto it = by_row_.lower_bound(p);
    if (it == by_row_.begin()) return std::nullopt;
    --it;
    if (it->row == p.row) return *it;
    return std::nullopt;
  }

  std::optional<LatticePoint> nearest_above(LatticePoint p) const {
    auto it = by_col_.lower_bound(p);
    if (it == by_col_.begin()) return std::nullopt;
    --it;
    if (it->col == p.col) return *it;
    return std::nullopt;
  }

  std::optional<LatticePoint> nearest_below(LatticePoint p) const {
    auto it = by_col_.upper_bound(p);
    if (it != by_col_.end() && it->col == p.col) return *it;
    return std::nullopt;
  }

  void erase(LatticePoint p) {
    by_row_.erase(p);
    by_col_.erase(p);
  }

  PointSet snapshot() const {
    return PointSet(std::vector<LatticePoint>(by_row_.begin(), by_row_.end()));
  }

 private:
  std::set<LatticePoint> by_row_;
  std::set<LatticePoint, ColRowLess> by_col_;
};

void require_canonical(const PointSet& original) {
  if (!is_canonical_unique(original)) {
    throw UniquenessError(
        "original is not a canonical uniquely determined set");
  }
}

}  // namespace

Decomposition decompose(const InstancePair& pair) {
  if (pair.original().size() != pair.reconstruction().size()) {
    throw SizeMismatchError("sizes differ - call equalize first");
  }
  require_canonical(pair.original());

  UnusedIndex ours(set_difference(pair.original(), pair.reconstruction()));
  UnusedIndex theirs(set_difference(pair.reconstruction(), pair.original()));

  Decomposition out{{}, pair, {}};
  out.tau_trace.push_back(tau(ours.snapshot(), theirs.snapshot()));

  while (!ours.empty() || !theirs.empty()) {
    // Seed at the lexicographically smallest unused point of either side.
    auto a = ours.first();
    auto b = theirs.first();
    LabeledPoint seed;
    if (a && (!b || *a < *b)) {
      seed = {*a, DiffSide::kOriginalOnly};
      ours.erase(*a);
    } else {
      seed = {*b, DiffSide::kReconstructionOnly};
      theirs.erase(*b);
    }

    // Chain kept in staircase order: front has the largest row index.
    std::deque<LabeledPoint> chain{seed};

    // Extend the top-right end until it sticks. Points only ever leave the
    // indexes, so a stuck end stays stuck.
    for (;;) {
      const LabeledPoint& top = chain.back();
      if (top.side == DiffSide::kOriginalOnly) {
        auto next = theirs.nearest_right(top.pt);
        if (!next) break;
        theirs.erase(*next);
        chain.push_back({*next, DiffSide::kReconstructionOnly});
      } else {
        auto next = ours.nearest_above(top.pt);
        if (!next) break;
        ours.erase(*next);
        chain.push_back({*next, DiffSide::kOriginalOnly});
      }
    }
    // Then the bottom-left end.
    for (;;) {
      const LabeledPoint& bottom = chain.front();
      if (bottom.side == DiffSide::kOriginalOnly) {
        auto next = theirs.nearest_below(bottom.pt);
        if (!next) break;
        theirs.erase(*next);
        chain.push_front({*next, DiffSide::kReconstructionOnly});
      } else {
        auto next = ours.nearest_left(bottom.pt);
        if (!next) break;
        ours.erase(*next);
        chain.push_front({*next, DiffSide::kOriginalOnly});
      }
    }

    out.staircases.push_back(
        Staircase{std::vector<LabeledPoint>(chain.begin(), chain.end())});
    out.tau_trace.push_back(tau(ours.snapshot(), theirs.snapshot()));
  }
  return out;
}

InstancePair rebalance(const InstancePair& pair) {
  if (pair.original().size() != pair.reconstruction().size()) {
    throw SizeMismatchError("rebalance requires equal sizes");
  }
  require_canonical(pair.original());

  const PointSet& f1 = pair.original();
  std::set<LatticePoint> f2(pair.reconstruction().begin(),
                            pair.reconstruction().end());

  const int n_rows = std::max(max_row(f1), max_row(pair.reconstruction()));
  std::vector<int> r1(static_cast<std::size_t>(n_rows), 0);
  std::vector<int> r2(static_cast<std::size_t>(n_rows), 0);
  std::map<int, int> c1, c2;
  for (const auto& p : f1) {
    ++r1[static_cast<std::size_t>(p.row - 1)];
    ++c1[p.col];
  }
  for (const auto& p : f2) {
    ++r2[static_cast<std::size_t>(p.row - 1)];
    ++c2[p.col];
  }
  auto col1 = [&](int j) {
    auto it = c1.find(j);
    return it == c1.end() ? 0 : it->second;
  };
  auto col2 = [&](int j) {
    auto it = c2.find(j);
    return it == c2.end() ? 0 : it->second;
  };

  for (;;) {
    int over = 0;   // first row where the reconstruction has too many points
    int under = 0;  // first row where it has too few
    for (int i = 1; i <= n_rows && (over == 0 || under == 0); ++i) {
      const int d = r1[static_cast<std::size_t>(i - 1)] -
                    r2[static_cast<std::size_t>(i - 1)];
      if (d < 0 && over == 0) over = i;
      if (d > 0 && under == 0) under = i;
    }
    if (over == 0) break;  // row sums now agree everywhere

    // Source: a reconstruction-only point of the overfull row, preferring a
    // column whose error shrinks when it loses a point.
    std::optional<LatticePoint> source, fallback;
    for (auto it = f2.lower_bound({over, 1});
         it != f2.end() && it->row == over; ++it) {
      if (f1.contains(*it)) continue;
      if (!fallback) fallback = *it;
      if (col2(it->col) > col1(it->col)) {
        source = *it;
        break;
      }
    }
    if (!source) source = fallback;

    // Target: the smallest free column of the underfull row whose error
    // shrinks when it gains a point, else the smallest free column.
    int target_col = 0;
    for (const auto& [j, s1] : c1) {
      if (col2(j) < s1 && !f1.contains({under, j}) && !f2.count({under, j})) {
        target_col = j;
        break;
      }
    }
    for (int j = 1; target_col == 0; ++j) {
      if (!f1.contains({under, j}) && !f2.count({under, j})) target_col = j;
    }

    f2.erase(*source);
    f2.insert({under, target_col});
    --r2[static_cast<std::size_t>(over - 1)];
    ++r2[static_cast<std::size_t>(under - 1)];
    --c2[source->col];
    ++c2[target_col];
  }

  return InstancePair(
      f1, PointSet(std::vector<LatticePoint>(f2.begin(), f2.end())));
}

InstancePair equalize(const InstancePair& pair) {
  require_canonical(pair.original());
  const PointSet& f1 = pair.original();
  if (f1.size() == pair.reconstruction().size()) return pair;

  std::set<LatticePoint> f2(pair.reconstruction().begin(),
                            pair.reconstruction().end());
  const int n_rows = std::max(max_row(f1), max_row(pair.reconstruction()));
  std::vector<int> r1(static_cast<std::size_t>(n_rows), 0);
  std::vector<int> r2(static_cast<std::size_t>(n_rows), 0);
  std::map<int, int> c1, c2;
  for (const auto& p : f1) {
    ++r1[static_cast<std::size_t>(p.row - 1)];
    ++c1[p.col];
  }
  for (const auto& p : f2) {
    ++r2[static_cast<std::size_t>(p.row - 1)];
    ++c2[p.col];
  }

  if (static_cast<int>(f2.size()) < f1.size()) {
    // Grow: fill an underfull row beyond the original's last column, which
    // trades one unit of row error for one unit of column error.
    const int last_col = max_col(f1);
    while (static_cast<int>(f2.size()) < f1.size()) {
      int row = 0;
      for (int i = 1; i <= n_rows; ++i) {
        if (r1[static_cast<std::size_t>(i - 1)] >
            r2[static_cast<std::size_t>(i - 1)]) {
          row = i;
          break;
        }
      }
      int j = last_col + 1;
      while (f2.count({row, j}) != 0) ++j;
      f2.insert({row, j});
      ++r2[static_cast<std::size_t>(row - 1)];
    }
  } else {
    // Shrink: drop a reconstruction-only point from an overfull row,
    // preferring a column whose error shrinks.
    while (static_cast<int>(f2.size()) > f1.size()) {
      int row = 0;
      for (int i = 1; i <= n_rows; ++i) {
        if (r1[static_cast<std::size_t>(i - 1)] <
            r2[static_cast<std::size_t>(i - 1)]) {
          row = i;
          break;
        }
      }
      std::optional<LatticePoint> victim, fallback;
      for (auto it = f2.lower_bound({row, 1}); it != f2.end() && it->row == row;
           ++it) {
        if (f1.contains(*it)) continue;
        if (!fallback) fallback = *it;
        auto it1 = c1.find(it->col);
        const int s1 = it1 == c1.end() ? 0 : it1->second;
        if (c2[it->col] > s1) {
          victim = *it;
          break;
        }
      }
      if (!victim) victim = fallback;
      f2.erase(*victim);
      --r2[static_cast<std::size_t>(row - 1)];
      --c2[victim->col];
    }
  }

  return InstancePair(
      f1, PointSet(std::vector<LatticePoint>(f2.begin(), f2.end())));
}

void validate_staircase(const Staircase& s, const PointSet& original,
                        const PointSet& reconstruction) {
  if (s.points.empty()) {
    throw std::invalid_argument("staircase has no points");
  }
  for (const auto& lp : s.points) {
    const bool in1 = original.contains(lp.pt);
    const bool in2 = reconstruction.contains(lp.pt);
    if (lp.side == DiffSide::kOriginalOnly && !(in1 && !in2)) {
      throw std::invalid_argument("point labeled /1 is not original-only");
    }
    if (lp.side == DiffSide::kReconstructionOnly && !(in2 && !in1)) {
      throw std::invalid_argument("point labeled /2 is not reconstruction-only");
    }
  }
  for (std::size_t i = 0; i + 1 < s.points.size(); ++i) {
    const LabeledPoint& a = s.points[i];
    const LabeledPoint& b = s.points[i + 1];
    if (a.side == b.side) {
      throw std::invalid_argument("staircase labels do not alternate");
    }
    if (a.side == DiffSide::kOriginalOnly) {
      if (a.pt.row != b.pt.row || b.pt.col <= a.pt.col) {
        throw std::invalid_argument(
            "original-only link must step rightward within its row");
      }
    } else {
      if (a.pt.col != b.pt.col || b.pt.row >= a.pt.row) {
        throw std::invalid_argument(
            "reconstruction-only link must step upward within its column");
      }
    }
  }
}

void validate_decomposition(const std::vector<Staircase>& staircases,
                            const InstancePair& pair) {
  const Metrics& m = pair.metrics();
  if (static_cast<int>(staircases.size()) != m.alpha) {
    throw std::invalid_argument("staircase count does not equal alpha");
  }
  std::vector<LatticePoint> covered;
  int original_endpoints = 0;
  for (const auto& s : staircases) {
    validate_staircase(s, pair.original(), pair.reconstruction());
    for (const auto& lp : s.points) covered.push_back(lp.pt);
    if (s.points.front().side == DiffSide::kOriginalOnly) ++original_endpoints;
    if (s.points.back().side == DiffSide::kOriginalOnly) ++original_endpoints;
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
    throw std::invalid_argument("staircases are not pairwise disjoint");
  }
  if (PointSet(covered) !=
      symmetric_difference(pair.original(), pair.reconstruction())) {
    throw std::invalid_argument(
        "staircases do not cover the symmetric difference exactly");
  }
  if (original_endpoints != m.alpha) {
    throw std::invalid_argument("endpoint labels are unbalanced");
  }
}

}  // namespace tomo
