#include "tomo/instance.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "tomo/errors.hpp"

namespace tomo {

Metrics compute_metrics(const PointSet& f1, const PointSet& f2) {
  const Projections p1 = projections(f1);
  const Projections p2 = projections(f2);

  auto l1 = [](const std::vector<int>& a, const std::vector<int>& b) {
    long long total = 0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      const int x = i < a.size() ? a[i] : 0;
      const int y = i < b.size() ? b[i] : 0;
      total += std::abs(x - y);
    }
    return total;
  };
  const long long total = l1(p1.row_sums, p2.row_sums) + l1(p1.col_sums, p2.col_sums);
  if (total % 2 != 0) {
    throw std::logic_error("projection error parity violated");
  }

  Metrics m;
  m.alpha = static_cast<int>(total / 2);
  m.overlap = set_intersection(f1, f2).size();
  m.sym_diff = f1.size() + f2.size() - 2 * m.overlap;
  m.occupied_rows = static_cast<int>(
      std::count_if(p1.row_sums.begin(), p1.row_sums.end(), [](int x) { return x > 0; }));
  m.occupied_cols = static_cast<int>(
      std::count_if(p1.col_sums.begin(), p1.col_sums.end(), [](int x) { return x > 0; }));
  m.size1 = f1.size();
  m.size2 = f2.size();
  return m;
}

InstancePair::InstancePair(PointSet original, PointSet reconstruction)
    : original_(std::move(original)),
      reconstruction_(std::move(reconstruction)),
      metrics_(compute_metrics(original_, reconstruction_)) {}

namespace {

// Occupied indices sorted by (original's sum descending, source index); the
// position in the result becomes the new 1-based index.
std::vector<int> renumbering(const std::map<int, int>& occupied_with_sums) {
  std::vector<int> order;
  order.reserve(occupied_with_sums.size());
  for (const auto& [idx, sum] : occupied_with_sums) {
    (void)sum;
    order.push_back(idx);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return occupied_with_sums.at(a) > occupied_with_sums.at(b);
  });
  return order;
}

}  // namespace

Canonicalized canonicalize(const PointSet& original, const PointSet& reconstruction) {
  if (original.empty()) {
    throw std::invalid_argument("original image is empty");
  }
  std::map<int, int> row_sums;  // occupied row -> original's sum there
  std::map<int, int> col_sums;
  for (const auto& p : original) {
    ++row_sums[p.row];
    ++col_sums[p.col];
  }
  for (const auto& p : reconstruction) {
    row_sums.emplace(p.row, 0);
    col_sums.emplace(p.col, 0);
  }

  std::vector<int> row_order = renumbering(row_sums);
  std::vector<int> col_order = renumbering(col_sums);

  std::map<int, int> new_row, new_col;
  for (std::size_t k = 0; k < row_order.size(); ++k) {
    new_row[row_order[k]] = static_cast<int>(k) + 1;
  }
  for (std::size_t k = 0; k < col_order.size(); ++k) {
    new_col[col_order[k]] = static_cast<int>(k) + 1;
  }

  auto apply = [&](const PointSet& s) {
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(s.size()));
    for (const auto& p : s) pts.push_back({new_row.at(p.row), new_col.at(p.col)});
    return PointSet(std::move(pts));
  };

  return Canonicalized{std::move(row_order), std::move(col_order),
                       InstancePair(apply(original), apply(reconstruction))};
}

bool is_canonical_unique(const PointSet& original) {
  const Projections pr = projections(original);
  if (!std::is_sorted(pr.row_sums.begin(), pr.row_sums.end(),
                      [](int a, int b) { return a > b; })) {
    return false;
  }
  // Sorted rows + conjugate columns force the triangular shape, so the set
  // itself is the unique realization.
  return conjugate_partition(pr.row_sums) == pr.col_sums;
}

}  // namespace tomo
