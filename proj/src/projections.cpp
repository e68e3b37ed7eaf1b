#include "tomo/projections.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "tomo/errors.hpp"

namespace tomo {

namespace {

void trim_trailing_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<int> sorted_positive(const std::vector<int>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) {
    if (x > 0) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

Projections::Projections(std::vector<int> rows, std::vector<int> cols)
    : row_sums(std::move(rows)), col_sums(std::move(cols)) {
  for (int x : row_sums) {
    if (x < 0) throw std::invalid_argument("row sums must be non-negative");
  }
  for (int x : col_sums) {
    if (x < 0) throw std::invalid_argument("column sums must be non-negative");
  }
  trim_trailing_zeros(row_sums);
  trim_trailing_zeros(col_sums);
}

long long Projections::row_total() const {
  return std::accumulate(row_sums.begin(), row_sums.end(), 0LL);
}

long long Projections::col_total() const {
  return std::accumulate(col_sums.begin(), col_sums.end(), 0LL);
}

Projections projections(const PointSet& s) {
  std::vector<int> rows(static_cast<std::size_t>(max_row(s)), 0);
  std::vector<int> cols(static_cast<std::size_t>(max_col(s)), 0);
  for (const auto& p : s) {
    ++rows[static_cast<std::size_t>(p.row - 1)];
    ++cols[static_cast<std::size_t>(p.col - 1)];
  }
  return Projections(std::move(rows), std::move(cols));
}

std::vector<int> conjugate_partition(const std::vector<int>& parts) {
  int largest = 0;
  for (int p : parts) largest = std::max(largest, p);
  std::vector<int> conj(static_cast<std::size_t>(largest), 0);
  for (int p : parts) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return conj;
}

bool is_uniquely_determined(const Projections& pr) {
  if (pr.row_total() != pr.col_total()) {
    throw std::invalid_argument("not a projection pair");
  }
  return conjugate_partition(pr.row_sums) == sorted_positive(pr.col_sums);
}

PointSet triangular_realization(const Projections& pr) {
  if (conjugate_partition(pr.row_sums) != pr.col_sums) {
    if (!is_uniquely_determined(pr)) {
      throw UniquenessError("projections admit more than one realization");
    }
    throw std::invalid_argument(
        "column sums are not the conjugate of the row sums");
  }
  std::vector<LatticePoint> pts;
  pts.reserve(static_cast<std::size_t>(pr.row_total()));
  for (std::size_t i = 0; i < pr.row_sums.size(); ++i) {
    for (int j = 1; j <= pr.row_sums[i]; ++j) {
      pts.push_back({static_cast<int>(i) + 1, j});
    }
  }
  return PointSet(std::move(pts));
}

PointSet ryser_reconstruct(const Projections& pr) {
  if (pr.row_total() != pr.col_total()) {
    throw std::invalid_argument("no realization");
  }
  const int n_rows = static_cast<int>(pr.row_sums.size());
  const int n_cols = static_cast<int>(pr.col_sums.size());

  std::vector<int> col_order(static_cast<std::size_t>(n_cols));
  std::iota(col_order.begin(), col_order.end(), 0);
  std::stable_sort(col_order.begin(), col_order.end(), [&](int a, int b) {
    return pr.col_sums[static_cast<std::size_t>(a)] >
           pr.col_sums[static_cast<std::size_t>(b)];
  });

  std::vector<int> residual = pr.row_sums;
  std::vector<int> row_order(static_cast<std::size_t>(n_rows));
  std::vector<LatticePoint> out;
  for (int c : col_order) {
    const int need = pr.col_sums[static_cast<std::size_t>(c)];
    if (need == 0) continue;
    std::iota(row_order.begin(), row_order.end(), 0);
    std::stable_sort(row_order.begin(), row_order.end(), [&](int a, int b) {
      return residual[static_cast<std::size_t>(a)] >
             residual[static_cast<std::size_t>(b)];
    });
    if (need > n_rows || residual[static_cast<std::size_t>(row_order[
            static_cast<std::size_t>(need - 1)])] <= 0) {
      throw std::invalid_argument("no realization");
    }
    for (int k = 0; k < need; ++k) {
      const int r = row_order[static_cast<std::size_t>(k)];
      --residual[static_cast<std::size_t>(r)];
      out.push_back({r + 1, c + 1});
    }
  }
  return PointSet(std::move(out));
}

}  // namespace tomo
