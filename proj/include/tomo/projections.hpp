#pragma once

#include <vector>

#include "tomo/lattice.hpp"

namespace tomo {

/// Row and column sums of a point set. Entry i-1 holds the sum of row i;
/// indices past the end are implicitly zero and trailing zeros are trimmed.
struct Projections {
  std::vector<int> row_sums;
  std::vector<int> col_sums;

  Projections() = default;
  Projections(std::vector<int> rows, std::vector<int> cols);

  long long row_total() const;
  long long col_total() const;

  friend bool operator==(const Projections&, const Projections&) = default;
};

Projections projections(const PointSet& s);

/// Conjugate of a non-negative integer vector: result[j-1] = #{i : v[i] >= j}.
/// For a partition this is the transposed Young diagram.
std::vector<int> conjugate_partition(const std::vector<int>& parts);

/// True iff pr admits exactly one realization, decided by the sorted
/// conjugacy test (column sums equal the conjugate of the row sums once both
/// are sorted non-increasingly). Throws std::invalid_argument when row and
/// column totals differ.
bool is_uniquely_determined(const Projections& pr);

/// The down-left-closed set {(i, j) : 1 <= j <= row_sums[i-1]}, which is the
/// unique realization when col_sums is exactly the conjugate of row_sums.
/// Throws UniquenessError for non-unique projections and
/// std::invalid_argument when the column sums are not in conjugate position.
PointSet triangular_realization(const Projections& pr);

/// Greedy reconstruction of one realization: columns processed in
/// non-increasing sum order, each filled at the rows with the largest
/// remaining sums, ties to the smaller index. Throws std::invalid_argument
/// ("no realization") when the projections are infeasible.
PointSet ryser_reconstruct(const Projections& pr);

}  // namespace tomo
