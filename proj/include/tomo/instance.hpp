#pragma once

#include <vector>

#include "tomo/lattice.hpp"
#include "tomo/projections.hpp"

namespace tomo {

/// Comparison metrics of an (original, reconstruction) pair.
struct Metrics {
  int alpha = 0;          // half the total L1 difference of the projections
  int overlap = 0;        // |F1 n F2|
  int sym_diff = 0;       // |F1 ^ F2|
  int occupied_rows = 0;  // rows containing points of the original (a)
  int occupied_cols = 0;  // columns containing points of the original (b)
  int size1 = 0;
  int size2 = 0;

  /// Half of |F1 ^ F2|; integral whenever the two sizes have equal parity.
  int half_diff() const { return sym_diff / 2; }

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

Metrics compute_metrics(const PointSet& original, const PointSet& reconstruction);

/// An original image together with a candidate reconstruction, plus cached
/// metrics. Immutable; the unit all analyses operate on.
class InstancePair {
 public:
  InstancePair(PointSet original, PointSet reconstruction);

  const PointSet& original() const { return original_; }
  const PointSet& reconstruction() const { return reconstruction_; }
  const Metrics& metrics() const { return metrics_; }

  friend bool operator==(const InstancePair& a, const InstancePair& b) {
    return a.original_ == b.original_ && a.reconstruction_ == b.reconstruction_;
  }

 private:
  PointSet original_;
  PointSet reconstruction_;
  Metrics metrics_;
};

struct Canonicalized {
  std::vector<int> row_order;  // row_order[k] = source row index renumbered to k+1
  std::vector<int> col_order;
  InstancePair pair;
};

/// Renumber rows and columns (one bijection applied to both sets) so that
/// the original's row and column sums are non-increasing; ties keep source
/// order. Rows and columns occupied by neither set are dropped, so the
/// result lives on indices 1..K. Requires a non-empty original.
Canonicalized canonicalize(const PointSet& original, const PointSet& reconstruction);

/// True iff the original is uniquely determined and already in canonical
/// position, i.e. it equals the triangular realization of its own
/// projections with non-increasing row sums.
bool is_canonical_unique(const PointSet& original);

}  // namespace tomo
