#pragma once

#include <vector>

#include "tomo/instance.hpp"

namespace tomo {

/// Which side of the symmetric difference a point belongs to.
enum class DiffSide { kOriginalOnly, kReconstructionOnly };

struct LabeledPoint {
  LatticePoint pt;
  DiffSide side = DiffSide::kOriginalOnly;
  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

/// An alternating chain through the symmetric difference, ordered from the
/// point with the largest row index to the point with the smallest. Along
/// the chain every original-only -> reconstruction-only link runs rightward
/// within a row and every reconstruction-only -> original-only link runs
/// upward within a column, so rows are non-increasing and columns
/// non-decreasing.
struct Staircase {
  std::vector<LabeledPoint> points;
  friend bool operator==(const Staircase&, const Staircase&) = default;
};

struct Decomposition {
  std::vector<Staircase> staircases;
  InstancePair source;
  /// tau of the not-yet-removed remainder after each chain removal,
  /// starting at 2*alpha and stepping down by 2 to exactly 0.
  std::vector<int> tau_trace;
};

/// tau(A) = sum_i |rho_i| + sum_j |sigma_j| where rho_i (sigma_j) is the
/// per-row (per-column) count surplus of original-only over
/// reconstruction-only points of the labeled subset A.
int tau(const PointSet& original_only, const PointSet& reconstruction_only);

/// Partition the symmetric difference into exactly alpha staircases by
/// greedy chain removal: seed at the lexicographically smallest unused
/// point, extend both ends to the nearest usable point until neither end
/// extends, remove the chain, repeat. Requires equal sizes and a canonical
/// uniquely determined original.
Decomposition decompose(const InstancePair& pair);

/// Move reconstruction points between rows until every row sum matches the
/// original's, so all projection error sits in the columns. Preserves
/// sizes, overlap and |F1 ^ F2|; never increases alpha.
InstancePair rebalance(const InstancePair& pair);

/// Grow or shrink the reconstruction until the sizes match. Growing adds
/// points beyond the original's last column and preserves alpha exactly;
/// shrinking removes reconstruction-only points and never increases alpha.
InstancePair equalize(const InstancePair& pair);

/// Throws std::invalid_argument describing the first violated staircase
/// invariant: membership of each point on its labeled side, label
/// alternation, and link geometry.
void validate_staircase(const Staircase& s, const PointSet& original,
                        const PointSet& reconstruction);

/// Full decomposition check, usable on chains from any source: every chain
/// valid, chains pairwise disjoint, union exactly the symmetric difference,
/// count equal to alpha, and endpoint labels balanced (alpha per side, a
/// one-point chain counting twice).
void validate_decomposition(const std::vector<Staircase>& staircases,
                            const InstancePair& pair);

}  // namespace tomo
