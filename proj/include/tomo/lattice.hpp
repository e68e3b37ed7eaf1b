#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

namespace tomo {

/// A cell of the integer lattice. Matrix convention: row indices grow
/// downwards, column indices grow to the right, both start at 1.
struct LatticePoint {
  int row = 1;
  int col = 1;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Immutable finite set of lattice points, kept sorted by (row, col).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<LatticePoint> points);
  PointSet(std::initializer_list<LatticePoint> points);

  bool contains(LatticePoint p) const;
  bool empty() const { return points_.empty(); }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<LatticePoint>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<LatticePoint> points_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
PointSet symmetric_difference(const PointSet& a, const PointSet& b);

/// Largest occupied row/column index; 0 for the empty set.
int max_row(const PointSet& s);
int max_col(const PointSet& s);

PointSet transpose(const PointSet& s);

}  // namespace tomo
