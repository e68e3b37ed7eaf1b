#include "tomo/lattice.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace tomo {

namespace {

void check_positive(const std::vector<LatticePoint>& pts) {
  for (const auto& p : pts) {
    if (p.row < 1 || p.col < 1) {
      throw std::invalid_argument("lattice point indices must be >= 1");
    }
  }
}

}  // namespace

PointSet::PointSet(std::vector<LatticePoint> points) : points_(std::move(points)) {
  check_positive(points_);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet::PointSet(std::initializer_list<LatticePoint> points)
    : PointSet(std::vector<LatticePoint>(points)) {}

bool PointSet::contains(LatticePoint p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(a.size()) + static_cast<std::size_t>(b.size()));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(std::move(out));
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  std::vector<LatticePoint> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(std::move(out));
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  std::vector<LatticePoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(std::move(out));
}

PointSet symmetric_difference(const PointSet& a, const PointSet& b) {
  std::vector<LatticePoint> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return PointSet(std::move(out));
}

int max_row(const PointSet& s) {
  return s.empty() ? 0 : s.points().back().row;
}

int max_col(const PointSet& s) {
  int m = 0;
  for (const auto& p : s) m = std::max(m, p.col);
  return m;
}

PointSet transpose(const PointSet& s) {
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (const auto& p : s) out.push_back({p.col, p.row});
  return PointSet(std::move(out));
}

}  // namespace tomo
