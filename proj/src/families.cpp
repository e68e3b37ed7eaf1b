#include "tomo/families.hpp"

#include <stdexcept>
#include <vector>

namespace tomo::families {

namespace {

int pow2(int e) { return 1 << e; }

void row_range(std::vector<LatticePoint>& out, int row, int col_lo, int col_hi) {
  for (int j = col_lo; j <= col_hi; ++j) out.push_back({row, j});
}

}  // namespace

InstancePair example1(int m) {
  if (m < 1) throw std::invalid_argument("example1 requires m >= 1");
  std::vector<LatticePoint> f1, f2;
  row_range(f1, 1, 1, pow2(m));
  row_range(f2, 1, pow2(m) + 1, pow2(m + 1));
  for (int l = 0; l <= m - 1; ++l) {
    for (int i = pow2(l) + 1; i <= pow2(l + 1); ++i) {
      row_range(f1, i, 1, pow2(m - l - 1));
      row_range(f2, i, pow2(m - l - 1) + 1, pow2(m - l));
    }
  }
  return InstancePair(PointSet(std::move(f1)), PointSet(std::move(f2)));
}

InstancePair example2(int k, int m) {
  if (k < 2 || m < 2 * k - 2) {
    throw std::invalid_argument("example2 requires k >= 2 and m >= 2k-2");
  }
  std::vector<LatticePoint> f1, f2;
  auto shared = [&](int row, int lo, int hi) {
    row_range(f1, row, lo, hi);
    row_range(f2, row, lo, hi);
  };

  shared(1, 1, pow2(k - 1));
  row_range(f1, 1, pow2(k - 1) + 1, pow2(m) - pow2(k - 1) + 1);
  row_range(f2, 1, pow2(m) - pow2(k - 1) + 2,
            pow2(m + 1) - pow2(k) - pow2(k - 1) + 2);

  for (int l = 0; l <= k - 2; ++l) {
    for (int i = pow2(l) + 1; i <= pow2(l + 1); ++i) {
      shared(i, 1, 1);
      row_range(f1, i, 2, pow2(m - l - 1) - pow2(k - l - 2) + 1);
      row_range(f2, i, pow2(m - l - 1) - pow2(k - l - 2) + 2,
                pow2(m - l) - pow2(k - l - 1) + 1);
    }
  }
  // Empty when m = 2k-2.
  for (int l = k - 1; l <= m - k; ++l) {
    for (int i = pow2(l) + 1; i <= pow2(l + 1); ++i) {
      row_range(f1, i, 1, pow2(m - l - 1));
      row_range(f2, i, pow2(m - l - 1) + 1, pow2(m - l));
    }
  }
  for (int l = m - k + 1; l <= m - 1; ++l) {
    const int lo = pow2(l) - pow2(l - m + k - 1) + 2;
    const int hi = pow2(l + 1) - pow2(l - m + k) + 1;
    for (int i = lo; i <= hi; ++i) {
      row_range(f1, i, 1, pow2(m - l - 1));
      row_range(f2, i, pow2(m - l - 1) + 1, pow2(m - l));
    }
  }
  return InstancePair(PointSet(std::move(f1)), PointSet(std::move(f2)));
}

InstancePair example3(int n, int alpha) {
  if (n < 1 || alpha < 1) {
    throw std::invalid_argument("example3 requires n >= 1 and alpha >= 1");
  }
  std::vector<LatticePoint> f1, f2;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      f1.push_back({i, j});
      f2.push_back({i, j});
    }
  }
  for (int i = 1; i <= n; ++i) {
    const int shared_hi = n + (n - i) * alpha;
    const int f1_hi = n + (n - i + 1) * alpha;
    const int f2_hi = n + (n - i + 2) * alpha;
    for (int j = n + 1; j <= shared_hi; ++j) {
      f1.push_back({i, j});
      f1.push_back({j, i});
      f2.push_back({i, j});
      f2.push_back({j, i});
    }
    for (int j = shared_hi + 1; j <= f1_hi; ++j) {
      f1.push_back({i, j});
      f1.push_back({j, i});
    }
    for (int j = f1_hi + 1; j <= f2_hi; ++j) {
      f2.push_back({i, j});
      // The first strip keeps only its row-side points; the closing diagonal
      // below stands in for the transposed copies so the sizes stay equal
      // and all projection error sits in the columns.
      if (i > 1) f2.push_back({j, i});
    }
  }
  for (int t = 1; t <= alpha; ++t) {
    f2.push_back({n + t, n + alpha + 1 - t});
  }
  return InstancePair(PointSet(std::move(f1)), PointSet(std::move(f2)));
}

InstancePair generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kExample1:
      return example1(spec.m);
    case Family::kExample2:
      return example2(spec.k, spec.m);
    case Family::kExample3:
      return example3(spec.n, spec.alpha);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace tomo::families
