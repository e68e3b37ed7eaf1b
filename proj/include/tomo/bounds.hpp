#pragma once

#include <vector>

#include "tomo/instance.hpp"

namespace tomo::bounds {

/// sum_{i=1..alpha} floor(alpha/i): maximum size of an original disjoint
/// from its reconstruction.
long long harmonic_size_bound(int alpha);

/// alpha * (1 + ln alpha), the smooth relaxation of the harmonic bound.
double log_size_bound(int alpha);

/// sum_{i=1..alpha+p} floor((alpha+p)/i) for overlap p.
long long general_harmonic_size_bound(int alpha, int overlap);

/// (alpha+p) * (1 + ln(alpha+p)).
double general_log_size_bound(int alpha, int overlap);

/// Upper bound on u^2 where 2u = |F1 ^ F2|:
/// (alpha/4) * (a+b) * (a+b+alpha-1).
double half_diff_squared_bound(int alpha, int rows, int cols);

/// Lower bound (a+b)^2 / (4(alpha+1)) on the size of the original. Valid
/// when every occupied row and column meets the symmetric difference.
double size_lower_bound(int alpha, int rows, int cols);

/// p + sqrt((alpha/4) * (beta + sqrt(beta(alpha-1) + 4(alpha+1)p + beta^2)
/// + (alpha-1)/2)^2 - (alpha-1)^2 alpha / 16) with beta = sqrt(alpha)(alpha+1).
/// Reduces to p + 1 + sqrt(2p+1) at alpha = 1.
double sqrt_size_bound(int alpha, int overlap);

/// p + (alpha+1)(alpha-1/2) + (alpha+1) sqrt(2p + (2 alpha - 1)^2 / 4),
/// the quadratic-route companion of sqrt_size_bound.
double alpers_size_bound(int alpha, int overlap);

struct SymmetricDiffBounds {
  double log_form;   // 2 alpha + 2(alpha+p) ln(alpha+p)
  double sqrt_form;  // equals 2 * (sqrt_size_bound - p)
};

/// Size-free bounds on |F1 ^ F2| itself; valid for unequal sizes as well.
SymmetricDiffBounds symmetric_diff_bounds(int alpha, int overlap);

enum class Direction { kUpper, kLower };

struct BoundEntry {
  const char* name;
  const char* quantity;  // display name of the measured quantity
  double measured = 0;
  double limit = 0;
  bool integral = false;  // compare exactly instead of with tolerance
  Direction direction = Direction::kUpper;
  const char* note = "";  // "conditional"/"informational" entries are advisory
  bool holds = false;
  double slack = 0;

  bool advisory() const { return note[0] != '\0'; }
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  bool all_hold() const;  // advisory entries do not count
};

/// Evaluate every bound applicable to the pair. Disjoint-only bounds appear
/// when the overlap is zero, the per-size bounds only for equal sizes, the
/// symmetric-difference bounds always. The size lower bound is flagged
/// "conditional" unless every occupied row and column of the original meets
/// the symmetric difference. With alpha = 0 the report is empty.
BoundReport report(const InstancePair& pair);

}  // namespace tomo::bounds
