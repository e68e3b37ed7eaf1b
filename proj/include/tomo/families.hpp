#pragma once

#include "tomo/instance.hpp"

namespace tomo::families {

/// Disjoint pair with alpha = 2^m and |F1| = 2^m + m 2^(m-1), i.e.
/// |F1| = alpha + (alpha/2) log2(alpha). m >= 1.
InstancePair example1(int m);

/// Overlapping pair with alpha = 2^m - 2^k + 1, overlap 2^k - 1 and
/// |F1| = 2^m + m 2^(m-1) + 2^(k-1) - k 2^(k-1). k >= 2, m >= 2k-2.
InstancePair example2(int k, int m);

/// Large-overlap pair with overlap N^2(1+alpha) - N alpha and
/// |F1| = overlap + 2 N alpha; the sizes are equal and the projection error
/// is alpha in the first column plus 1 in each of alpha trailing columns.
/// n >= 1, alpha >= 1.
InstancePair example3(int n, int alpha);

enum class Family { kExample1, kExample2, kExample3 };

struct FamilySpec {
  Family family = Family::kExample1;
  int m = 0;      // example1, example2
  int k = 0;      // example2
  int n = 0;      // example3
  int alpha = 0;  // example3
};

/// Dispatches on spec.family; throws std::invalid_argument for parameters
/// outside the family's constraints.
InstancePair generate(const FamilySpec& spec);

}  // namespace tomo::families
