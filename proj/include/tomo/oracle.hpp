#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tomo/instance.hpp"
#include "tomo/projections.hpp"

namespace tomo::oracle {

enum class Mode { kDisjoint, kGeneral, kUnequal };

struct Box {
  int rows = 6;
  int cols = 6;
};

struct EnumSpec {
  int max_cells = 6;
  Box box;
  Mode mode = Mode::kGeneral;
  int jobs = 1;
  bool force = false;  // bypass the candidate-count guard
};

/// All partitions of n as non-increasing part vectors, in ascending
/// lexicographic order.
std::vector<std::vector<int>> partitions_of(int n);

/// Every uniquely determined set with at most max_cells cells, i.e. the
/// triangular realization of every partition of every n <= max_cells,
/// ordered by n then by partition.
std::vector<PointSet> enumerate_unique_sets(int max_cells);

/// Number of counterpart sets enumerate would visit (the guard quantity).
long long count_candidates(const PointSet& original, Box box, Mode mode);

/// Invoke fn for every reconstruction candidate in deterministic
/// combination-rank order over the box cells (row-major): all sets of size
/// |F1| (kGeneral), the same restricted to cells outside the original
/// (kDisjoint), or all sets of size |F1|-1 then |F1|+1 (kUnequal). Throws
/// GuardError when the candidate count exceeds 1e8 and force is not set.
void for_each_counterpart(const PointSet& original, Box box, Mode mode,
                          const std::function<void(const PointSet&)>& fn,
                          bool force = false);

/// Exact number of point sets realizing pr, by memoized backtracking over
/// rows. Guarded to totals of at most 16 cells.
long long count_realizations(const Projections& pr);

struct Violation {
  long long f1_rank = 0;  // position in enumerate_unique_sets order
  long long f2_rank = 0;  // position in for_each_counterpart order
  std::string check;
  PointSet original;
  PointSet reconstruction;
};

struct VerificationSummary {
  Mode mode = Mode::kGeneral;
  int max_cells = 0;
  Box box;
  long long f1_count = 0;
  long long pairs = 0;
  long long parity_checks = 0;
  long long staircase_checks = 0;
  long long bound_checks = 0;
  long long equalize_checks = 0;
  long long violations = 0;
  std::optional<Violation> first_violation;
};

/// Exhaustively check every enumerated (F1, F2): projection-error parity,
/// staircase decomposition (count = alpha, exact cover, endpoint balance,
/// tau trace), and every non-advisory bound. In kUnequal mode the pair is
/// equalized first and the equalization contract is checked as well.
/// Parallel runs (jobs > 1) produce the same summary as serial ones.
VerificationSummary verify_all(const EnumSpec& spec);

}  // namespace tomo::oracle
