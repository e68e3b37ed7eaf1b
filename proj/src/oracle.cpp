#include "tomo/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "tomo/bounds.hpp"
#include "tomo/errors.hpp"
#include "tomo/staircase.hpp"

namespace tomo::oracle {

namespace {

constexpr double kGuardLimit = 1e8;

double binomial_estimate(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  double r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 1e18) return 1e18;  // beyond any guard threshold
  }
  return r;
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Leading part grows last, so the non-increasing part vectors come out in
  // ascending lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= std::min(remaining, max_part); ++part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  for (auto& p : out) std::reverse(p.begin(), p.end());
  return out;
}

std::vector<PointSet> enumerate_unique_sets(int max_cells) {
  if (max_cells < 1) {
    throw std::invalid_argument("enumerate_unique_sets requires max_cells >= 1");
  }
  std::vector<PointSet> out;
  for (int n = 1; n <= max_cells; ++n) {
    for (const auto& partition : partitions_of(n)) {
      std::vector<LatticePoint> pts;
      pts.reserve(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < partition.size(); ++i) {
        for (int j = 1; j <= partition[i]; ++j) {
          pts.push_back({static_cast<int>(i) + 1, j});
        }
      }
      out.push_back(PointSet(std::move(pts)));
    }
  }
  return out;
}

long long count_candidates(const PointSet& original, Box box, Mode mode) {
  if (box.rows < 1 || box.cols < 1) {
    throw std::invalid_argument("box must be at least 1x1");
  }
  const int cells = box.rows * box.cols;
  double total = 0;
  if (mode == Mode::kDisjoint) {
    int inside = 0;
    for (const auto& p : original) {
      if (p.row <= box.rows && p.col <= box.cols) ++inside;
    }
    total = binomial_estimate(cells - inside, original.size());
  } else if (mode == Mode::kGeneral) {
    total = binomial_estimate(cells, original.size());
  } else {
    total = binomial_estimate(cells, original.size() - 1) +
            binomial_estimate(cells, original.size() + 1);
  }
  return total > 4e18 ? 4000000000000000000LL : static_cast<long long>(total);
}

namespace {

void for_each_combination(const std::vector<LatticePoint>& pool, int k,
                          const std::function<void(const PointSet&)>& fn) {
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(PointSet{});
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<LatticePoint> pts(static_cast<std::size_t>(k));
  for (;;) {
    for (int i = 0; i < k; ++i) {
      pts[static_cast<std::size_t>(i)] =
          pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    fn(PointSet(pts));
    // Advance the rightmost index that still has room.
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

void for_each_counterpart(const PointSet& original, Box box, Mode mode,
                          const std::function<void(const PointSet&)>& fn,
                          bool force) {
  if (!force && count_candidates(original, box, mode) > kGuardLimit) {
    throw GuardError("candidate count exceeds 1e8; pass force to override");
  }
  std::vector<LatticePoint> pool;
  pool.reserve(static_cast<std::size_t>(box.rows * box.cols));
  for (int r = 1; r <= box.rows; ++r) {
    for (int c = 1; c <= box.cols; ++c) {
      if (mode == Mode::kDisjoint && original.contains({r, c})) continue;
      pool.push_back({r, c});
    }
  }
  if (mode == Mode::kUnequal) {
    for_each_combination(pool, original.size() - 1, fn);
    for_each_combination(pool, original.size() + 1, fn);
  } else {
    for_each_combination(pool, original.size(), fn);
  }
}

namespace {

// State for the realization count: residual column sums as (value, how many
// columns with that value), plus how many rows remain. Counting only depends
// on the multiset of residuals because permuting equal columns is a
// bijection between realizations.
using ColGroups = std::vector<std::pair<int, int>>;

long long binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct RealizationCounter {
  const std::vector<int>& rows;
  std::map<std::pair<std::size_t, ColGroups>, long long> memo;

  long long count(std::size_t row_idx, const ColGroups& groups) {
    if (row_idx == rows.size()) return 1;  // residuals sum to zero here
    const auto key = std::make_pair(row_idx, groups);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int need = rows[row_idx];
    long long total = 0;
    // Choose how many columns to take from each residual group.
    std::vector<int> take(groups.size(), 0);
    std::function<void(std::size_t, int, long long)> pick =
        [&](std::size_t g, int left, long long ways) {
          if (left == 0) {
            ColGroups next;
            std::map<int, int> merged;
            for (std::size_t i = 0; i < groups.size(); ++i) {
              const auto [value, count_g] = groups[i];
              const int taken = take[i];
              if (taken > 0 && value - 1 > 0) merged[value - 1] += taken;
              if (count_g - taken > 0) merged[value] += count_g - taken;
            }
            for (const auto& [v, c] : merged) next.emplace_back(v, c);
            total += ways * count(row_idx + 1, next);
            return;
          }
          if (g == groups.size()) return;
          const int avail = groups[g].second;
          for (int t = 0; t <= std::min(left, avail); ++t) {
            take[g] = t;
            pick(g + 1, left - t, ways * binomial_exact(avail, t));
          }
          take[g] = 0;
        };
    pick(0, need, 1);
    memo.emplace(key, total);
    return total;
  }
};

}  // namespace

long long count_realizations(const Projections& pr) {
  if (pr.row_total() != pr.col_total()) return 0;
  if (pr.row_total() > 16) {
    throw GuardError("count_realizations is limited to 16 cells");
  }
  std::map<int, int> grouped;
  for (int c : pr.col_sums) {
    if (c > 0) ++grouped[c];
  }
  ColGroups groups(grouped.begin(), grouped.end());
  RealizationCounter counter{pr.row_sums, {}};
  return counter.count(0, groups);
}

namespace {

struct Tally {
  long long pairs = 0;
  long long parity_checks = 0;
  long long staircase_checks = 0;
  long long bound_checks = 0;
  long long equalize_checks = 0;
  long long violations = 0;
  std::optional<Violation> first;

  void record(long long f1_rank, long long f2_rank, const std::string& check,
              const PointSet& f1, const PointSet& f2) {
    ++violations;
    if (!first) first = Violation{f1_rank, f2_rank, check, f1, f2};
  }
};

void check_staircases(const InstancePair& pair, long long f1_rank,
                      long long f2_rank, Tally& tally) {
  ++tally.staircase_checks;
  try {
    const Decomposition d = decompose(pair);
    validate_decomposition(d.staircases, pair);
    const int steps = static_cast<int>(d.tau_trace.size());
    if (d.tau_trace.front() != 2 * pair.metrics().alpha ||
        d.tau_trace.back() != 0) {
      throw std::invalid_argument("tau trace endpoints are wrong");
    }
    for (int i = 0; i + 1 < steps; ++i) {
      if (d.tau_trace[static_cast<std::size_t>(i)] -
              d.tau_trace[static_cast<std::size_t>(i + 1)] !=
          2) {
        throw std::invalid_argument("tau did not decrease by 2");
      }
    }
  } catch (const std::exception& e) {
    tally.record(f1_rank, f2_rank, std::string("staircase: ") + e.what(),
                 pair.original(), pair.reconstruction());
  }
}

void check_bounds(const InstancePair& pair, long long f1_rank,
                  long long f2_rank, Tally& tally) {
  ++tally.bound_checks;
  const bounds::BoundReport rep = bounds::report(pair);
  for (const auto& e : rep.entries) {
    if (!e.advisory() && !e.holds) {
      tally.record(f1_rank, f2_rank, std::string("bound: ") + e.name,
                   pair.original(), pair.reconstruction());
      return;
    }
  }
}

void check_pair(const PointSet& f1, const PointSet& f2, Mode mode,
                long long f1_rank, long long f2_rank, Tally& tally) {
  ++tally.pairs;
  ++tally.parity_checks;
  InstancePair pair(f1, f2);  // the constructor asserts even parity
  if (mode == Mode::kUnequal) {
    const Metrics& before = pair.metrics();
    ++tally.equalize_checks;
    const InstancePair eq = equalize(pair);
    const Metrics& after = eq.metrics();
    const bool grew = before.size2 < before.size1;
    if (after.size1 != after.size2 || after.overlap != before.overlap ||
        after.alpha > before.alpha || (grew && after.alpha != before.alpha)) {
      tally.record(f1_rank, f2_rank, "equalize contract", f1, f2);
      return;
    }
    check_bounds(pair, f1_rank, f2_rank, tally);  // symmetric bounds, raw
    check_staircases(eq, f1_rank, f2_rank, tally);
    check_bounds(eq, f1_rank, f2_rank, tally);
  } else {
    check_staircases(pair, f1_rank, f2_rank, tally);
    check_bounds(pair, f1_rank, f2_rank, tally);
  }
}

Tally run_f1(const PointSet& f1, const EnumSpec& spec, long long f1_rank) {
  Tally tally;
  long long f2_rank = 0;
  for_each_counterpart(
      f1, spec.box, spec.mode,
      [&](const PointSet& f2) {
        try {
          check_pair(f1, f2, spec.mode, f1_rank, f2_rank, tally);
        } catch (const std::exception& e) {
          tally.record(f1_rank, f2_rank, std::string("unexpected: ") + e.what(),
                       f1, f2);
        }
        ++f2_rank;
      },
      spec.force);
  return tally;
}

}  // namespace

VerificationSummary verify_all(const EnumSpec& spec) {
  if (spec.max_cells < 1) {
    throw std::invalid_argument("max_cells must be >= 1");
  }
  if (spec.box.rows < spec.max_cells || spec.box.cols < spec.max_cells) {
    throw std::invalid_argument(
        "box must be at least max_cells in both directions");
  }
  if (spec.jobs < 1) throw std::invalid_argument("jobs must be >= 1");

  const std::vector<PointSet> f1s = enumerate_unique_sets(spec.max_cells);
  if (!spec.force) {
    for (const auto& f1 : f1s) {
      if (count_candidates(f1, spec.box, spec.mode) > kGuardLimit) {
        throw GuardError("candidate count exceeds 1e8; pass force to override");
      }
    }
  }

  std::vector<Tally> tallies(f1s.size());
  if (spec.jobs == 1) {
    for (std::size_t i = 0; i < f1s.size(); ++i) {
      tallies[i] = run_f1(f1s[i], spec, static_cast<long long>(i));
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= f1s.size()) return;
        tallies[i] = run_f1(f1s[i], spec, static_cast<long long>(i));
      }
    };
    std::vector<std::thread> threads;
    const int n_threads = std::min<int>(spec.jobs, static_cast<int>(f1s.size()));
    threads.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  VerificationSummary summary;
  summary.mode = spec.mode;
  summary.max_cells = spec.max_cells;
  summary.box = spec.box;
  summary.f1_count = static_cast<long long>(f1s.size());
  // Merging in f1 order keeps the summary independent of the schedule.
  for (const auto& t : tallies) {
    summary.pairs += t.pairs;
    summary.parity_checks += t.parity_checks;
    summary.staircase_checks += t.staircase_checks;
    summary.bound_checks += t.bound_checks;
    summary.equalize_checks += t.equalize_checks;
    summary.violations += t.violations;
    if (!summary.first_violation && t.first) summary.first_violation = t.first;
  }
  return summary;
}

}  // namespace tomo::oracle
