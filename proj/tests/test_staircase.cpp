#include <random>

#include "doctest.h"
#include "tomo/errors.hpp"
#include "tomo/families.hpp"
#include "tomo/oracle.hpp"
#include "tomo/staircase.hpp"

using namespace tomo;

namespace {

InstancePair pair_of(PointSet f1, PointSet f2) {
  return InstancePair(std::move(f1), std::move(f2));
}

}  // namespace

TEST_CASE("tau") {
  CHECK(tau(PointSet{}, PointSet{}) == 0);
  SUBCASE("whole symmetric difference gives 2 alpha") {
    for (int m = 1; m <= 4; ++m) {
      const InstancePair pair = families::example1(m);
      const PointSet ours = set_difference(pair.original(), pair.reconstruction());
      const PointSet theirs = set_difference(pair.reconstruction(), pair.original());
      CHECK(tau(ours, theirs) == 2 * pair.metrics().alpha);
    }
  }
}

TEST_CASE("single-link decomposition") {
  const Decomposition d = decompose(pair_of({{1, 1}}, {{1, 2}}));
  REQUIRE(d.staircases.size() == 1);
  const Staircase& s = d.staircases[0];
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0] == LabeledPoint{{1, 1}, DiffSide::kOriginalOnly});
  CHECK(s.points[1] == LabeledPoint{{1, 2}, DiffSide::kReconstructionOnly});
  CHECK(d.tau_trace == std::vector<int>{2, 0});
}

TEST_CASE("disjoint family decomposes into alpha staircases") {
  for (int m = 1; m <= 4; ++m) {
    const InstancePair pair = families::example1(m);
    const Decomposition d = decompose(pair);
    CHECK(static_cast<int>(d.staircases.size()) == pair.metrics().alpha);
    validate_decomposition(d.staircases, pair);
  }
}

TEST_CASE("decompose rejects bad inputs") {
  CHECK_THROWS_AS(decompose(pair_of({{1, 1}, {1, 2}}, {{2, 1}})),
                  SizeMismatchError);
  CHECK_THROWS_AS(decompose(pair_of({{1, 1}, {2, 2}}, {{1, 2}, {2, 1}})),
                  UniquenessError);
  CHECK_THROWS_AS(decompose(pair_of({{2, 1}}, {{1, 1}})), UniquenessError);
}

TEST_CASE("identical sets decompose into nothing") {
  const Decomposition d = decompose(pair_of({{1, 1}, {1, 2}}, {{1, 1}, {1, 2}}));
  CHECK(d.staircases.empty());
  CHECK(d.tau_trace == std::vector<int>{0});
}

TEST_CASE("exhaustive small decompositions match alpha") {
  // Direct set checks, independent of validate_decomposition.
  for (const auto& f1 : oracle::enumerate_unique_sets(3)) {
    oracle::for_each_counterpart(
        f1, {4, 4}, oracle::Mode::kGeneral, [&](const PointSet& f2) {
          const InstancePair pair(f1, f2);
          const Decomposition d = decompose(pair);
          CHECK(static_cast<int>(d.staircases.size()) == pair.metrics().alpha);

          std::vector<LatticePoint> covered;
          int original_endpoints = 0;
          for (const auto& s : d.staircases) {
            for (const auto& lp : s.points) covered.push_back(lp.pt);
            original_endpoints +=
                (s.points.front().side == DiffSide::kOriginalOnly ? 1 : 0) +
                (s.points.back().side == DiffSide::kOriginalOnly ? 1 : 0);
          }
          const std::size_t distinct = [&] {
            auto v = covered;
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v.size();
          }();
          CHECK(distinct == covered.size());
          CHECK(PointSet(covered) == symmetric_difference(f1, f2));
          CHECK(original_endpoints == pair.metrics().alpha);

          // tau drops by exactly 2 per removed chain, ending at 0.
          CHECK(d.tau_trace.front() == 2 * pair.metrics().alpha);
          CHECK(d.tau_trace.back() == 0);
          for (std::size_t i = 0; i + 1 < d.tau_trace.size(); ++i) {
            CHECK(d.tau_trace[i] - d.tau_trace[i + 1] == 2);
          }
        });
  }
}

TEST_CASE("rebalance example from first principles") {
  const InstancePair pair = pair_of({{1, 1}, {1, 2}}, {{2, 1}, {2, 2}});
  const InstancePair balanced = rebalance(pair);
  CHECK(balanced.reconstruction() == PointSet({{1, 3}, {1, 4}}));
  CHECK(balanced.metrics().alpha == 2);
  CHECK(balanced.metrics().alpha <= pair.metrics().alpha);
  CHECK(balanced.metrics().sym_diff == pair.metrics().sym_diff);
}

TEST_CASE("rebalance leaves balanced pairs alone") {
  const InstancePair pair = pair_of({{1, 1}, {1, 2}}, {{1, 1}, {1, 3}});
  CHECK(rebalance(pair) == pair);
}

TEST_CASE("rebalance properties on random instances") {
  std::mt19937 rng(99);
  const auto uniques = oracle::enumerate_unique_sets(6);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(uniques.size()) - 1);
  std::uniform_int_distribution<int> coord(1, 7);
  for (int trial = 0; trial < 400; ++trial) {
    const PointSet& f1 = uniques[static_cast<std::size_t>(pick(rng))];
    std::set<LatticePoint> chosen;
    while (static_cast<int>(chosen.size()) < f1.size()) {
      chosen.insert({coord(rng), coord(rng)});
    }
    const PointSet f2(std::vector<LatticePoint>(chosen.begin(), chosen.end()));
    const InstancePair pair(f1, f2);
    const InstancePair balanced = rebalance(pair);

    CHECK(balanced.metrics().alpha <= pair.metrics().alpha);
    CHECK(balanced.metrics().sym_diff == pair.metrics().sym_diff);
    CHECK(balanced.metrics().overlap == pair.metrics().overlap);
    CHECK(balanced.metrics().size2 == pair.metrics().size2);
    CHECK(projections(balanced.original()).row_sums ==
          projections(balanced.reconstruction()).row_sums);
  }
}

TEST_CASE("equalize grows the reconstruction beyond the last column") {
  const InstancePair pair = pair_of({{1, 1}, {1, 2}}, {{1, 1}});
  const InstancePair eq = equalize(pair);
  CHECK(eq.reconstruction() == PointSet({{1, 1}, {1, 3}}));
  CHECK(eq.metrics().alpha == pair.metrics().alpha);
  CHECK(eq.metrics().alpha == 1);
}

TEST_CASE("equalize shrinks the reconstruction") {
  const InstancePair pair = pair_of({{1, 1}}, {{1, 1}, {2, 1}});
  const InstancePair eq = equalize(pair);
  CHECK(eq.reconstruction() == PointSet({{1, 1}}));
  CHECK(pair.metrics().alpha == 1);
  CHECK(eq.metrics().alpha == 0);
}

TEST_CASE("equalize is the identity on equal sizes") {
  const InstancePair pair = pair_of({{1, 1}}, {{2, 2}});
  CHECK(equalize(pair) == pair);
}

TEST_CASE("equalize properties on random unequal instances") {
  std::mt19937 rng(123);
  const auto uniques = oracle::enumerate_unique_sets(6);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(uniques.size()) - 1);
  std::uniform_int_distribution<int> coord(1, 7);
  std::uniform_int_distribution<int> delta(0, 1);
  for (int trial = 0; trial < 400; ++trial) {
    const PointSet& f1 = uniques[static_cast<std::size_t>(pick(rng))];
    const int size2 = delta(rng) == 0 ? f1.size() - 1 : f1.size() + 1;
    std::set<LatticePoint> chosen;
    while (static_cast<int>(chosen.size()) < size2) {
      chosen.insert({coord(rng), coord(rng)});
    }
    const PointSet f2(std::vector<LatticePoint>(chosen.begin(), chosen.end()));
    const InstancePair pair(f1, f2);
    const InstancePair eq = equalize(pair);

    CHECK(eq.metrics().size1 == eq.metrics().size2);
    CHECK(eq.metrics().alpha <= pair.metrics().alpha);
    CHECK(eq.metrics().overlap == pair.metrics().overlap);
    if (size2 < f1.size()) {  // growing preserves alpha exactly
      CHECK(eq.metrics().alpha == pair.metrics().alpha);
    }
    const Decomposition d = decompose(eq);
    validate_decomposition(d.staircases, eq);
  }
}

TEST_CASE("staircase validation rejects corrupted chains") {
  const PointSet f1({{1, 1}, {1, 2}, {2, 1}});
  const PointSet f2({{1, 3}, {1, 4}, {2, 2}});
  SUBCASE("label on the wrong side") {
    Staircase s{{{{1, 1}, DiffSide::kReconstructionOnly}}};
    CHECK_THROWS_AS(validate_staircase(s, f1, f2), std::invalid_argument);
  }
  SUBCASE("link within a column that steps downward") {
    Staircase s{{{{2, 2}, DiffSide::kReconstructionOnly},
                 {{1, 2}, DiffSide::kOriginalOnly}}};
    validate_staircase(s, f1, f2);  // upward is fine
    Staircase bad{{{{1, 2}, DiffSide::kOriginalOnly},
                   {{2, 2}, DiffSide::kReconstructionOnly}}};
    // original-only -> reconstruction-only must share a row, not a column
    CHECK_THROWS_AS(validate_staircase(bad, f1, f2), std::invalid_argument);
  }
  SUBCASE("labels must alternate") {
    Staircase s{{{{1, 1}, DiffSide::kOriginalOnly},
                 {{1, 2}, DiffSide::kOriginalOnly}}};
    CHECK_THROWS_AS(validate_staircase(s, f1, f2), std::invalid_argument);
  }
}
